from enum import IntEnum


class OrbitKind(IntEnum):
    POINT = 0
    PLANE = 2
    CYLINDER = 3  # parabolic cylinder

    @property
    def label(self) -> str:
        return self.name.lower()
