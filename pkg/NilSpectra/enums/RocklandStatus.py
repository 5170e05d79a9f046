from enum import IntEnum


class RocklandStatus(IntEnum):
    UNVALIDATED = 0
    HOMOGENEOUS_UNVERIFIED = 1
    VERIFIED_CLASSICAL = 2

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")
