from enum import IntEnum


class GroupFamily(IntEnum):
    CUSTOM = 0
    HEISENBERG = 1
    DYNIN_FOLLAND = 2
    ENGEL = 3

    @classmethod
    def from_name(cls, name: str) -> "GroupFamily":
        key = name.strip().lower().replace("_", "-")
        try:
            return _FAMILY_NAMES[key]
        except KeyError:
            raise ValueError(f"unknown group family {name!r}") from None


_FAMILY_NAMES = {
    "custom": GroupFamily.CUSTOM,
    "heisenberg": GroupFamily.HEISENBERG,
    "h": GroupFamily.HEISENBERG,
    "df": GroupFamily.DYNIN_FOLLAND,
    "dynin-folland": GroupFamily.DYNIN_FOLLAND,
    "engel": GroupFamily.ENGEL,
}
