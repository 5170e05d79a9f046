from enum import IntEnum
from typing import Tuple


class Problem(IntEnum):
    EUCLID_1D = 0  # harmonic oscillator on R
    ANHARMONIC_1D = 1
    HHO_H1 = 2  # harmonic oscillator on H_1

    @property
    def label(self) -> str:
        return _PROBLEM_LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "Problem":
        for problem, name in _PROBLEM_LABELS.items():
            if name == label:
                return problem
        raise ValueError(f"unknown problem {label!r}")

    @classmethod
    def labels(cls) -> Tuple[str, ...]:
        return tuple(_PROBLEM_LABELS.values())


_PROBLEM_LABELS = {
    Problem.EUCLID_1D: "euclid1d",
    Problem.ANHARMONIC_1D: "anharm1d",
    Problem.HHO_H1: "hho-h1",
}
