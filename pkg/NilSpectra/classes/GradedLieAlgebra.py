from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from attrs import define, field

from ..enums import GroupFamily
from ..exceptions import InvalidParameterError

StructureConstants = Dict[Tuple[int, int, int], Fraction]

LabelPattern = re.compile(r"^(?P<letter>[A-Za-z]+)(?:_\{?(?P<number>\d+)\}?)?$")


def parse_label(label: str) -> Tuple[str, Optional[int]]:
    """Splits a basis label like ``Y_3`` into ``("Y", 3)``; ``Z`` gives ``("Z", None)``."""
    match = LabelPattern.match(label.strip())
    if match is None:
        raise InvalidParameterError(f"malformed basis label {label!r}", parameter="label")
    number = match.group("number")
    return match.group("letter"), int(number) if number is not None else None


@define(frozen=True, slots=True)
class GradedLieAlgebra:
    """A graded nilpotent Lie algebra given on a fixed basis.

    Indices are 0-based positions in ``labels``. Only constants with i < j are stored,
    ``[e_i, e_j] = sum_k c_ij^k e_k``; the entry for (j, i) is implied by antisymmetry.
    """

    labels: Tuple[str, ...] = field(converter=tuple)
    structure_constants: StructureConstants = field(repr=False)
    strata: Tuple[int, ...] = field(converter=tuple)
    step: int
    family: GroupFamily = GroupFamily.CUSTOM
    n: Optional[int] = None
    _table: Dict[Tuple[int, int], Tuple[Tuple[int, Fraction], ...]] = field(
        init=False, repr=False, eq=False, factory=dict
    )

    def __attrs_post_init__(self):
        dim = len(self.labels)
        if dim == 0:
            raise InvalidParameterError("an algebra needs at least one basis vector", parameter="labels")
        if len(set(self.labels)) != dim:
            raise InvalidParameterError("basis labels must be unique", parameter="labels")
        if len(self.strata) != dim:
            raise InvalidParameterError(
                f"expected {dim} stratum numbers, got {len(self.strata)}", parameter="strata"
            )
        if any(s < 1 for s in self.strata):
            raise InvalidParameterError("stratum numbers must be positive", parameter="strata")
        if self.step < 1:
            raise InvalidParameterError("the nilpotency step must be positive", parameter="step")

        constants: StructureConstants = {}
        table: Dict[Tuple[int, int], List[Tuple[int, Fraction]]] = {}
        for (i, j, k), value in self.structure_constants.items():
            if not (0 <= i < j < dim and 0 <= k < dim):
                raise InvalidParameterError(
                    f"structure constant index ({i}, {j}, {k}) out of range or not ordered i < j",
                    parameter="structure_constants",
                )
            value = Fraction(value)
            if value == 0:
                continue
            constants[(i, j, k)] = value
            table.setdefault((i, j), []).append((k, value))
        object.__setattr__(self, "structure_constants", constants)
        object.__setattr__(self, "_table", {key: tuple(sorted(terms)) for key, terms in table.items()})

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidParameterError(f"unknown basis label {label!r}", parameter="label") from None

    def resolve(self, key) -> int:
        """Accepts a basis label or a 0-based position."""
        if isinstance(key, str):
            return self.index(key)
        position = int(key)
        if not 0 <= position < self.dim:
            raise InvalidParameterError(f"basis index {position} out of range", parameter="index")
        return position

    def bracket_terms(self, i: int, j: int) -> Tuple[Tuple[int, Fraction], ...]:
        """Returns ``[e_i, e_j]`` as ``((k, c), ...)``."""
        if i == j:
            return ()
        if i < j:
            return self._table.get((i, j), ())
        return tuple((k, -c) for k, c in self._table.get((j, i), ()))

    def indices_of_stratum(self, stratum: int) -> Tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.strata) if s == stratum)

    @property
    def depth(self) -> int:
        return max(self.strata)

    def central_indices(self) -> Tuple[int, ...]:
        """Basis vectors that bracket to zero with every basis vector."""
        involved = set()
        for i, j, _ in self.structure_constants:
            involved.add(i)
            involved.add(j)
        return tuple(i for i in range(self.dim) if i not in involved)

    def __repr__(self) -> str:
        return f"GradedLieAlgebra({self.family.name}, n={self.n}, dim={self.dim})"


__all__ = ["GradedLieAlgebra", "StructureConstants", "parse_label"]
