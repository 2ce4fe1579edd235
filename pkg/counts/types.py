"""Value types shared by the counting formulas."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, List, Sequence, Tuple

from algebra.scalar import is_integral
from utils.errors import OutsideTheoremRange


class AlphaMethod(str, Enum):
    """How ``alpha`` is evaluated.

    LAGRANGE extracts a coefficient of a power of ``u / h_b(u)``; POLYSUM uses
    the expansion that is manifestly polynomial in ``b``; RECURRENCE assembles
    the value from arrow-tree counts.
    """

    LAGRANGE = "lagrange"
    POLYSUM = "polysum"
    RECURRENCE = "recurrence"


@dataclass(frozen=True)
class FaceSpec:
    """A face-degree profile: ``n`` labeled faces of degrees ``2*m_i``.

    ``b`` is half the irreducibility girth. Symbolic half-degrees are allowed
    for the formulas; the oracles need integers.
    """

    b: Any
    half_degrees: Tuple[Any, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "half_degrees", tuple(self.half_degrees))
        for m in self.half_degrees:
            if is_integral(m) and m < 1:
                raise OutsideTheoremRange(f"half-degrees must be positive, got {m}")
        if is_integral(self.b) and self.b < 1:
            raise OutsideTheoremRange(f"b must be positive, got {self.b}")

    @classmethod
    def from_degrees(cls, b: int, degrees: Sequence[int]) -> "FaceSpec":
        """Build a ``FaceSpec`` from full face degrees, which must all be even."""
        odd = [d for d in degrees if d % 2]
        if odd:
            raise OutsideTheoremRange(f"face degrees must be even, got {odd}")
        return cls(b, tuple(d // 2 for d in degrees))

    @property
    def n(self) -> int:
        return len(self.half_degrees)

    @property
    def edge_count(self) -> int:
        return int(sum(self.half_degrees))

    @property
    def degrees(self) -> List[int]:
        return [2 * m for m in self.half_degrees]

    def is_angulation(self) -> bool:
        return all(m == self.b for m in self.half_degrees)
