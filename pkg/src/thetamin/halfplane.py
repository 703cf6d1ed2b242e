"""Upper half-plane points, the lattice symmetry group, and domain reduction.

The group acting here is generated by z -> -1/z, z -> z+1 and the
anti-holomorphic reflection z -> -conj(z).  Every orbit has a representative
in the closure of the fundamental domain

    D = { z = x + iy : |z| > 1, 0 < x < 1/2 },

and ``reduce`` finds it by the classical translate/invert loop followed by a
final reflection of x into [0, 1/2].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import IterationLimitError

__all__ = [
    "UpperHalfPoint",
    "GroupElement",
    "Region",
    "DomainMembership",
    "HEXAGONAL_POINT",
    "apply",
    "reduce",
    "membership",
]

BOUNDARY_TOL = 1e-12
REDUCE_ITERATION_CAP = 10_000


@dataclass(frozen=True)
class UpperHalfPoint:
    """A lattice-shape parameter z = x + iy with y > 0."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got {self.x}, {self.y}")
        if self.y <= 0.0:
            raise ValueError(f"need y > 0, got y = {self.y}")

    @property
    def abs2(self) -> float:
        return self.x * self.x + self.y * self.y

    def as_complex(self) -> complex:
        return complex(self.x, self.y)


HEXAGONAL_POINT = UpperHalfPoint(0.5, math.sqrt(3.0) / 2.0)


@dataclass(frozen=True)
class GroupElement:
    """Integer Moebius map, optionally preceded by the reflection z -> -conj(z).

    Maps z to (a*w + b)/(c*w + d) where w = -conj(z) if ``reflected`` else z.
    """

    a: int = 1
    b: int = 0
    c: int = 0
    d: int = 1
    reflected: bool = False

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant a*d - b*c must be 1")

    @staticmethod
    def identity() -> "GroupElement":
        return GroupElement()

    @staticmethod
    def translation(k: int) -> "GroupElement":
        return GroupElement(1, k, 0, 1)

    @staticmethod
    def inversion() -> "GroupElement":
        return GroupElement(0, -1, 1, 0)

    @staticmethod
    def reflection() -> "GroupElement":
        return GroupElement(1, 0, 0, 1, reflected=True)

    def compose(self, other: "GroupElement") -> "GroupElement":
        """Return the composition self-after-other."""
        # For real-entry Moebius maps, -conj(M w) = M~ (-conj(w)) with
        # M~ = [[a, -b], [-c, d]], so a leading reflection can be pushed
        # through the inner matrix.
        if not self.reflected:
            a = self.a * other.a + self.b * other.c
            b = self.a * other.b + self.b * other.d
            c = self.c * other.a + self.d * other.c
            d = self.c * other.b + self.d * other.d
            return GroupElement(a, b, c, d, other.reflected)
        oa, ob, oc, od = other.a, -other.b, -other.c, other.d
        a = self.a * oa + self.b * oc
        b = self.a * ob + self.b * od
        c = self.c * oa + self.d * oc
        d = self.c * ob + self.d * od
        return GroupElement(a, b, c, d, not other.reflected)


class Region(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class DomainMembership:
    """Classification of a point against the fundamental domain."""

    region: Region
    distance: float


def apply(g: GroupElement, z: UpperHalfPoint) -> UpperHalfPoint:
    """Apply a group element to a point; the image stays in the half plane."""
    w = complex(-z.x, z.y) if g.reflected else z.as_complex()
    num = g.a * w + g.b
    den = g.c * w + g.d
    img = num / den
    return UpperHalfPoint(img.real, img.imag)


def reduce(z: UpperHalfPoint,
           tol: float = BOUNDARY_TOL,
           iteration_cap: int = REDUCE_ITERATION_CAP) -> tuple[UpperHalfPoint, GroupElement]:
    """Map z into the closed fundamental domain; returns (point, element).

    The returned element g satisfies apply(g, z) == point (up to roundoff).
    Raises IterationLimitError for numerically degenerate inputs near the
    real axis.
    """
    x, y = z.x, z.y
    g = GroupElement.identity()
    for _ in range(iteration_cap):
        k = -math.floor(x + 0.5)
        if x + k <= -0.5:  # land in (-1/2, 1/2]
            k += 1
        if k != 0:
            x += k
            g = GroupElement.translation(k).compose(g)
        r2 = x * x + y * y
        if r2 < 1.0 - tol:
            # z -> -1/z
            x, y = -x / r2, y / r2
            g = GroupElement.inversion().compose(g)
        else:
            break
    else:
        raise IterationLimitError(
            f"point ({z.x}, {z.y}) not reduced after {iteration_cap} iterations")
    if x < 0.0:
        x = -x
        g = GroupElement.reflection().compose(g)
    return UpperHalfPoint(x, y), g


def membership(z: UpperHalfPoint, tol: float = BOUNDARY_TOL) -> DomainMembership:
    """Classify z against {|z| > 1, 0 < x < 1/2} with a boundary tolerance."""
    distance = min(math.sqrt(z.abs2) - 1.0, z.x, 0.5 - z.x)
    if distance > tol:
        region = Region.INTERIOR
    elif distance >= -tol:
        region = Region.BOUNDARY
    else:
        region = Region.OUTSIDE
    return DomainMembership(region, distance)
