"""Circular bitstrings, the symmetries of the marked circle, and side lists.

A perimeter-n polygon with integer sides is encoded by n equally spaced
points on a circle with the corner points marked: an n-tuple over {0,1}.
Position i of the tuple is the (i+1)-th point read clockwise; every
congruence below is stated once, on 0-based positions, and nowhere else.

Rotations send position i to i+q (mod n) and reflections send i to
q-i (mod n); together these 2n maps form the symmetry group under which
two corner tuples describe the same polygon.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable, Iterator

__all__ = [
    "CircularTuple",
    "ElementClass",
    "ElementKind",
    "GroupElement",
    "NotAPolygonError",
    "SideLengths",
    "apply",
    "bad_block_threshold",
    "classify",
    "cyclic_group",
    "dihedral_group",
    "element_order",
    "is_good",
    "to_sides",
    "weight",
    "zero_blocks",
]


class NotAPolygonError(ValueError):
    """Raised when a circular tuple does not mark the corners of a polygon."""


@dataclass(frozen=True)
class CircularTuple:
    """An n-tuple over {0,1}, read clockwise around the circle (n >= 3)."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) < 3:
            raise ValueError("circular tuples need at least 3 positions")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("tuple entries must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.bits)

    @classmethod
    def from_text(cls, text: str) -> CircularTuple:
        """Parse a '0'/'1' string; the leftmost character is position 0."""
        if set(text) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_ones(cls, n: int, ones: Iterable[int]) -> CircularTuple:
        """The n-tuple whose 1-entries sit at the given 0-based positions."""
        bits = [0] * n
        for i in ones:
            if not 0 <= i < n:
                raise ValueError(f"position {i} outside 0..{n - 1}")
            bits[i] = 1
        return cls(tuple(bits))

    def ones(self) -> tuple[int, ...]:
        """Ascending 0-based positions of the 1-entries."""
        return tuple(i for i, b in enumerate(self.bits) if b)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class GroupElement:
    """One symmetry of the n marked circle points: a rotation or a reflection.

    With offset q, a rotation maps position i to i+q (mod n) and a
    reflection maps i to q-i (mod n).  Rotation offset 0 is the identity.
    """

    n: int
    q: int
    is_reflection: bool = False

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("the circle needs at least 3 points")
        if not 0 <= self.q < self.n:
            raise ValueError(f"offset {self.q} not reduced mod {self.n}")

    @classmethod
    def rotation(cls, n: int, q: int) -> GroupElement:
        return cls(n, q % n, False)

    @classmethod
    def reflection(cls, n: int, q: int) -> GroupElement:
        return cls(n, q % n, True)

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        return cls(n, 0, False)

    def permutes(self, i: int) -> int:
        """Image of position i under this symmetry."""
        if self.is_reflection:
            return (self.q - i) % self.n
        return (i + self.q) % self.n

    def compose(self, other: GroupElement) -> GroupElement:
        """The symmetry acting as `other` first, then `self`."""
        if self.n != other.n:
            raise ValueError(f"cannot compose elements on {self.n} and {other.n} points")
        if self.is_reflection:
            q = (self.q - other.q) % self.n
        else:
            q = (self.q + other.q) % self.n
        return GroupElement(self.n, q, self.is_reflection != other.is_reflection)

    def inverse(self) -> GroupElement:
        # reflections are involutions; a rotation inverts by negating its offset
        if self.is_reflection:
            return self
        return GroupElement(self.n, (-self.q) % self.n, False)

    def fixed_points(self) -> tuple[int, ...]:
        """Positions mapped to themselves."""
        return tuple(i for i in range(self.n) if self.permutes(i) == i)

    def __str__(self) -> str:
        return f"{'reflection' if self.is_reflection else 'rotation'}(n={self.n}, q={self.q})"


class ElementKind(Enum):
    IDENTITY = "identity"
    ROTATION = "rotation"
    REFLECTION_ODD = "reflection-odd"
    REFLECTION_EVEN_NO_FIXED_POINT = "reflection-even-no-fixed-point"
    REFLECTION_EVEN_TWO_FIXED_POINTS = "reflection-even-two-fixed-points"


@dataclass(frozen=True)
class ElementClass:
    """The class of a symmetry, as far as fixed-tuple counts care.

    All elements of one class fix equally many tuples, so the counting
    formulas are stated per class: the identity, the rotations of each
    order d > 1, and (split by the parity of n) the reflections with one,
    zero, or two fixed points.
    """

    kind: ElementKind
    order: int | None = None

    def __post_init__(self) -> None:
        if (self.kind is ElementKind.ROTATION) != (self.order is not None):
            raise ValueError("exactly the non-trivial rotation classes carry an order")
        if self.order is not None and self.order < 2:
            raise ValueError("rotation classes have order >= 2")

    @classmethod
    def identity(cls) -> ElementClass:
        return cls(ElementKind.IDENTITY)

    @classmethod
    def rotation(cls, order: int) -> ElementClass:
        return cls(ElementKind.ROTATION, order)

    @classmethod
    def reflection_odd(cls) -> ElementClass:
        return cls(ElementKind.REFLECTION_ODD)

    @classmethod
    def reflection_even_no_fixed_point(cls) -> ElementClass:
        return cls(ElementKind.REFLECTION_EVEN_NO_FIXED_POINT)

    @classmethod
    def reflection_even_two_fixed_points(cls) -> ElementClass:
        return cls(ElementKind.REFLECTION_EVEN_TWO_FIXED_POINTS)

    def __str__(self) -> str:
        if self.kind is ElementKind.ROTATION:
            return f"rotation({self.order})"
        return self.kind.value


def cyclic_group(n: int) -> Iterator[GroupElement]:
    """The n rotations."""
    return (GroupElement.rotation(n, q) for q in range(n))


def dihedral_group(n: int) -> Iterator[GroupElement]:
    """All 2n symmetries: the n rotations, then the n reflections."""
    yield from cyclic_group(n)
    for q in range(n):
        yield GroupElement.reflection(n, q)


def apply(sigma: GroupElement, a: CircularTuple) -> CircularTuple:
    """Act on a tuple by permuting coordinates: entry i of the result is
    read from the position that sigma maps onto i."""
    if sigma.n != a.n:
        raise ValueError(f"element on {sigma.n} points cannot act on a {a.n}-tuple")
    inv = sigma.inverse()
    return CircularTuple(tuple(a.bits[inv.permutes(i)] for i in range(a.n)))


def element_order(sigma: GroupElement) -> int:
    """Least d >= 1 with sigma composed d times equal to the identity."""
    if sigma.is_reflection:
        return 2
    return sigma.n // gcd(sigma.n, sigma.q)


def classify(sigma: GroupElement) -> ElementClass:
    """Class of sigma: identity, rotation tagged by order, or reflection
    split by fixed-point count.

    On an even circle the fixed points of a reflection solve 2i = q (mod n),
    soluble exactly when q is even (two solutions); on an odd circle every
    reflection fixes a single point.
    """
    if not sigma.is_reflection:
        d = element_order(sigma)
        return ElementClass.identity() if d == 1 else ElementClass.rotation(d)
    if sigma.n % 2 == 1:
        return ElementClass.reflection_odd()
    if sigma.q % 2 == 0:
        return ElementClass.reflection_even_two_fixed_points()
    return ElementClass.reflection_even_no_fixed_point()


def weight(a: CircularTuple) -> int:
    """Number of 1-entries (the number of marked corners)."""
    return sum(a.bits)


def zero_blocks(a: CircularTuple) -> list[int]:
    """Lengths of the maximal circular runs of 0s.

    A run may wrap past the last position; a leading and a trailing run are
    one block.  The all-zero tuple is a single run of length n.
    """
    if not any(a.bits):
        return [a.n]
    # start scanning just after a 1 so every run is contiguous in scan order
    start = a.bits.index(1) + 1
    runs = []
    run = 0
    for off in range(a.n):
        if a.bits[(start + off) % a.n]:
            if run:
                runs.append(run)
            run = 0
        else:
            run += 1
    if run:
        runs.append(run)
    return runs


def bad_block_threshold(n: int) -> int:
    """Shortest zero-run length that rules out a polygon on n points."""
    k = n // 2
    return k - 1 if n % 2 == 0 else k


def is_good(a: CircularTuple) -> bool:
    """True iff the 1-entries of the tuple mark the corners of a polygon.

    Equivalently, every circular zero run is shorter than the threshold:
    a run at the threshold would force a side of at least half the
    perimeter.  Good tuples automatically have at least three 1s.
    """
    limit = bad_block_threshold(a.n)
    return all(run < limit for run in zero_blocks(a))


@dataclass(frozen=True)
class SideLengths:
    """Clockwise side lengths of an integer polygon.

    Every side is a positive integer strictly below half the perimeter,
    and there are at least three of them.
    """

    sides: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sides) < 3:
            raise ValueError("a polygon has at least 3 sides")
        p = sum(self.sides)
        if any(s < 1 or 2 * s >= p for s in self.sides):
            raise ValueError("each side must be a positive integer below half the perimeter")

    @property
    def m(self) -> int:
        return len(self.sides)

    @property
    def perimeter(self) -> int:
        return sum(self.sides)


def to_sides(a: CircularTuple) -> SideLengths:
    """Side lengths of the polygon with corners at the 1-positions.

    Sides are the circular gaps between consecutive corners, read clockwise
    starting from the smallest 1-position (a fixed convention so output is
    reproducible).  A zero run of length l corresponds to a side of length
    l+1.
    """
    if not is_good(a):
        raise NotAPolygonError(f"{a} does not mark a polygon (weight {weight(a)}, "
                               f"zero runs {zero_blocks(a)})")
    corners = a.ones()
    sides = [corners[i + 1] - corners[i] for i in range(len(corners) - 1)]
    sides.append(a.n - corners[-1] + corners[0])
    return SideLengths(tuple(sides))
