"""The two-block construction that attains the extremal intersection count.

Split the ground set into disjoint nonempty blocks X and Y. Padding the
proper subsets of X with all of Y, and the proper subsets of Y with all
of X, gives a cross-Sperner pair whose intersection family has exactly
(2^|X| - 1)(2^|Y| - 1) members. The balanced split realizes the closed
form 2^n - 2^floor(n/2) - 2^ceil(n/2) + 1, which is the exact maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .families import Family, FamilyPair, GroundSet, SubsetMask


def proper_submasks(mask: int) -> Iterator[int]:
    """All strict submasks of mask, the empty mask included."""
    if mask == 0:
        return
    sub = mask
    while True:
        sub = (sub - 1) & mask
        yield sub
        if sub == 0:
            return


@dataclass(frozen=True)
class TypeSplit:
    """An ordered partition (X, Y) of the ground set, both blocks nonempty."""

    x: SubsetMask
    y: SubsetMask

    def __post_init__(self) -> None:
        if self.x.ground != self.y.ground:
            raise ValueError("split blocks belong to different ground sets")
        if self.x.bits == 0 or self.y.bits == 0:
            raise ValueError("both split blocks must be nonempty")
        if self.x.bits & self.y.bits:
            raise ValueError("split blocks must be disjoint")
        if self.x.bits | self.y.bits != self.x.ground.full_mask:
            raise ValueError("split blocks must cover the ground set")

    @property
    def ground(self) -> GroundSet:
        return self.x.ground

    def __str__(self) -> str:
        return f"(X={self.x}, Y={self.y})"


def split_of(ground: GroundSet, x_elements) -> TypeSplit:
    """Split from the elements of X; Y is the complement."""
    xb = ground.mask_of(x_elements)
    return TypeSplit(SubsetMask(xb, ground), SubsetMask(ground.full_mask ^ xb, ground))


def balanced_split(ground: GroundSet) -> TypeSplit:
    """X = {1, ..., floor(n/2)}. Requires n >= 2."""
    if ground.n < 2:
        raise ValueError("a split needs at least two elements")
    xb = (1 << (ground.n // 2)) - 1
    return TypeSplit(SubsetMask(xb, ground), SubsetMask(ground.full_mask ^ xb, ground))


def type_xy(split: TypeSplit) -> FamilyPair:
    """The pair F = {A | Y : A strict subset of X}, G = {B | X : B strict subset of Y}."""
    g = split.ground
    xb, yb = split.x.bits, split.y.bits
    f_fam = Family.from_bits(g, (a | yb for a in proper_submasks(xb)))
    g_fam = Family.from_bits(g, (b | xb for b in proper_submasks(yb)))
    return FamilyPair(f_fam, g_fam)


def construction_intersection_size(a: int, b: int) -> int:
    """(2^a - 1)(2^b - 1) for block sizes a and b."""
    if a < 1 or b < 1:
        raise ValueError("block sizes must be positive")
    return ((1 << a) - 1) * ((1 << b) - 1)


def m_formula(n: int) -> int:
    """Closed form 2^n - 2^floor(n/2) - 2^ceil(n/2) + 1 for the maximum.

    n = 1 is allowed and gives 0, though it sits outside the range where
    the closed form is backed by the extremal argument (n > 1).
    """
    if n < 1:
        raise ValueError("ground set size must be positive")
    return (1 << n) - (1 << (n // 2)) - (1 << ((n + 1) // 2)) + 1


def optimal_split(n: int) -> int:
    """The block size |X| maximizing (2^|X| - 1)(2^(n-|X|) - 1).

    Scans every size; ties break toward the smaller block, which lands on
    floor(n/2).
    """
    if n < 2:
        raise ValueError("a split needs at least two elements")
    best_a = 1
    best_v = construction_intersection_size(1, n - 1)
    for a in range(2, n):
        v = construction_intersection_size(a, n - a)
        if v > best_v:
            best_a, best_v = a, v
    return best_a


def classify_type_xy(pair: FamilyPair) -> Optional[TypeSplit]:
    """Recover the split that generates this exact pair, if one does.

    The candidate is forced: Y must be the common intersection of F and X
    the common intersection of G. The pair classifies only when
    regenerating from that candidate reproduces both member sequences
    exactly. Returns None otherwise; n = 1 never classifies because no
    valid split exists.
    """
    fa = pair.f.mask_tuple()
    ga = pair.g.mask_tuple()
    if not fa or not ga:
        return None
    yb = pair.ground.full_mask
    for m in fa:
        yb &= m
    xb = pair.ground.full_mask
    for m in ga:
        xb &= m
    if xb == 0 or yb == 0 or (xb & yb) or (xb | yb) != pair.ground.full_mask:
        return None
    split = TypeSplit(SubsetMask(xb, pair.ground), SubsetMask(yb, pair.ground))
    built = type_xy(split)
    if built.f.mask_tuple() != fa or built.g.mask_tuple() != ga:
        return None
    return split
