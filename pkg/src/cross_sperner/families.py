"""Bitmask families of subsets of the ground set {1, ..., n}.

A subset is stored as an unsigned integer whose bit i-1 says whether
element i is present. A family keeps its members strictly increasing by
mask value, so structurally equal families compare equal and every
serialized sequence is reproducible bit for bit.

All types here are frozen; sharing them across worker processes is safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_GROUND = 24


@dataclass(frozen=True)
class GroundSet:
    """The ground set {1, ..., n} with 1 <= n <= MAX_GROUND."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise ValueError(f"ground set size must be an int, got {self.n!r}")
        if not 1 <= self.n <= MAX_GROUND:
            raise ValueError(
                f"ground set size must be in 1..{MAX_GROUND}, got {self.n}"
            )

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def masks(self) -> range:
        """All 2^n subset masks in increasing order."""
        return range(1 << self.n)

    def mask_of(self, elements: Iterable[int]) -> int:
        bits = 0
        for e in elements:
            if not 1 <= e <= self.n:
                raise ValueError(f"element {e} outside ground set 1..{self.n}")
            bits |= 1 << (e - 1)
        return bits

    def elements_of(self, bits: int) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if bits >> i & 1)


@dataclass(frozen=True)
class SubsetMask:
    """One subset of a ground set, as a bit vector."""

    bits: int
    ground: GroundSet

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= self.ground.full_mask:
            raise ValueError(
                f"mask {self.bits:#x} out of range for ground set size {self.ground.n}"
            )

    @classmethod
    def of(cls, ground: GroundSet, *elements: int) -> "SubsetMask":
        return cls(ground.mask_of(elements), ground)

    def elements(self) -> tuple[int, ...]:
        return self.ground.elements_of(self.bits)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        if self.bits == 0:
            return "{}"
        return "{" + ",".join(str(e) for e in self.elements()) + "}"


@dataclass(frozen=True)
class Family:
    """A family of subsets, strictly increasing by mask value."""

    ground: GroundSet
    members: tuple[SubsetMask, ...]

    def __post_init__(self) -> None:
        prev = -1
        for m in self.members:
            if m.ground != self.ground:
                raise ValueError("family member belongs to a different ground set")
            if m.bits <= prev:
                raise ValueError(
                    "family members must be strictly increasing, without duplicates"
                )
            prev = m.bits

    @classmethod
    def from_bits(cls, ground: GroundSet, bits: Iterable[int]) -> "Family":
        """Build a family from raw masks; sorts and drops duplicates."""
        return cls(
            ground,
            tuple(SubsetMask(b, ground) for b in sorted(set(bits))),
        )

    @classmethod
    def of(cls, ground: GroundSet, *element_sets: Iterable[int]) -> "Family":
        return cls.from_bits(ground, (ground.mask_of(s) for s in element_sets))

    def mask_tuple(self) -> tuple[int, ...]:
        return tuple(m.bits for m in self.members)

    def bitset(self) -> int:
        """The family as one integer with bit a set iff mask a is a member."""
        acc = 0
        for m in self.members:
            acc |= 1 << m.bits
        return acc

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.members)

    def __str__(self) -> str:
        return "[" + " ".join(str(m) for m in self.members) + "]"


@dataclass(frozen=True)
class FamilyPair:
    """An ordered pair (F, G) of families over one ground set."""

    f: Family
    g: Family

    def __post_init__(self) -> None:
        if self.f.ground != self.g.ground:
            raise ValueError("paired families must share a ground set")

    @property
    def ground(self) -> GroundSet:
        return self.f.ground

    def __iter__(self) -> Iterator[Family]:
        return iter((self.f, self.g))

    def __str__(self) -> str:
        return f"F={self.f} G={self.g}"


def _require_same_ground(s: SubsetMask, t: SubsetMask) -> None:
    if s.ground != t.ground:
        raise ValueError("subset masks belong to different ground sets")


def subset_leq(s: SubsetMask, t: SubsetMask) -> bool:
    """True iff s is a subset of t (equality included)."""
    _require_same_ground(s, t)
    return s.bits & ~t.bits == 0


def masks_incomparable(a: int, b: int) -> bool:
    """Raw-mask incomparability: neither a <= b nor b <= a.

    Equal masks are comparable, so this is False on the diagonal.
    """
    ab = a & b
    return ab != a and ab != b


def incomparable(s: SubsetMask, t: SubsetMask) -> bool:
    """True iff neither set contains the other. Containment here is
    non-strict, so a set is always comparable with itself."""
    _require_same_ground(s, t)
    return masks_incomparable(s.bits, t.bits)


def is_cross_sperner(pair: FamilyPair) -> bool:
    """True iff every member of F is incomparable with every member of G."""
    ga = pair.g.mask_tuple()
    for a in pair.f.mask_tuple():
        for b in ga:
            ab = a & b
            if ab == a or ab == b:
                return False
    return True


def find_violation(pair: FamilyPair) -> Optional[tuple[SubsetMask, SubsetMask]]:
    """First comparable pair (A, B) with A in F and B in G, scanning in
    member order; None when the pair is cross-Sperner."""
    for a in pair.f.members:
        for b in pair.g.members:
            if not masks_incomparable(a.bits, b.bits):
                return (a, b)
    return None


def intersection_family(pair: FamilyPair) -> Family:
    """The family { A & B : A in F, B in G }, empty if either side is."""
    fa = pair.f.mask_tuple()
    ga = pair.g.mask_tuple()
    return Family.from_bits(pair.ground, {a & b for a in fa for b in ga})


def maximal_partner(g: Family) -> Family:
    """The inclusion-maximal family incomparable with everything in g.

    For empty g this is all 2^n subsets. No cross-Sperner partner of g can
    contain a mask missing here, so searches may replace any feasible
    left-hand family by this one without shrinking the intersection family.
    """
    gm = g.mask_tuple()
    keep = []
    for a in g.ground.masks():
        for b in gm:
            ab = a & b
            if ab == a or ab == b:
                break
        else:
            keep.append(a)
    return Family.from_bits(g.ground, keep)


def permute_mask(bits: int, perm: Sequence[int]) -> int:
    """Apply a permutation of {0, ..., n-1} to the bit positions of a mask."""
    out = 0
    i = 0
    while bits:
        if bits & 1:
            out |= 1 << perm[i]
        bits >>= 1
        i += 1
    return out


def permute_family(fam: Family, perm: Sequence[int]) -> Family:
    return Family.from_bits(
        fam.ground, (permute_mask(b, perm) for b in fam.mask_tuple())
    )


def permute_pair(pair: FamilyPair, perm: Sequence[int]) -> FamilyPair:
    return FamilyPair(permute_family(pair.f, perm), permute_family(pair.g, perm))


def pair_key(pair: FamilyPair) -> tuple[int, ...]:
    """Concatenated mask sequences, F first, then G."""
    return pair.f.mask_tuple() + pair.g.mask_tuple()


def canonicalize_pair(pair: FamilyPair) -> FamilyPair:
    """The relabeling-least pair in the orbit of (F, G).

    Minimizes over all n! permutations of the ground set, comparing the
    concatenated sorted mask sequences of F then G. Idempotent, constant
    on orbits, and never swaps the two roles. Factorial in n; meant for
    witness deduplication at small n.
    """
    n = pair.ground.n
    fa = pair.f.mask_tuple()
    ga = pair.g.mask_tuple()
    best: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    best_key: Optional[tuple[int, ...]] = None
    for perm in itertools.permutations(range(n)):
        pf = tuple(sorted(permute_mask(b, perm) for b in fa))
        pg = tuple(sorted(permute_mask(b, perm) for b in ga))
        key = pf + pg
        if best_key is None or key < best_key:
            best_key = key
            best = (pf, pg)
    assert best is not None
    return FamilyPair(
        Family.from_bits(pair.ground, best[0]),
        Family.from_bits(pair.ground, best[1]),
    )
