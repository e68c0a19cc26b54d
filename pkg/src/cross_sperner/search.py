"""Exact search for the largest intersection family over cross-Sperner pairs.

The search enumerates candidate right-hand families G and pairs each one
with its inclusion-maximal partner F(G), the family of all masks
incomparable with every member of G. Any feasible left-hand family is a
subset of F(G) and the intersection family is monotone under inclusion,
so the maximum over G alone equals the maximum over all ordered pairs.

Three pruning levels trade enumeration width against structural
assumptions about at least one maximum-achieving pair:

  none            all families G over [n]; no assumptions.
  common-element  some maximum pair has an element shared by every member
                  of G; relabeling fixes that element to 1, and [n] is
                  never a useful member.
  full            additionally, some such G contains a set of size n - 1,
                  which a relabeling inside the stabilizer of element 1
                  fixes to {1, ..., n-1}, kept as a mandatory member.

Candidates containing the empty set or the whole ground set force an
empty partner and are skipped at every level. candidates_examined always
reports the closed-form size of the level's candidate space: the walk
covers subtrees by a sound monotone bound (seeded with the evaluated
balanced-split construction, never with the closed-form value) instead of
visiting every leaf, and counts the covered leaves arithmetically.

Reports are deterministic. m_value, witnesses and candidates_examined are
identical across runs, worker counts and schedules; only elapsed time
varies. Witness lists keep ordered pairs: role order is never collapsed,
though relabeling may happen to identify the two orders of a symmetric
pair.
"""

from __future__ import annotations

import enum
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .constructions import (
    TypeSplit,
    balanced_split,
    classify_type_xy,
    m_formula,
    type_xy,
)
from .families import Family, FamilyPair, GroundSet, canonicalize_pair, pair_key


class Pruning(enum.Enum):
    NONE = "none"
    COMMON_ELEMENT = "common-element"
    FULL = "full"

    @classmethod
    def from_string(cls, text: str) -> "Pruning":
        for level in cls:
            if level.value == text:
                return level
        raise ValueError(f"unknown pruning level {text!r}")


_MAX_N = {Pruning.NONE: 4, Pruning.COMMON_ELEMENT: 5, Pruning.FULL: 7}

_ASSUMPTIONS = {
    Pruning.NONE: (),
    Pruning.COMMON_ELEMENT: ("common-element",),
    Pruning.FULL: ("common-element", "co-singleton-member"),
}


@dataclass(frozen=True)
class ExtremalWitness:
    """One canonical class of maximum-achieving mutually-maximal pairs."""

    pair: FamilyPair
    i_size: int
    split: Optional[TypeSplit]


@dataclass(frozen=True)
class SearchReport:
    n: int
    pruning: Pruning
    m_value: int
    formula_value: int
    witnesses: tuple[ExtremalWitness, ...]
    candidates_examined: int
    mutually_maximal_found: Optional[int]
    assumptions: tuple[str, ...]
    leaves_evaluated: int
    elapsed_s: float

    @property
    def agrees(self) -> bool:
        return self.m_value == self.formula_value


@dataclass(frozen=True)
class _ChunkResult:
    max_value: int
    found: tuple[tuple[int, tuple[int, ...]], ...]
    leaves: int


@lru_cache(maxsize=None)
def _tables(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-mask incomparability bitsets and down-set bitsets.

    incomp[b] has bit a set iff masks a and b are incomparable. down[m]
    has bit s set iff s is a subset of m. Both are indexed by mask and
    sized 2^n bits; only search-scale n ever builds them.
    """
    size = 1 << n
    incomp = []
    for b in range(size):
        acc = 0
        for a in range(size):
            ab = a & b
            if ab != a and ab != b:
                acc |= 1 << a
        incomp.append(acc)
    down = []
    for m in range(size):
        acc = 1 << m
        sub = m
        while sub:
            sub = (sub - 1) & m
            acc |= 1 << sub
        down.append(acc)
    return tuple(incomp), tuple(down)


def _space(n: int, pruning: Pruning) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """(mandatory members, free members in decision order, skip multiplier).

    The skip multiplier accounts for candidates containing the empty set
    or [n]: the level's closed-form count includes them, the walk never
    builds them.
    """
    size = 1 << n
    full = size - 1
    if pruning is Pruning.NONE:
        base: tuple[int, ...] = ()
        allowed = [m for m in range(size) if m != 0 and m != full]
        mult = 4
    elif pruning is Pruning.COMMON_ELEMENT:
        base = ()
        allowed = [m for m in range(1, size, 2) if m != full]
        mult = 1
    else:
        if n < 2:
            raise ValueError("full pruning needs n >= 2")
        base_mask = full ^ (1 << (n - 1))
        base = (base_mask,)
        allowed = [m for m in range(1, size, 2) if m != full and m != base_mask]
        mult = 1
    # Strong members first: they shrink the partner and the reachable
    # down-sets early, which is where the bound does its work.
    allowed.sort(key=lambda m: (-m.bit_count(), m))
    return base, tuple(allowed), mult


def _construction_floor(n: int) -> int:
    """Evaluated intersection size of the balanced construction.

    Computed, not assumed: this is a concrete candidate value, so seeding
    the bound with it never cuts a leaf that could beat the maximum. The
    balanced split with X containing 1 and Y containing n lies inside
    every pruning level's candidate space.
    """
    if n < 2:
        return 0
    from .families import intersection_family

    return len(intersection_family(type_xy(balanced_split(GroundSet(n)))))


def _run_chunk(
    n: int,
    pruning_value: str,
    prefix: int,
    prefix_len: int,
    seed_floor: int,
    collect: bool,
) -> _ChunkResult:
    """Walk one aligned block of the candidate space.

    The block is the set of candidates whose first prefix_len inclusion
    decisions match prefix. Recursion handles the remaining members, with
    two sound upper bounds per node: the size product |F|*|G|, and the
    count of masks lying under both a surviving partner member and a
    still-possible right-hand member. Subtrees bounded below the running
    best are dropped whole; a leaf with intersection size equal to the
    final maximum is never dropped because both bounds dominate it and
    drops are strict.
    """
    pruning = Pruning.from_string(pruning_value)
    incomp, down = _tables(n)
    base, allowed, _mult = _space(n, pruning)

    all_f = (1 << (1 << n)) - 1
    g: list[int] = []
    f = all_f
    d_g = 0
    for b in base:
        g.append(b)
        f &= incomp[b]
        d_g |= down[b]
    for k in range(prefix_len):
        if prefix >> (prefix_len - 1 - k) & 1:
            m = allowed[k]
            g.append(m)
            f &= incomp[m]
            d_g |= down[m]
    rem = allowed[prefix_len:]
    ka = len(rem)

    d_suf = [0] * (ka + 1)
    for i in range(ka - 1, -1, -1):
        d_suf[i] = d_suf[i + 1] | down[rem[i]]

    best = seed_floor
    found: list[tuple[int, tuple[int, ...]]] = []
    leaves = 0

    def down_of(fbits: int) -> int:
        acc = 0
        while fbits:
            lo = fbits & -fbits
            acc |= down[lo.bit_length() - 1]
            fbits ^= lo
        return acc

    def walk(k: int, fbits: int, d_f: int, d_gs: int) -> None:
        nonlocal best, leaves
        if k == ka:
            leaves += 1
            glen = len(g)
            if glen == 0 or fbits == 0:
                isz = 0
            else:
                if fbits.bit_count() * glen < best:
                    return
                fl = []
                x = fbits
                while x:
                    lo = x & -x
                    fl.append(lo.bit_length() - 1)
                    x ^= lo
                isz = len({a & b for a in fl for b in g})
            if isz > best:
                best = isz
            if collect and isz >= seed_floor:
                found.append((isz, tuple(g)))
            return
        fc = fbits.bit_count()
        if fc * (len(g) + ka - k) < best:
            return
        if (d_f & (d_gs | d_suf[k])).bit_count() < best:
            return
        walk(k + 1, fbits, d_f, d_gs)
        b = rem[k]
        nf = fbits & incomp[b]
        g.append(b)
        walk(k + 1, nf, down_of(nf) if nf != fbits else d_f, d_gs | down[b])
        g.pop()

    walk(0, f, down_of(f), d_g)
    return _ChunkResult(best, tuple(found), leaves)


def _run_chunk_star(args: tuple) -> _ChunkResult:
    return _run_chunk(*args)


def _partner_bits(masks: tuple[int, ...], n: int) -> int:
    incomp, _ = _tables(n)
    acc = (1 << (1 << n)) - 1
    for b in masks:
        acc &= incomp[b]
    return acc


def _bits_to_masks(bits: int) -> tuple[int, ...]:
    out = []
    while bits:
        lo = bits & -bits
        out.append(lo.bit_length() - 1)
        bits ^= lo
    return tuple(out)


def _finalize_witnesses(
    n: int, m_value: int, found: list[tuple[int, tuple[int, ...]]]
) -> tuple[tuple[ExtremalWitness, ...], int]:
    """Filter collected leaves to mutually-maximal maximum pairs and
    deduplicate by canonical form."""
    ground = GroundSet(n)
    ordered = 0
    by_key: dict[tuple[int, ...], ExtremalWitness] = {}
    for isz, g_masks in found:
        if isz != m_value:
            continue
        f_bits = _partner_bits(g_masks, n)
        f_masks = _bits_to_masks(f_bits)
        g_bitset = 0
        for b in g_masks:
            g_bitset |= 1 << b
        if _partner_bits(f_masks, n) != g_bitset:
            continue
        ordered += 1
        pair = FamilyPair(
            Family.from_bits(ground, f_masks), Family.from_bits(ground, g_masks)
        )
        canon = canonicalize_pair(pair)
        key = pair_key(canon)
        if key not in by_key:
            by_key[key] = ExtremalWitness(canon, isz, classify_type_xy(canon))
    witnesses = tuple(by_key[k] for k in sorted(by_key))
    return witnesses, ordered


def default_worker_count() -> int:
    return os.cpu_count() or 1


def search_m(
    n: int,
    pruning: Pruning = Pruning.NONE,
    enumerate_witnesses: bool = False,
    workers: int = 1,
) -> SearchReport:
    """Exact maximum intersection-family size over cross-Sperner pairs.

    Raises ValueError when n is outside the chosen pruning level's range;
    the level is never downgraded or substituted silently.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"ground set size must be a positive int, got {n!r}")
    cap = _MAX_N[pruning]
    if n > cap:
        raise ValueError(
            f"pruning level {pruning.value!r} supports n <= {cap}, got n = {n}"
        )
    if workers < 1:
        raise ValueError("worker count must be positive")

    t0 = time.perf_counter()
    base, allowed, mult = _space(n, pruning)
    seed_floor = _construction_floor(n)
    ka = len(allowed)

    if workers == 1 or ka == 0:
        chunk_bits = 0
    else:
        chunk_bits = min(ka, max(1, (workers * 4 - 1).bit_length()))
    tasks = [
        (n, pruning.value, p, chunk_bits, seed_floor, enumerate_witnesses)
        for p in range(1 << chunk_bits)
    ]
    if workers == 1 or len(tasks) == 1:
        results = [_run_chunk(*t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_chunk_star, tasks))

    m_value = max(r.max_value for r in results)
    leaves = sum(r.leaves for r in results)
    examined = mult << ka

    if enumerate_witnesses:
        all_found = [c for r in results for c in r.found]
        witnesses, ordered = _finalize_witnesses(n, m_value, all_found)
        mm_found: Optional[int] = ordered
    else:
        witnesses = ()
        mm_found = None

    return SearchReport(
        n=n,
        pruning=pruning,
        m_value=m_value,
        formula_value=m_formula(n),
        witnesses=witnesses,
        candidates_examined=examined,
        mutually_maximal_found=mm_found,
        assumptions=_ASSUMPTIONS[pruning],
        leaves_evaluated=leaves,
        elapsed_s=time.perf_counter() - t0,
    )


def cross_validate(n: int, workers: int = 1) -> bool:
    """True iff all three pruning levels report the same maximum.

    Valid for 2 <= n <= 4, the range where the widest level is feasible.
    """
    if not 2 <= n <= 4:
        raise ValueError("cross-validation runs at 2 <= n <= 4")
    values = {
        search_m(n, level, workers=workers).m_value
        for level in (Pruning.NONE, Pruning.COMMON_ELEMENT, Pruning.FULL)
    }
    return len(values) == 1
