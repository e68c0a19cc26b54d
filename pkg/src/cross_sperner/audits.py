"""Empirical audits of the structural claims behind the exact maximum.

Each audit checks one finite claim on concrete instances and reports
findings; a failed finding always carries a replayable counterexample.
Witness-based audits pull extremal pairs from the weakest search level
feasible at the given ground-set size, so no audit leans on the pruning
assumption it is itself checking. Sampled modes draw from a fixed default
seed and record it, keeping every report reproducible.

Claim identifiers are part of the command-line contract:

  lemma21             both families of every maximum witness contain a
                      set of size n - 1
  cor22               both families of every maximum witness have a
                      nonempty common intersection, with distinct
                      witnessing elements on the two sides
  lemma23             pairs whose common intersections partition the
                      ground set embed into the padded superfamilies,
                      and their intersection families embed accordingly
  lemma24-structure   the two common intersections of every maximum
                      witness partition the ground set
  lemma24-inequality  the padding bound that rules out unbalanced
                      common intersections, checked in exact integers
  monotone-m          the closed-form maximum strictly increases with n,
                      as do searched values where search is feasible
  seymour             sqrt|F| + sqrt|G| <= 2^(n/2) for cross-Sperner
                      pairs, with F replaced by its maximal partner
  sperner             the largest antichain has exactly C(n, floor(n/2))
                      members
  theorem12-uniqueness  every mutually-maximal maximum witness is a
                      balanced-split construction pair
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .constructions import m_formula, proper_submasks
from .families import Family, FamilyPair, GroundSet
from .search import Pruning, SearchReport, _bits_to_masks, _tables, search_m

DEFAULT_SEED = 271828
SEYMOUR_EPSILON = 1e-9

CLAIM_IDS = (
    "lemma21",
    "cor22",
    "lemma23",
    "lemma24-structure",
    "lemma24-inequality",
    "monotone-m",
    "seymour",
    "sperner",
    "theorem12-uniqueness",
)


@dataclass(frozen=True)
class AuditFinding:
    """One checked claim instance."""

    claim: str
    instance: str
    passed: bool
    counterexample: Optional[dict]

    def __post_init__(self) -> None:
        if not self.passed and self.counterexample is None:
            raise ValueError("a failed finding must carry a counterexample")


@dataclass(frozen=True)
class InequalityParams:
    """Admissible parameters (n, m, x, y): x, y >= 1 and m = x + y < n."""

    n: int
    m: int
    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x < 1 or self.y < 1:
            raise ValueError("block sizes x and y must be positive")
        if self.m != self.x + self.y:
            raise ValueError("m must equal x + y")
        if self.m >= self.n:
            raise ValueError("m must be smaller than n")


def padding_inequality_sides(p: InequalityParams) -> tuple[int, int, int]:
    """(left side, right side, positivity bracket), all exact integers.

    The audited claim is left < right strictly, plus positivity of
    2^(n-y) - 2^x - 2^(n-m) + 1.
    """
    lhs = ((1 << (p.n - p.m)) - 1) * ((1 << p.m) - (1 << p.x) - (1 << p.y) + 1)
    rhs = (1 << p.n) - (1 << (p.n - p.x)) - (1 << (p.n - p.y)) + (1 << (p.n - p.m))
    bracket = (1 << (p.n - p.y)) - (1 << p.x) - (1 << (p.n - p.m)) + 1
    return lhs, rhs, bracket


def _family_lists(fam: Family) -> list[list[int]]:
    return [list(m.elements()) for m in fam.members]


def _pair_obj(pair: FamilyPair) -> dict:
    return {"F": _family_lists(pair.f), "G": _family_lists(pair.g)}


def _and_fold(masks: tuple[int, ...], full: int) -> int:
    acc = full
    for m in masks:
        acc &= m
    return acc


def _witness_level(n: int, unpruned_only: bool = False) -> Pruning:
    if n <= 4:
        return Pruning.NONE
    if unpruned_only:
        raise ValueError("this audit needs unpruned witnesses, so n <= 4")
    if n <= 5:
        return Pruning.COMMON_ELEMENT
    raise ValueError("witness-based audits run at n <= 5")


@lru_cache(maxsize=None)
def _witness_report(n: int, pruning: Pruning) -> SearchReport:
    return search_m(n, pruning, enumerate_witnesses=True, workers=1)


def audit_lemma21(n: int) -> list[AuditFinding]:
    """Every maximum witness has a size-(n-1) member in both families."""
    if not 2 <= n <= 5:
        raise ValueError("lemma21 audit runs at 2 <= n <= 5")
    level = _witness_level(n)
    report = _witness_report(n, level)
    out = []
    for w in report.witnesses:
        ok_f = any(m.size == n - 1 for m in w.pair.f)
        ok_g = any(m.size == n - 1 for m in w.pair.g)
        passed = ok_f and ok_g
        out.append(
            AuditFinding(
                claim="lemma21",
                instance=f"n={n} source={level.value} witness {w.pair}",
                passed=passed,
                counterexample=None if passed else _pair_obj(w.pair),
            )
        )
    return out


def audit_cor22(n: int) -> list[AuditFinding]:
    """Both sides of every maximum witness share a common element, and
    the two sides admit distinct witnessing elements."""
    if not 2 <= n <= 4:
        raise ValueError("cor22 audit needs unpruned witnesses, so 2 <= n <= 4")
    level = _witness_level(n, unpruned_only=True)
    report = _witness_report(n, level)
    full = GroundSet(n).full_mask
    out = []
    for w in report.witnesses:
        fx = _and_fold(w.pair.f.mask_tuple(), full)
        gx = _and_fold(w.pair.g.mask_tuple(), full)
        chosen = None
        for i in GroundSet(n).elements_of(fx):
            for j in GroundSet(n).elements_of(gx):
                if i != j:
                    chosen = (i, j)
                    break
            if chosen:
                break
        passed = fx != 0 and gx != 0 and chosen is not None
        desc = f"n={n} witness {w.pair}"
        if chosen:
            desc += f" i={chosen[0]} j={chosen[1]}"
        out.append(
            AuditFinding(
                claim="cor22",
                instance=desc,
                passed=passed,
                counterexample=None if passed else _pair_obj(w.pair),
            )
        )
    return out


def _padded_superfamilies(ground: GroundSet, xb: int, yb: int) -> tuple[set, set]:
    f_sup = {xb | a for a in proper_submasks(yb)}
    g_sup = {yb | b for b in proper_submasks(xb)}
    return f_sup, g_sup


def _containment_check(
    ground: GroundSet, f_masks: tuple[int, ...], g_masks: tuple[int, ...]
) -> Optional[dict]:
    """None when the partition-case containment claim holds, else a
    counterexample payload. Caller guarantees the pair qualifies."""
    full = ground.full_mask
    xb = _and_fold(f_masks, full)
    yb = _and_fold(g_masks, full)
    f_sup, g_sup = _padded_superfamilies(ground, xb, yb)
    if not set(f_masks) <= f_sup or not set(g_masks) <= g_sup:
        which = "F" if not set(f_masks) <= f_sup else "G"
        return {
            "reason": f"{which} escapes its padded superfamily",
            "F": [list(ground.elements_of(m)) for m in f_masks],
            "G": [list(ground.elements_of(m)) for m in g_masks],
        }
    inner = {a & b for a in f_masks for b in g_masks}
    outer = {a & b for a in f_sup for b in g_sup}
    if not inner <= outer or len(inner) > len(outer):
        return {
            "reason": "intersection family escapes the superfamily bound",
            "F": [list(ground.elements_of(m)) for m in f_masks],
            "G": [list(ground.elements_of(m)) for m in g_masks],
        }
    return None


def _qualifies(full: int, f_masks: tuple[int, ...], g_masks: tuple[int, ...]) -> bool:
    if not f_masks or not g_masks:
        return False
    xb = _and_fold(f_masks, full)
    yb = _and_fold(g_masks, full)
    return xb != 0 and yb != 0 and (xb & yb) == 0 and (xb | yb) == full


def _sample_padded_family(rng: random.Random, block: int, other: int) -> list[int]:
    """A family {block | A} over proper submasks A of other, whose common
    intersection is exactly block."""
    subs = list(proper_submasks(other))
    while True:
        chosen = [s for s in subs if rng.random() < 0.5]
        if not chosen:
            continue
        inter = chosen[0]
        for s in chosen[1:]:
            inter &= s
        if inter == 0:
            return [block | s for s in chosen]


def audit_lemma23(
    n: int, samples: int = 10000, seed: int = DEFAULT_SEED
) -> list[AuditFinding]:
    """Partition-case containment: exhaustive for n <= 3, sampled for
    4 <= n <= 6. Pairs without the partition property are skipped."""
    if not 2 <= n <= 6:
        raise ValueError("lemma23 audit runs at 2 <= n <= 6")
    ground = GroundSet(n)
    full = ground.full_mask
    failures: list[AuditFinding] = []
    if n <= 3:
        incomp, _ = _tables(n)
        size = 1 << n
        qualifying = 0
        skipped = 0
        all_f = (1 << size) - 1
        for gset in range(1, 1 << size):
            g_masks = _bits_to_masks(gset)
            pbits = all_f
            for b in g_masks:
                pbits &= incomp[b]
            p_list = _bits_to_masks(pbits)
            for pick in range(1, 1 << len(p_list)):
                f_masks = tuple(
                    p_list[i] for i in range(len(p_list)) if pick >> i & 1
                )
                if not _qualifies(full, f_masks, g_masks):
                    skipped += 1
                    continue
                qualifying += 1
                bad = _containment_check(ground, f_masks, g_masks)
                if bad is not None:
                    failures.append(
                        AuditFinding("lemma23", f"n={n} exhaustive", False, bad)
                    )
        head = AuditFinding(
            claim="lemma23",
            instance=(
                f"n={n} exhaustive: qualifying={qualifying} checked,"
                f" skipped={skipped}, failures={len(failures)}"
            ),
            passed=not failures,
            counterexample=None if not failures else failures[0].counterexample,
        )
        return [head] + failures
    if samples < 1:
        raise ValueError("sampled mode needs a positive sample count")
    rng = random.Random(seed)
    for _ in range(samples):
        xb = rng.randrange(1, full)
        yb = full ^ xb
        f_masks = tuple(sorted(_sample_padded_family(rng, xb, yb)))
        g_masks = tuple(sorted(_sample_padded_family(rng, yb, xb)))
        bad = _containment_check(ground, f_masks, g_masks)
        if bad is not None:
            failures.append(AuditFinding("lemma23", f"n={n} sampled", False, bad))
    head = AuditFinding(
        claim="lemma23",
        instance=(
            f"n={n} sampled: qualifying={samples} checked,"
            f" seed={seed}, failures={len(failures)}"
        ),
        passed=not failures,
        counterexample=None if not failures else failures[0].counterexample,
    )
    return [head] + failures


def audit_lemma24_structure(n: int) -> list[AuditFinding]:
    """The two common intersections of every maximum witness partition
    the ground set."""
    if not 2 <= n <= 5:
        raise ValueError("lemma24-structure audit runs at 2 <= n <= 5")
    level = _witness_level(n)
    report = _witness_report(n, level)
    full = GroundSet(n).full_mask
    out = []
    for w in report.witnesses:
        fx = _and_fold(w.pair.f.mask_tuple(), full)
        gx = _and_fold(w.pair.g.mask_tuple(), full)
        passed = fx != 0 and gx != 0 and (fx & gx) == 0 and (fx | gx) == full
        out.append(
            AuditFinding(
                claim="lemma24-structure",
                instance=f"n={n} source={level.value} witness {w.pair}",
                passed=passed,
                counterexample=None if passed else _pair_obj(w.pair),
            )
        )
    return out


def audit_lemma24_inequality(n_max: int) -> list[AuditFinding]:
    """Strict padding inequality over every admissible (n, m, x, y) with
    n <= n_max, in exact integer arithmetic."""
    if not 3 <= n_max <= 40:
        raise ValueError("lemma24-inequality audit runs at 3 <= n_max <= 40")
    checked = 0
    failures: list[AuditFinding] = []
    for n in range(3, n_max + 1):
        for x in range(1, n):
            for y in range(1, n - x):
                p = InequalityParams(n=n, m=x + y, x=x, y=y)
                checked += 1
                lhs, rhs, bracket = padding_inequality_sides(p)
                side_ok = (p.n - p.y > p.x) and (p.n - p.y > p.n - p.m)
                if not (side_ok and lhs < rhs and bracket > 0):
                    failures.append(
                        AuditFinding(
                            claim="lemma24-inequality",
                            instance=f"n={p.n} m={p.m} x={p.x} y={p.y}",
                            passed=False,
                            counterexample={
                                "n": p.n,
                                "m": p.m,
                                "x": p.x,
                                "y": p.y,
                                "lhs": lhs,
                                "rhs": rhs,
                                "bracket": bracket,
                            },
                        )
                    )
    head = AuditFinding(
        claim="lemma24-inequality",
        instance=f"n<={n_max} tuples={checked} failures={len(failures)}",
        passed=not failures,
        counterexample=None if not failures else failures[0].counterexample,
    )
    return [head] + failures


def audit_monotone_m(n_max: int) -> list[AuditFinding]:
    """m_formula strictly increases up to n_max; searched maxima strictly
    increase over the feasible range."""
    if not 3 <= n_max <= 30:
        raise ValueError("monotone-m audit runs at 3 <= n_max <= 30")
    bad_n = [n for n in range(3, n_max + 1) if m_formula(n) <= m_formula(n - 1)]
    out = [
        AuditFinding(
            claim="monotone-m",
            instance=f"formula chain 3..{n_max}",
            passed=not bad_n,
            counterexample=None if not bad_n else {"first_failure_n": bad_n[0]},
        )
    ]
    for n in range(3, min(n_max, 5) + 1):
        prev = _witness_report(n - 1, _witness_level(n - 1)).m_value
        cur = _witness_report(n, _witness_level(n)).m_value
        passed = cur > prev
        out.append(
            AuditFinding(
                claim="monotone-m",
                instance=f"search m({n})={cur} > m({n - 1})={prev}",
                passed=passed,
                counterexample=None if passed else {"n": n, "m_n": cur, "m_prev": prev},
            )
        )
    return out


def audit_seymour(
    n: int, samples: int = 10000, seed: int = DEFAULT_SEED
) -> list[AuditFinding]:
    """sqrt|F| + sqrt|G| <= 2^(n/2) within 1e-9 for cross-Sperner pairs.

    Exhaustive over every right-hand family for n <= 4; each is paired
    with its maximal partner, which dominates every compatible F because
    the left side is monotone in |F|. Sampled for larger n.
    """
    if not 2 <= n <= 10:
        raise ValueError("seymour audit runs at 2 <= n <= 10")
    bound = math.sqrt(2.0**n)
    incomp, _ = _tables(n)
    failures: list[AuditFinding] = []
    max_lhs = -1.0
    max_at: Optional[tuple[int, ...]] = None

    def check(g_masks: tuple[int, ...]) -> None:
        nonlocal max_lhs, max_at
        pbits = (1 << (1 << n)) - 1
        for b in g_masks:
            pbits &= incomp[b]
        fc = pbits.bit_count()
        lhs = math.sqrt(fc) + math.sqrt(len(g_masks))
        if lhs > max_lhs:
            max_lhs = lhs
            max_at = g_masks
        if lhs > bound + SEYMOUR_EPSILON:
            ground = GroundSet(n)
            failures.append(
                AuditFinding(
                    claim="seymour",
                    instance=f"n={n} |F|={fc} |G|={len(g_masks)}",
                    passed=False,
                    counterexample={
                        "G": [list(ground.elements_of(m)) for m in g_masks],
                        "lhs": lhs,
                        "bound": bound,
                    },
                )
            )

    if n <= 4:
        size = 1 << n
        for gset in range(1 << size):
            check(_bits_to_masks(gset))
        mode = f"exhaustive candidates={1 << size}"
    else:
        if samples < 1:
            raise ValueError("sampled mode needs a positive sample count")
        rng = random.Random(seed)
        size = 1 << n
        for _ in range(samples):
            gset = rng.getrandbits(size)
            check(_bits_to_masks(gset))
        mode = f"sampled candidates={samples} seed={seed}"
    head = AuditFinding(
        claim="seymour",
        instance=(
            f"n={n} {mode} max_lhs={max_lhs:.9f} bound={bound:.9f}"
            f" at G size {0 if max_at is None else len(max_at)}"
        ),
        passed=not failures,
        counterexample=None if not failures else failures[0].counterexample,
    )
    return [head] + failures


def audit_sperner(n: int) -> AuditFinding:
    """Largest antichain size equals C(n, floor(n/2)), by brute force."""
    if not 1 <= n <= 4:
        raise ValueError("sperner audit runs at 1 <= n <= 4")
    incomp, _ = _tables(n)
    size = 1 << n
    all_f = (1 << size) - 1
    comp = [(~incomp[m]) & all_f for m in range(size)]
    best = 0
    for famset in range(1, 1 << size):
        fs = famset
        ok = True
        while fs:
            lo = fs & -fs
            m = lo.bit_length() - 1
            if famset & comp[m] != lo:
                ok = False
                break
            fs ^= lo
        if ok:
            c = famset.bit_count()
            if c > best:
                best = c
    expected = math.comb(n, n // 2)
    return AuditFinding(
        claim="sperner",
        instance=f"n={n} largest antichain={best} expected={expected}",
        passed=best == expected,
        counterexample=None if best == expected else {"found": best, "expected": expected},
    )


def audit_theorem12_uniqueness(n: int) -> list[AuditFinding]:
    """Every mutually-maximal maximum witness is a balanced construction
    pair; also reports the ordered and canonical witness counts."""
    if not 2 <= n <= 5:
        raise ValueError("theorem12-uniqueness audit runs at 2 <= n <= 5")
    level = _witness_level(n)
    report = _witness_report(n, level)
    want_sizes = {n // 2, (n + 1) // 2}
    out = []
    all_ok = True
    for w in report.witnesses:
        if w.split is None:
            passed = False
        else:
            passed = {w.split.x.size, w.split.y.size} == want_sizes
        all_ok = all_ok and passed
        desc = f"n={n} source={level.value} witness {w.pair}"
        if w.split is not None:
            desc += f" split {w.split}"
        out.append(
            AuditFinding(
                claim="theorem12-uniqueness",
                instance=desc,
                passed=passed,
                counterexample=None if passed else _pair_obj(w.pair),
            )
        )
    summary = AuditFinding(
        claim="theorem12-uniqueness",
        instance=(
            f"n={n} source={level.value}"
            f" ordered_pairs={report.mutually_maximal_found}"
            f" canonical_classes={len(report.witnesses)}"
        ),
        passed=all_ok,
        counterexample=None if all_ok else {"n": n},
    )
    return out + [summary]


def run_claim(
    claim: str, n: int, samples: int = 10000, seed: int = DEFAULT_SEED
) -> list[AuditFinding]:
    """Dispatch one claim id; 'all' runs the whole battery, clamping each
    audit to the largest instance it supports at or below n."""
    if claim == "lemma21":
        return audit_lemma21(n)
    if claim == "cor22":
        return audit_cor22(n)
    if claim == "lemma23":
        return audit_lemma23(n, samples=samples, seed=seed)
    if claim == "lemma24-structure":
        return audit_lemma24_structure(n)
    if claim == "lemma24-inequality":
        return audit_lemma24_inequality(n)
    if claim == "monotone-m":
        return audit_monotone_m(n)
    if claim == "seymour":
        return audit_seymour(n, samples=samples, seed=seed)
    if claim == "sperner":
        return [audit_sperner(n)]
    if claim == "theorem12-uniqueness":
        return audit_theorem12_uniqueness(n)
    if claim == "all":
        out: list[AuditFinding] = []
        out += audit_lemma21(min(max(n, 2), 5))
        out += audit_cor22(min(max(n, 2), 4))
        out += audit_lemma23(min(max(n, 2), 6), samples=samples, seed=seed)
        out += audit_lemma24_structure(min(max(n, 2), 5))
        out += audit_lemma24_inequality(min(max(n, 3), 40))
        out += audit_monotone_m(min(max(n, 3), 30))
        out += audit_seymour(min(max(n, 2), 10), samples=samples, seed=seed)
        out.append(audit_sperner(min(max(n, 1), 4)))
        out += audit_theorem12_uniqueness(min(max(n, 2), 5))
        return out
    raise ValueError(f"unknown claim {claim!r}")
