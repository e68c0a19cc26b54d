"""Auditing the structural claims on concrete instances.

Each claim has an identifier shared with the command line. An audit
returns findings; a failed finding always carries a machine-readable
counterexample, so a regression points at a concrete object.
"""

from cross_sperner import (
    DEFAULT_SEED,
    InequalityParams,
    audit_lemma23,
    audit_lemma24_inequality,
    audit_seymour,
    audit_sperner,
    padding_inequality_sides,
    run_claim,
)


def banner(text):
    print(f"\n== {text} ==")


def show(findings, limit=4):
    for f in findings[:limit]:
        print(f"  [{'PASS' if f.passed else 'FAIL'}] {f.instance}")
    if len(findings) > limit:
        print(f"  ... {len(findings) - limit} more")


def main() -> None:
    banner("whole battery at n=4")
    findings = run_claim("all", 4, samples=2000, seed=DEFAULT_SEED)
    print(f"{len(findings)} findings, {sum(not f.passed for f in findings)} failures")
    show(findings, limit=6)

    banner("containment in the padded superfamilies")
    show(audit_lemma23(3))
    show(audit_lemma23(5, samples=3000))

    banner("the padding inequality, exact integers")
    show(audit_lemma24_inequality(40))
    p = InequalityParams(n=5, m=4, x=2, y=2)
    lhs, rhs, bracket = padding_inequality_sides(p)
    print(f"  worked example n=5 m=4 x=2 y=2: {lhs} < {rhs}, bracket {bracket} > 0")

    banner("square-root bound for compatible pair sizes")
    show(audit_seymour(4))

    banner("largest antichain by brute force")
    for n in (2, 3, 4):
        show([audit_sperner(n)])


if __name__ == "__main__":
    main()
