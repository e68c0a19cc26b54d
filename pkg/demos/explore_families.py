"""A walk through the family layer: subsets as bitmasks, comparability,
cross-Sperner pairs, and maximal partners.

Run directly: python demos/explore_families.py
"""

from cross_sperner import (
    Family,
    FamilyPair,
    GroundSet,
    SubsetMask,
    find_violation,
    incomparable,
    intersection_family,
    is_cross_sperner,
    maximal_partner,
)


def main() -> None:
    ground = GroundSet(4)
    print(f"ground set: {{1, ..., {ground.n}}}, {1 << ground.n} subsets")

    a = SubsetMask.of(ground, 1, 2)
    b = SubsetMask.of(ground, 2, 3)
    c = SubsetMask.of(ground, 1, 2, 3)
    print(f"\n{a} vs {b}: incomparable = {incomparable(a, b)}")
    print(f"{a} vs {c}: incomparable = {incomparable(a, c)} ({a} is inside {c})")
    print(f"{a} vs {a}: incomparable = {incomparable(a, a)} (equality counts)")

    f = Family.of(ground, [1, 2], [1, 2, 3], [1, 2, 4])
    g = Family.of(ground, [3, 4], [1, 3, 4], [2, 3, 4])
    pair = FamilyPair(f, g)
    print(f"\nF = {f}")
    print(f"G = {g}")
    print(f"cross-Sperner: {is_cross_sperner(pair)}")

    inter = intersection_family(pair)
    print(f"intersection family ({len(inter)} sets): {inter}")

    # breaking the property by one member
    spoiled = FamilyPair(Family.of(ground, [1, 2], [3]), g)
    viol = find_violation(spoiled)
    print(f"\nspoiled pair is cross-Sperner: {is_cross_sperner(spoiled)}")
    print(f"first violation: A={viol[0]} B={viol[1]}")

    # the largest family compatible with G
    partner = maximal_partner(g)
    print(f"\nmaximal partner of G has {len(partner)} members: {partner}")
    print(f"F is contained in it: {set(f.mask_tuple()) <= set(partner.mask_tuple())}")
    print("any compatible left-hand family embeds there, so searches")
    print("only ever need to enumerate one side")


if __name__ == "__main__":
    main()
