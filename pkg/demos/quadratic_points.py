"""Quadratic points and what the computations add up to.

The curve has no real point, hence no rational point.  Its points over
quadratic fields can still be pinned down completely: they all live over
Q(zeta_3) = Q(sqrt(-3)) and are exactly the eight contact points of the
four rational bitangents.  The same bookkeeping rules out a linear
determinantal representation of the quartic over Q.
"""

from quartic_twist import (
    CONJ_ZETA3,
    on_curve,
    quadratic_points,
    verify_degree_two_classes_and_quadratic_points,
    verify_mordell_weil_structure,
    verify_no_determinantal_representation,
    verify_odd_degree_torsors,
)
from quartic_twist.curve import is_zeta3_rational
from quartic_twist.theorems import quadratic_point_pairs

print("the eight quadratic points:")
for point in quadratic_points():
    print(f"  {point}   on curve: {on_curve(point)}, "
          f"over Q(zeta_3): {is_zeta3_rational(point)}")

print("\nconjugation (zeta_3 -> zeta_3^2) pairs them into the bitangent")
print("contact divisors:")
for name, pair_sum, target in quadratic_point_pairs():
    print(f"  {name}: pair sum = {pair_sum}, equals {name}: {pair_sum == target}")

example = quadratic_points()[0]
print("\nfor instance the conjugate of", example, "is", example.galois(CONJ_ZETA3))

print("\nassembled reports:")
for report in (
    verify_mordell_weil_structure(),
    verify_odd_degree_torsors(),
    verify_degree_two_classes_and_quadratic_points(),
    verify_no_determinantal_representation(),
):
    print(f"\n  {report.theorem_id}: {'pass' if report.verdict else 'FAIL'}")
    for check in report.constituents:
        print(f"    [{'ok' if check.passed else 'XX'}] {check.label}")
    for assumption in report.assumptions:
        print(f"    (assumes: {assumption})")
    for note in report.notes:
        print(f"    (note: {note})")
