"""The divisor-class module: dictionary consistency, derived matrices,
fixed submodule, images, and the torsor searches."""

import pytest

from quartic_twist.curve import (
    IDENTITY_CUSP_TABLE,
    SIGMA3_CUSP_TABLE,
    SIGMA5_CUSP_TABLE,
    catalog,
)
from quartic_twist.divisors import Divisor, named_divisor
from quartic_twist.mordell_weil import (
    CLASS_D1_MINUS_D0,
    CLASS_D2_MINUS_D0,
    CLASS_D3_MINUS_D0,
    CLASS_E,
    E_BASIS,
    MODULI,
    CUSP_DICTIONARY,
    PRINTED_S3,
    PRINTED_S5,
    PRINTED_SHIFTS,
    ZERO_ELEMENT,
    ActionMatrix,
    ModElement,
    all_elements,
    cusp_class,
    derive_action_matrix,
    fixed_submodule,
    image_submodule,
    perturbed_dictionary,
    pic1_has_fixed_point,
    subgroup_generated,
    two_torsion_multiples,
)

e1, e2, e3, e4, e5, e6 = E_BASIS


def test_mod_element_arithmetic():
    assert ModElement((2,)) + ModElement((2,)) == ZERO_ELEMENT
    assert 2 * ModElement((0, 0, 0, 0, 0, 1)) == ZERO_ELEMENT
    assert -ModElement((1, 0, 0, 0, 0, 1)) == ModElement((3, 0, 0, 0, 0, 1))
    assert ModElement((5, 5, 5, 5, 5, 3)) == ModElement((1, 1, 1, 1, 1, 1))


def test_bitangent_class_relation_in_coordinates():
    assert CLASS_D1_MINUS_D0 + CLASS_D2_MINUS_D0 == CLASS_D3_MINUS_D0


def test_enumeration_count_and_order():
    elements = list(all_elements())
    assert len(elements) == 2048
    assert elements[0] == ZERO_ELEMENT
    assert elements[1] == e6
    assert len(set(elements)) == 2048


def test_dictionary_consistency():
    assert CUSP_DICTIONARY.basis_consistent()
    assert CUSP_DICTIONARY.gamma2_consistent()
    # orbit consistency: applying the printed matrices to the basis
    # entries must reproduce the non-basis entries
    assert CUSP_DICTIONARY.beta[3] == PRINTED_S3(e4) + e3
    assert CUSP_DICTIONARY.alpha[3] == PRINTED_S5(e1) + e4
    assert CUSP_DICTIONARY.alpha[0] == PRINTED_S3(e1) + e3
    assert CUSP_DICTIONARY.gamma[0] == PRINTED_S3(e5) + e3
    assert CUSP_DICTIONARY.gamma[3] == PRINTED_S5(e5) + e4


def test_cusp_class_examples():
    a1 = Divisor.point(catalog("A1")) - Divisor.point(catalog("B0"))
    assert cusp_class(a1) == e1
    e_rep = 2 * Divisor.point(catalog("B2")) - 2 * Divisor.point(catalog("B0"))
    assert cusp_class(e_rep) == 2 * e4
    assert cusp_class(Divisor.zero()) == ZERO_ELEMENT
    assert cusp_class(named_divisor("e6")) == e6


def test_cusp_class_rejects_bad_input():
    with pytest.raises(ValueError):
        cusp_class(Divisor.point(catalog("A1")))  # degree 1
    with pytest.raises(ValueError):
        cusp_class(Divisor.point(catalog("T00")) - Divisor.point(catalog("T01")))


def test_bitangent_class_relation_from_certified_representatives():
    from quartic_twist.certificates import cusp_representative

    d1 = cusp_class(cusp_representative("D1-D0"))
    d2 = cusp_class(cusp_representative("D2-D0"))
    d3 = cusp_class(cusp_representative("D3-D0"))
    assert (d1, d2, d3) == (CLASS_D1_MINUS_D0, CLASS_D2_MINUS_D0, CLASS_D3_MINUS_D0)
    assert d1 + d2 == d3


def test_derived_matrices_match_printed():
    assert derive_action_matrix(SIGMA3_CUSP_TABLE) == PRINTED_S3
    assert derive_action_matrix(SIGMA5_CUSP_TABLE) == PRINTED_S5
    assert derive_action_matrix(IDENTITY_CUSP_TABLE) == ActionMatrix.identity()


def test_apply_matrix_examples():
    assert PRINTED_S3(e1) == ModElement((2, 1, 1, 1, 0, 0))
    assert PRINTED_S5(e4) == 3 * e4
    assert PRINTED_S3(ZERO_ELEMENT) == ZERO_ELEMENT


def test_matrix_well_definedness_guard():
    bad = [[0] * 6 for _ in range(6)]
    bad[0][5] = 1  # sends the order-2 generator to an order-4 element
    with pytest.raises(ValueError):
        ActionMatrix(bad)


def test_involutions_and_commutation_on_all_elements():
    s3s5 = PRINTED_S3 * PRINTED_S5
    s5s3 = PRINTED_S5 * PRINTED_S3
    identity = ActionMatrix.identity()
    for m in all_elements():
        assert PRINTED_S3(PRINTED_S3(m)) == m
        assert PRINTED_S5(PRINTED_S5(m)) == m
        assert s3s5(m) == s5s3(m)
    assert PRINTED_S3 * PRINTED_S3 == identity
    assert PRINTED_S5 * PRINTED_S5 == identity
    assert s3s5 == s5s3


def test_fixed_submodule():
    fixed = fixed_submodule([PRINTED_S3, PRINTED_S5])
    assert len(fixed) == 8
    assert all(2 * m == ZERO_ELEMENT for m in fixed)
    expected = subgroup_generated([2 * e1 + 2 * e2, 2 * e3, 2 * e4])
    assert set(fixed) == expected
    assert len(expected) == 8


def test_fixed_submodule_from_divisor_classes():
    fixed = set(fixed_submodule([PRINTED_S3, PRINTED_S5]))
    generated = subgroup_generated([CLASS_D1_MINUS_D0, CLASS_D2_MINUS_D0, CLASS_E])
    assert generated == fixed
    for cls in (CLASS_D1_MINUS_D0, CLASS_D2_MINUS_D0, CLASS_D3_MINUS_D0, CLASS_E):
        assert cls in fixed


def test_fixed_submodule_controls():
    assert len(fixed_submodule([ActionMatrix.identity()])) == 2048
    only_s5 = set(fixed_submodule([PRINTED_S5]))
    both = set(fixed_submodule([PRINTED_S3, PRINTED_S5]))
    assert both <= only_s5


def test_pic0_subgroup():
    pic0 = subgroup_generated([CLASS_D1_MINUS_D0, CLASS_D2_MINUS_D0])
    assert pic0 == {
        ZERO_ELEMENT,
        CLASS_D1_MINUS_D0,
        CLASS_D2_MINUS_D0,
        CLASS_D3_MINUS_D0,
    }
    fixed = set(fixed_submodule([PRINTED_S3, PRINTED_S5]))
    assert CLASS_E not in pic0
    assert fixed == pic0 | {m + CLASS_E for m in pic0}
    assert subgroup_generated([]) == {ZERO_ELEMENT}


def test_image_of_s5_is_2m():
    image = image_submodule(PRINTED_S5)
    doubles = two_torsion_multiples()
    assert image == doubles
    assert len(image) == 32


def test_image_congruence_for_s3():
    for s in (PRINTED_S3, PRINTED_S3 * PRINTED_S5):
        for a in image_submodule(s):
            assert (a.c[1] + a.c[2] + a.c[5]) % 2 == 0
    assert image_submodule(ActionMatrix.identity()) == {ZERO_ELEMENT}


def test_printed_shifts_match_dictionary():
    sigma5_shift = CUSP_DICTIONARY.alpha[2] - CUSP_DICTIONARY.alpha[0]
    sigma3_shift = CUSP_DICTIONARY.alpha[1] - CUSP_DICTIONARY.alpha[0]
    tau_shift = CUSP_DICTIONARY.alpha[3] - CUSP_DICTIONARY.alpha[0]
    assert sigma5_shift == PRINTED_SHIFTS["sigma_5"]
    assert sigma3_shift == PRINTED_SHIFTS["sigma_3"]
    assert tau_shift == PRINTED_SHIFTS["sigma_3 sigma_5"]


def test_shifts_from_galois_action_on_a0():
    from quartic_twist.cyclotomic import SIGMA3, SIGMA5
    from quartic_twist.divisors import galois_image_divisor

    a0 = Divisor.point(catalog("A0"))
    for sigma, key in ((SIGMA5, "sigma_5"), (SIGMA3, "sigma_3"), (SIGMA3 * SIGMA5, "sigma_3 sigma_5")):
        moved = galois_image_divisor(sigma, a0) - a0
        assert cusp_class(moved) == PRINTED_SHIFTS[key]


def test_torsor_searches_have_no_solution():
    assert not pic1_has_fixed_point(PRINTED_S5, PRINTED_SHIFTS["sigma_5"])
    assert not pic1_has_fixed_point(PRINTED_S3, PRINTED_SHIFTS["sigma_3"])
    assert not pic1_has_fixed_point(
        PRINTED_S3 * PRINTED_S5, PRINTED_SHIFTS["sigma_3 sigma_5"]
    )
    assert pic1_has_fixed_point(ActionMatrix.identity(), ZERO_ELEMENT)


def test_perturbed_dictionary():
    wrong = perturbed_dictionary("gamma3", 0, 2)
    assert wrong.entry("C3") != CUSP_DICTIONARY.entry("C3")
    assert derive_action_matrix(SIGMA5_CUSP_TABLE, wrong) != PRINTED_S5
    assert wrong.basis_consistent()

    # an odd corruption even breaks well-definedness of the derived matrix
    odd = perturbed_dictionary("gamma3", 0, 1)
    with pytest.raises(ValueError):
        derive_action_matrix(SIGMA5_CUSP_TABLE, odd)

    wrong_basis = perturbed_dictionary("alpha1", 1, 1)
    assert not wrong_basis.basis_consistent()


def test_moduli():
    assert MODULI == (4, 4, 4, 4, 4, 2)
