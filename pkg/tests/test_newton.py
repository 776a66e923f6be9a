from fractions import Fraction

import pytest

from schurlab.ffield import frobenius, make_field
from schurlab.mpoly import LinearForm, MultiPoly, RATIONALS, substitute
from schurlab.newton import (
    AlternativePair,
    NewtonTriple,
    TowerParams,
    brute_count_alternatives,
    build_alternative_pair,
    degree_of_extension,
    find_irreducible_eta,
    gcd_reduction_degree,
    jacobian_nonzero_check,
    newton_poly,
    two_generator_degree,
    verify_newton_identity,
)
from schurlab.vschur import ExponentPair, t_poly

Q = RATIONALS


def test_newton_poly_basics():
    X, Y, _ = MultiPoly.gens(Q)
    assert newton_poly(1) == X + Y
    assert newton_poly(2) == X**2 + Y**2
    with pytest.raises(ValueError):
        newton_poly(0)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_power_sum_frobenius_relation(p):
    spec = make_field(p, 1)
    for m in range(1, 21):
        assert newton_poly(p * m, spec) == newton_poly(m, spec) ** p


def test_two_generator_degree_values():
    assert two_generator_degree(3, 2) == 3
    assert two_generator_degree(5, 3) == 6
    assert two_generator_degree(5, 2) == 5
    assert two_generator_degree(2, 1) == 1


def test_two_generator_degree_refusals():
    with pytest.raises(ValueError):
        two_generator_degree(4, 2)  # not coprime
    with pytest.raises(ValueError):
        two_generator_degree(3, 2, p=3)  # p divides a
    with pytest.raises(ValueError):
        two_generator_degree(2, 3)  # order


def test_jacobian_nonzero_check():
    assert jacobian_nonzero_check(3, 2, 5)
    assert not jacobian_nonzero_check(3, 2, 3)
    assert jacobian_nonzero_check(3, 2, 0)
    assert not jacobian_nonzero_check(4, 2, 2)


def test_find_irreducible_eta_frozen_values():
    # hand derivation: eta works iff eta^2 - eta is a non-residue mod p;
    # squares mod 3 = {0,1}, mod 5 = {0,1,4}, mod 7 = {0,1,2,4}
    assert find_irreducible_eta(3) == 2
    assert find_irreducible_eta(5) == 2
    assert find_irreducible_eta(7) == 3


def test_find_irreducible_eta_discriminant_oracle():
    for p in (3, 5, 7, 11, 13):
        eta = find_irreducible_eta(p)
        squares = {(x * x) % p for x in range(p)}
        assert (eta * eta - eta) % p not in squares
        for smaller in range(eta):
            assert (smaller * smaller - smaller) % p in squares


def test_find_irreducible_eta_refuses_two():
    with pytest.raises(ValueError):
        find_irreducible_eta(2)


def test_build_alternative_pair_p3():
    pair = build_alternative_pair(3)
    F9 = pair.ambient
    assert F9.p == 3 and F9.r == 2
    # first root of the eta = 2 quadratic, by coordinate order: 2 + i
    assert pair.alpha == F9.element((2, 1))
    alpha, beta = pair.alpha, frobenius(pair.alpha, 1)
    assert 2 * alpha * beta == alpha + beta == F9.from_int(4)
    assert pair.z.c_x + pair.w.c_x == F9.one()
    assert pair.z.c_y + pair.w.c_y == F9.one()


def test_build_alternative_pair_p2():
    pair = build_alternative_pair(2)
    F4 = pair.ambient
    assert pair.alpha == F4.element((0, 1))
    assert pair.alpha**3 == F4.one() and pair.alpha != F4.one()
    assert pair.z.c_x + pair.z.c_y == F4.one()


def test_build_alternative_pair_rejects_reducible_eta():
    with pytest.raises(ValueError):
        build_alternative_pair(3, eta=0)  # X^2 splits
    with pytest.raises(ValueError):
        build_alternative_pair(3, eta=1)  # (X-1)^2 splits


def test_newton_identity_p3_family():
    pair = build_alternative_pair(3)
    assert verify_newton_identity(pair, 1, "direct")
    for m in (4, 28):
        assert verify_newton_identity(pair, m, "direct")
        assert verify_newton_identity(pair, m, "frobenius_shortcut")
    # even Frobenius power does not swap the conjugates: negative control
    assert not verify_newton_identity(pair, 10, "direct")
    assert not verify_newton_identity(pair, 10, "frobenius_shortcut")


@pytest.mark.parametrize("p", [5, 7])
def test_newton_identity_other_odd_primes(p):
    # odd Frobenius powers swap the conjugate roots, even ones do not
    pair = build_alternative_pair(p)
    assert verify_newton_identity(pair, 1, "direct")
    assert verify_newton_identity(pair, p + 1, "direct")
    assert verify_newton_identity(pair, p**3 + 1, "frobenius_shortcut")
    assert not verify_newton_identity(pair, p**2 + 1, "frobenius_shortcut")


def test_newton_identity_p2_family():
    pair = build_alternative_pair(2)
    assert verify_newton_identity(pair, 1, "direct")
    for m in (5, 17):
        assert verify_newton_identity(pair, m, "direct")
        assert verify_newton_identity(pair, m, "frobenius_shortcut")
    # odd powers swap the cube roots: negative control
    assert not verify_newton_identity(pair, 3, "direct")


def test_newton_identity_mode_errors():
    pair = build_alternative_pair(3)
    with pytest.raises(ValueError):
        verify_newton_identity(pair, 7, "frobenius_shortcut")  # 6 is not a 3-power
    with pytest.raises(ValueError):
        verify_newton_identity(pair, 1, "frobenius_shortcut")
    with pytest.raises(ValueError):
        verify_newton_identity(pair, 4, "sideways")


def test_brute_count_examples():
    assert brute_count_alternatives(TowerParams(3, 2, 1)) == 2
    assert brute_count_alternatives(TowerParams(3, 3, 1)) == 4
    assert brute_count_alternatives(TowerParams(2, 4, 2)) == 4


def test_brute_count_is_even_and_at_least_two():
    for p in (2, 3, 5):
        for r in range(2, 6):
            for s in range(1, r):
                count = brute_count_alternatives(TowerParams(p, r, s))
                assert count >= 2 and count % 2 == 0


def test_brute_count_ceiling():
    with pytest.raises(ValueError, match="ceiling"):
        brute_count_alternatives(TowerParams(3, 9, 1), ceiling=100)


def test_degree_of_extension_modes():
    report = degree_of_extension(TowerParams(3, 3, 1), mode="both")
    assert (report.formula_value, report.oracle_value, report.agree) == (2, 2, True)
    assert report.oracle_count == 4
    report = degree_of_extension(TowerParams(3, 2, 1), mode="both")
    assert (report.formula_value, report.agree) == (1, True)
    report = degree_of_extension(TowerParams(2, 4, 2), mode="both")
    assert (report.formula_value, report.agree) == (2, True)
    formula_only = degree_of_extension(TowerParams(3, 3, 1), mode="formula")
    assert formula_only.oracle_count is None and formula_only.agree is None
    oracle_only = degree_of_extension(TowerParams(3, 3, 1), mode="oracle")
    assert oracle_only.formula_value is None and oracle_only.oracle_value == 2


def test_degree_of_extension_refusals():
    with pytest.raises(ValueError):
        degree_of_extension(TowerParams(3, 2, 0))
    with pytest.raises(ValueError):
        degree_of_extension(TowerParams(3, 3, 1), mode="guess")


def test_tower_params_validation():
    with pytest.raises(ValueError):
        TowerParams(4, 2, 1)
    with pytest.raises(ValueError):
        TowerParams(3, 1, 1)
    assert TowerParams(3, 6, 4).m == 2


def test_degree_report_json():
    blob = degree_of_extension(TowerParams(3, 3, 1)).to_json()
    assert blob == {
        "p": 3, "r": 3, "s": 1, "m": 1,
        "formula": 2, "oracle_count": 4, "oracle": 2, "agree": True,
    }


def test_gcd_reduction_degree():
    assert gcd_reduction_degree(1, 5) == 5
    assert gcd_reduction_degree(2, 3) == 12
    assert gcd_reduction_degree(3, 1) == 9
    assert gcd_reduction_degree(2, Fraction(3, 2)) == 6
    with pytest.raises(ValueError):
        gcd_reduction_degree(0, 1)


def test_newton_triple():
    t = NewtonTriple(28, 4, 1, 3)
    assert t.gcd == 1
    flags = t.p_divides
    assert not flags["a"] and not flags["b"] and not flags["c"]
    assert flags["a-b"] and flags["a-c"] and flags["b-c"]
    assert t.exponent_pair(Q).A == 27
    with pytest.raises(ValueError):
        NewtonTriple(3, 3, 1)


def test_counted_alternatives_are_factors_of_the_quotient():
    # every nontrivial alpha the oracle counts gives a linear form
    # alpha*x + (1-alpha)*y annihilating the (p^(r-s), 1) quotient
    p, r, s = 3, 3, 1
    spec = make_field(p, r - s)
    T = t_poly(ExponentPair(p ** (r - s), 1, spec))
    zero, one = spec.zero(), spec.one()
    counted = []
    for alpha in spec.elements():
        beta = frobenius(alpha, s)
        if 2 * alpha * beta == alpha + beta:
            counted.append(alpha)
    assert len(counted) == brute_count_alternatives(TowerParams(p, r, s))
    nontrivial = [a for a in counted if a not in (zero, one)]
    assert nontrivial
    for alpha in nontrivial:
        image = substitute(T, "Z", LinearForm(spec, alpha, one - alpha))
        assert image.is_zero()


def test_alternative_pair_json():
    blob = build_alternative_pair(3).to_json()
    assert blob["alpha"] == "3^2:[2,1]"
    assert blob["ambient"]["p"] == 3 and blob["ambient"]["r"] == 2
