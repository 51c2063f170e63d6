"""Core algebra tests: blade products, wedge/contraction, rotors, rendering."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffsphere.multivector import (
    Multivector,
    contract,
    geometric_product,
    grade_norms,
    grade_part,
    norm,
    render,
    reversion,
    rotor_exp,
    scalar_part,
    unit_vector,
    wedge,
)

from .oracles import (
    naive_contract,
    naive_product,
    naive_wedge,
    rotation_matrix_2d,
    series_exp,
)

e = Multivector.basis_vector


def random_unit(rng, k=3):
    v = rng.normal(size=k)
    return v / np.linalg.norm(v)


def mv_close(x, y, tol=1e-12):
    return norm(x - y) <= tol


# -- geometric product ---------------------------------------------------------


def test_generator_squares_to_one():
    for dim in (1, 3, 7):
        for j in range(1, dim + 1):
            sq = geometric_product(e(dim, j), e(dim, j))
            assert np.array_equal(sq.coeffs, Multivector.scalar(dim, 1.0).coeffs)


def test_volume_element_squares_to_minus_one_in_cl30():
    I = Multivector.volume(3)
    sq = geometric_product(I, I)
    assert np.array_equal(sq.coeffs, Multivector.scalar(3, -1.0).coeffs)


def test_e124_times_e1_in_cl70():
    # oracle: naive blade-by-blade multiplier
    x = geometric_product(geometric_product(e(7, 1), e(7, 2)), e(7, 4))
    got = geometric_product(x, e(7, 1))
    expected = naive_product(x.coeffs, e(7, 1).coeffs)
    assert np.array_equal(got.coeffs, expected)
    # frozen value from the oracle: + e2 e4
    want = geometric_product(e(7, 2), e(7, 4))
    assert np.array_equal(got.coeffs, want.coeffs)


def test_anticommutation_exact():
    for dim in (3, 7):
        for j in range(1, dim + 1):
            for k in range(1, dim + 1):
                anti = geometric_product(e(dim, j), e(dim, k)) + geometric_product(
                    e(dim, k), e(dim, j)
                )
                want = Multivector.scalar(dim, 2.0 if j == k else 0.0)
                assert np.array_equal(anti.coeffs, want.coeffs)


@pytest.mark.parametrize("dim,n_triples,rel_tol", [(3, 500, 1e-10), (7, 500, 1e-10)])
def test_associativity_random_triples(dim, n_triples, rel_tol):
    rng = np.random.default_rng(2024 + dim)
    for _ in range(n_triples):
        x, y, z = (Multivector(dim, rng.normal(size=1 << dim)) for _ in range(3))
        lhs = geometric_product(geometric_product(x, y), z)
        rhs = geometric_product(x, geometric_product(y, z))
        bound = rel_tol * norm(x) * norm(y) * norm(z)
        assert norm(lhs - rhs) < bound


@pytest.mark.parametrize("dim,n_pairs", [(1, 50), (2, 100), (3, 200), (4, 200), (5, 200), (6, 100), (7, 200), (8, 40)])
def test_fast_product_matches_naive_oracle(dim, n_pairs):
    rng = np.random.default_rng(7 * dim + 1)
    for _ in range(n_pairs):
        x = Multivector(dim, rng.normal(size=1 << dim))
        y = Multivector(dim, rng.normal(size=1 << dim))
        got = geometric_product(x, y)
        want = naive_product(x.coeffs, y.coeffs)
        assert np.max(np.abs(got.coeffs - want)) < 1e-12


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError, match="dimension mismatch"):
        geometric_product(e(3, 1), e(7, 1))
    with pytest.raises(ValueError, match="dimension mismatch"):
        wedge(e(3, 1), e(4, 1))
    with pytest.raises(ValueError, match="dimension mismatch"):
        contract(e(3, 1), e(4, 1))


# -- wedge and contraction ------------------------------------------------------


def test_wedge_of_parallel_generator_vanishes():
    z = wedge(e(3, 1), e(3, 1))
    assert np.array_equal(z.coeffs, np.zeros(8))


def test_wedge_of_orthogonal_generators_is_unit_blade():
    w = wedge(e(3, 1), e(3, 2))
    assert np.array_equal(w.coeffs, Multivector.blade(3, 0b011).coeffs)


def test_wedge_rotated_vector_closed_form():
    # a ^ b for a = e_x, b = cos(t) e_x + sin(t) e_y equals sin(t) e12;
    # oracle: grade-(r+s) projection of the geometric product
    for theta in (0.1, 0.5, 1.2, 2.9):
        a = Multivector.from_vector([1.0, 0.0, 0.0])
        b = Multivector.from_vector([math.cos(theta), math.sin(theta), 0.0])
        w = wedge(a, b)
        assert mv_close(w, math.sin(theta) * Multivector.blade(3, 0b011), 1e-15)
        proj = grade_part(geometric_product(a, b), 2)
        assert mv_close(w, proj, 0.0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_wedge_antisymmetric_on_vectors(seed):
    rng = np.random.default_rng(seed)
    a = Multivector.from_vector(rng.normal(size=3))
    b = Multivector.from_vector(rng.normal(size=3))
    assert mv_close(wedge(a, b) + wedge(b, a), Multivector.zero(3), 1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31 - 1), st.sampled_from([3, 7]))
def test_wedge_and_contract_match_naive_oracles(seed, dim):
    rng = np.random.default_rng(seed)
    x = Multivector(dim, rng.normal(size=1 << dim))
    y = Multivector(dim, rng.normal(size=1 << dim))
    assert np.max(np.abs(wedge(x, y).coeffs - naive_wedge(x.coeffs, y.coeffs))) < 1e-12
    assert (
        np.max(np.abs(contract(x, y).coeffs - naive_contract(x.coeffs, y.coeffs)))
        < 1e-12
    )


def test_contract_volume_with_generator():
    # I . e_z = e1 e2 in Cl(3,0); oracle: naive multiplier
    I = Multivector.volume(3)
    got = contract(I, e(3, 3))
    want = naive_product(I.coeffs, e(3, 3).coeffs)  # pure grade 2 already
    assert np.array_equal(got.coeffs, want)
    assert np.array_equal(got.coeffs, Multivector.blade(3, 0b011).coeffs)


def test_contract_vector_with_itself_is_scalar_one():
    got = contract(e(3, 1), e(3, 1))
    assert np.array_equal(got.coeffs, Multivector.scalar(3, 1.0).coeffs)


def test_vector_product_decomposes_into_contract_plus_wedge():
    rng = np.random.default_rng(11)
    for _ in range(200):
        a = Multivector.from_vector(random_unit(rng))
        b = Multivector.from_vector(random_unit(rng))
        total = contract(a, b) + wedge(a, b)
        assert mv_close(geometric_product(a, b), total, 1e-12)


# -- grade projection -----------------------------------------------------------


def test_grade_part_projects():
    x = Multivector.scalar(3, 1.0) + e(3, 1) + Multivector.blade(3, 0b011)
    assert np.array_equal(grade_part(x, 1).coeffs, e(3, 1).coeffs)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31 - 1), st.sampled_from([2, 3, 7]))
def test_grade_part_idempotent_and_complete(seed, dim):
    rng = np.random.default_rng(seed)
    x = Multivector(dim, rng.normal(size=1 << dim))
    total = Multivector.zero(dim)
    for g in range(dim + 1):
        p = grade_part(x, g)
        assert np.array_equal(grade_part(p, g).coeffs, p.coeffs)
        total = total + p
    assert np.array_equal(total.coeffs, x.coeffs)


def test_grade_norms_accounts_for_every_grade():
    x = Multivector.scalar(3, 3.0) + 4.0 * Multivector.blade(3, 0b011)
    gn = grade_norms(x)
    assert gn[0] == 3.0 and gn[2] == 4.0 and gn[1] == 0.0 and gn[3] == 0.0


# -- reversion and norm ----------------------------------------------------------


def test_reversion_signs():
    assert np.array_equal(
        reversion(Multivector.blade(3, 0b011)).coeffs,
        (-1.0 * Multivector.blade(3, 0b011)).coeffs,
    )
    assert scalar_part(reversion(Multivector.scalar(3, 2.0))) == 2.0
    assert np.array_equal(reversion(e(3, 2)).coeffs, e(3, 2).coeffs)
    # grade 3 flips: (-1)^(3*2/2) = -1
    I = Multivector.volume(3)
    assert np.array_equal(reversion(I).coeffs, (-1.0 * I).coeffs)


def test_norm_zero_and_rotor_norm():
    assert norm(Multivector.zero(3)) == 0.0
    B = Multivector.blade(3, 0b011)
    for theta in (0.0, 0.3, 1.0, math.pi):
        assert abs(norm(rotor_exp(B, theta)) - 1.0) < 1e-15


# -- rotors -----------------------------------------------------------------------


def test_rotor_exp_closed_form_against_series_oracle():
    B = Multivector.blade(3, 0b011)
    for theta in (0.0, 0.25, math.pi / 2, math.pi, 2.5):
        got = rotor_exp(B, theta)
        want = series_exp(B.coeffs, theta)
        assert np.max(np.abs(got.coeffs - want)) < 1e-13


def test_rotor_exp_special_angles():
    B = Multivector.blade(3, 0b011)
    assert mv_close(rotor_exp(B, 0.0), Multivector.scalar(3, 1.0), 0.0)
    assert mv_close(rotor_exp(B, math.pi), Multivector.scalar(3, -1.0), 1e-15)
    assert mv_close(rotor_exp(B, math.pi / 2), B, 1e-15)


def test_rotor_exp_rejects_bad_generators():
    with pytest.raises(ValueError, match="pure bivector"):
        rotor_exp(e(3, 1), 0.5)
    with pytest.raises(ValueError, match="unit bivector"):
        rotor_exp(2.0 * Multivector.blade(3, 0b011), 0.5)


def test_rotor_reversion_product_is_identity():
    rng = np.random.default_rng(5)
    for _ in range(100):
        c = random_unit(rng)
        B = contract(Multivector.volume(3), Multivector.from_vector(c))
        R = rotor_exp(B, rng.uniform(-3, 3))
        assert mv_close(
            geometric_product(R, reversion(R)), Multivector.scalar(3, 1.0), 1e-12
        )


def test_rotor_sandwich_rotates_by_twice_the_angle():
    # R v ~R with R = exp(B t) acts as the 2x2 matrix [[cos 2t, sin 2t],
    # [-sin 2t, cos 2t]] on the (u, w) coordinates of the B-plane (B = u w).
    rng = np.random.default_rng(17)
    for _ in range(100):
        u = random_unit(rng)
        w = rng.normal(size=3)
        w -= np.dot(w, u) * u
        w /= np.linalg.norm(w)
        B = wedge(Multivector.from_vector(u), Multivector.from_vector(w))
        theta = rng.uniform(-2, 2)
        R = rotor_exp(B, theta)
        v = rng.uniform(-1, 1) * u + rng.uniform(-1, 1) * w
        out = geometric_product(
            geometric_product(R, Multivector.from_vector(v)), reversion(R)
        )
        coords = np.array([np.dot(v, u), np.dot(v, w)])
        want = rotation_matrix_2d(2 * theta) @ coords
        got = out.vector_components()
        want_vec = want[0] * u + want[1] * w
        assert np.max(np.abs(got - want_vec)) < 1e-10


# -- construction and rendering ----------------------------------------------------


def test_coefficients_are_immutable():
    x = Multivector.scalar(3, 1.0)
    with pytest.raises(ValueError):
        x.coeffs[0] = 2.0


def test_invalid_construction_rejected():
    with pytest.raises(ValueError):
        Multivector(0, np.array([1.0]))
    with pytest.raises(ValueError):
        Multivector(9, np.zeros(512))
    with pytest.raises(ValueError):
        Multivector(3, np.zeros(7))
    with pytest.raises(ValueError):
        Multivector(3, np.array([np.nan] + [0.0] * 7))


def test_render_format():
    x = Multivector.scalar(3, 1.0) + 2.0 * Multivector.blade(3, 0b011)
    assert render(x) == "1.0 + 2.0*e12"
    y = -1.5 * e(3, 3) + 0.5 * Multivector.volume(3)
    assert render(y) == "-1.5*e3 + 0.5*e123"
    assert render(Multivector.zero(3)) == "0.0"
    assert str(x - 2.0 * Multivector.blade(3, 0b011) - Multivector.scalar(3, 2.0)) == "-1.0"


def test_unit_vector_tolerance():
    v = unit_vector([1.0 + 5e-10, 0.0, 0.0])
    assert abs(np.linalg.norm(v) - 1.0) < 1e-15
    with pytest.raises(ValueError, match="unit vector"):
        unit_vector([1.1, 0.0, 0.0])
