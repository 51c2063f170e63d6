"""Oriented frame tests: handedness, subalgebras, duality, abstract/embedded match."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffsphere.frames import (
    AbstractElement,
    OrientationMixError,
    abstract_product,
    abstract_to_embedded,
    build_frame,
    combined_identity_check,
    cross,
    duality_check,
    hidden_basis,
    standard_score,
    vector3,
    volume3,
)
from cliffsphere.multivector import (
    Multivector,
    contract,
    geometric_product,
    grade_part,
    norm,
    scalar_part,
)

EPS = {
    (1, 2): 3,
    (2, 3): 1,
    (3, 1): 2,
}


def eps_sign(j, k):
    """(epsilon_jkl, l) for j != k, 1-based indices."""
    if (j, k) in EPS:
        return 1, EPS[(j, k)]
    return -1, EPS[(k, j)]


def random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


# -- frames ---------------------------------------------------------------------


@pytest.mark.parametrize("lam", [1, -1])
def test_frame_squares_to_minus_one(lam):
    frame = build_frame(lam)
    for b in frame.beta:
        sq = geometric_product(b, b)
        assert np.array_equal(sq.coeffs, Multivector.scalar(3, -1.0).coeffs)


@pytest.mark.parametrize("lam", [1, -1])
def test_frame_anticommutes(lam):
    frame = build_frame(lam)
    for j in range(3):
        for k in range(3):
            if j == k:
                continue
            anti = geometric_product(frame.beta[j], frame.beta[k]) + geometric_product(
                frame.beta[k], frame.beta[j]
            )
            assert norm(anti) == 0.0


@pytest.mark.parametrize("lam", [1, -1])
def test_ordered_product_detects_handedness_exactly(lam):
    got = build_frame(lam).ordered_product()
    assert np.array_equal(got.coeffs, Multivector.scalar(3, float(lam)).coeffs)


@pytest.mark.parametrize("lam", [1, -1])
def test_frame_subalgebra_structure_constants(lam):
    # beta_j beta_k = -delta_jk - lam * eps_jkl * beta_l in the embedded frame
    frame = build_frame(lam)
    for j in range(1, 4):
        for k in range(1, 4):
            got = geometric_product(frame.beta[j - 1], frame.beta[k - 1])
            if j == k:
                want = Multivector.scalar(3, -1.0)
            else:
                s, l = eps_sign(j, k)
                want = (-lam * s) * frame.beta[l - 1]
            assert norm(got - want) == 0.0


def test_left_frame_satisfies_plus_epsilon_subalgebra():
    # the lam = -1 frame realizes beta_j beta_k = -delta_jk + eps_jkl beta_l
    frame = build_frame(-1)
    for j in range(1, 4):
        for k in range(1, 4):
            if j == k:
                continue
            got = geometric_product(frame.beta[j - 1], frame.beta[k - 1])
            s, l = eps_sign(j, k)
            want = float(s) * frame.beta[l - 1]
            assert norm(got - want) < 1e-12


def test_vector_basis_flip_leaves_bivector_handedness_unchanged():
    # flip e_y -> -e_y: the volume element flips to -I, but the rebuilt
    # bivector frame keeps ordered product +1
    ex = Multivector.basis_vector(3, 1)
    ey = -1.0 * Multivector.basis_vector(3, 2)
    ez = Multivector.basis_vector(3, 3)
    I_flipped = geometric_product(geometric_product(ex, ey), ez)
    assert np.array_equal(I_flipped.coeffs, (-1.0 * volume3()).coeffs)
    beta = [contract(I_flipped, v) for v in (ex, ey, ez)]
    prod = geometric_product(geometric_product(beta[0], beta[1]), beta[2])
    assert np.array_equal(prod.coeffs, Multivector.scalar(3, 1.0).coeffs)


def test_bivector_basis_flip_flips_handedness():
    frame = build_frame(1)
    flipped = [-1.0 * b for b in frame.beta]
    prod = geometric_product(geometric_product(flipped[0], flipped[1]), flipped[2])
    assert np.array_equal(prod.coeffs, Multivector.scalar(3, -1.0).coeffs)


def test_orientation_validation():
    with pytest.raises(ValueError, match="orientation"):
        build_frame(0)
    with pytest.raises(ValueError, match="orientation"):
        standard_score([1.0, 0.0, 0.0], 2)


# -- abstract algebra -------------------------------------------------------------


def test_abstract_identity_element():
    one = AbstractElement.scalar(1.0, -1)
    x = AbstractElement(0.3, (0.1, -0.2, 0.7), -1)
    got = abstract_product(one, x)
    assert np.array_equal(got.coeffs, x.coeffs)
    assert np.array_equal(abstract_product(x, one).coeffs, x.coeffs)


def test_abstract_beta_squares():
    for lam in (1, -1):
        bx = AbstractElement(0.0, (1.0, 0.0, 0.0), lam)
        got = abstract_product(bx, bx)
        assert np.array_equal(got.coeffs, np.array([-1.0, 0.0, 0.0, 0.0]))


def test_abstract_bx_by_left_handed_gives_plus_bz():
    # lam = -1: beta_x beta_y = -(-1) eps_xyz beta_z = +beta_z;
    # oracle: embedded frame product via build_frame(-1)
    bx = AbstractElement(0.0, (1.0, 0.0, 0.0), -1)
    by = AbstractElement(0.0, (0.0, 1.0, 0.0), -1)
    got = abstract_product(bx, by)
    assert np.array_equal(got.coeffs, np.array([0.0, 0.0, 0.0, 1.0]))
    frame = build_frame(-1)
    embedded = geometric_product(frame.beta[0], frame.beta[1])
    assert norm(embedded - frame.beta[2]) == 0.0


def test_mixed_orientation_rejected():
    x = AbstractElement(0.0, (1.0, 0.0, 0.0), 1)
    y = AbstractElement(0.0, (1.0, 0.0, 0.0), -1)
    with pytest.raises(OrientationMixError):
        abstract_product(x, y)
    with pytest.raises(OrientationMixError):
        abstract_to_embedded(x, build_frame(-1))


@pytest.mark.parametrize("lam", [1, -1])
def test_standard_score_squares_to_minus_one(lam):
    # oracle: embedded computation through the orientation's frame
    rng = np.random.default_rng(3 + lam)
    frame = build_frame(lam)
    for _ in range(100):
        a = random_unit(rng)
        s = standard_score(a, lam)
        sq = abstract_product(s, s)
        assert np.linalg.norm(sq.coeffs - np.array([-1.0, 0, 0, 0])) < 1e-12
        emb = abstract_to_embedded(s, frame)
        emb_sq = geometric_product(emb, emb)
        assert norm(emb_sq - Multivector.scalar(3, -1.0)) < 1e-12


def test_standard_score_definition_and_unit_check():
    s = standard_score([0.0, 0.0, 1.0], 1)
    assert s.c0 == 0.0 and s.c == (0.0, 0.0, 1.0)
    s = standard_score([0.0, 0.0, 1.0], -1)
    assert s.c == (-0.0, -0.0, -1.0)
    with pytest.raises(ValueError, match="unit vector"):
        standard_score([0.5, 0.0, 0.0], 1)


def test_score_product_expands_to_dot_and_cross():
    # {lam a.beta}{lam b.beta} = -a.b - lam (a x b).beta
    rng = np.random.default_rng(9)
    for lam in (1, -1):
        for _ in range(300):
            a, b = random_unit(rng), random_unit(rng)
            got = abstract_product(standard_score(a, lam), standard_score(b, lam))
            want = np.concatenate(([-np.dot(a, b)], -lam * cross(a, b)))
            assert np.linalg.norm(got.coeffs - want) < 1e-12


def test_score_product_lambda_plus_one_spec_example():
    rng = np.random.default_rng(21)
    a, b = random_unit(rng), random_unit(rng)
    got = abstract_product(standard_score(a, 1), standard_score(b, 1))
    assert abs(got.c0 - (-np.dot(a, b))) < 1e-15
    assert np.linalg.norm(np.asarray(got.c) - (-cross(a, b))) < 1e-15


# -- duality and the combined identity ----------------------------------------------


@pytest.mark.parametrize("lam", [1, -1])
def test_duality_residual_vanishes(lam):
    rng = np.random.default_rng(40 + lam)
    worst = 0.0
    for _ in range(300):
        a, b = random_unit(rng), random_unit(rng)
        worst = max(worst, duality_check(a, b, lam))
    assert worst < 1e-12


def test_duality_parallel_vectors_both_sides_zero():
    a = np.array([0.6, 0.8, 0.0])
    assert duality_check(a, a, 1) == 0.0
    assert norm(contract(volume3(), vector3(cross(a, a)))) == 0.0


@pytest.mark.parametrize("lam", [1, -1])
def test_combined_identity_residual(lam):
    rng = np.random.default_rng(50 + lam)
    worst = 0.0
    for _ in range(300):
        a, b = random_unit(rng), random_unit(rng)
        worst = max(worst, combined_identity_check(a, b, lam))
    assert worst < 1e-12


def test_combined_identity_degenerate_cases():
    a = np.array([1.0, 0.0, 0.0])
    b = np.array([0.0, 1.0, 0.0])
    # perpendicular: scalar part of the product is 0
    got = abstract_product(standard_score(a, 1), standard_score(b, 1))
    assert got.c0 == 0.0
    # parallel: both sides are the scalar -1
    got = abstract_product(standard_score(a, 1), standard_score(a, 1))
    assert np.array_equal(got.coeffs, np.array([-1.0, 0, 0, 0]))
    assert combined_identity_check(a, a, -1) == 0.0


# -- isomorphism between the representations ------------------------------------------


@pytest.mark.parametrize("lam", [1, -1])
def test_abstract_product_matches_embedded_frame(lam):
    # the map beta_j -> lam * (I . e_j) carries abstract_product to the
    # geometric product
    rng = np.random.default_rng(60 + lam)
    frame = build_frame(lam)
    for _ in range(200):
        x = AbstractElement(rng.normal(), tuple(rng.normal(size=3)), lam)
        y = AbstractElement(rng.normal(), tuple(rng.normal(size=3)), lam)
        abstract = abstract_product(x, y)
        embedded = geometric_product(
            abstract_to_embedded(x, frame), abstract_to_embedded(y, frame)
        )
        assert norm(abstract_to_embedded(abstract, frame) - embedded) < 1e-12


def test_embedded_elements_are_even_grade():
    frame = build_frame(1)
    x = AbstractElement(0.5, (0.1, 0.2, 0.3), 1)
    emb = abstract_to_embedded(x, frame)
    assert norm(emb - grade_part(emb, 0) - grade_part(emb, 2)) == 0.0


# -- hidden basis ----------------------------------------------------------------------


@pytest.mark.parametrize("lam", [1, -1])
def test_hidden_basis_volume_sign(lam):
    basis = hidden_basis(lam)
    assert len(basis.blades) == 8
    vol = basis.volume_element()
    assert scalar_part(contract(vol, vol)) == -1.0
    # exactly one volume-grade element, carrying the orientation sign
    volume_terms = [b for b in basis.blades if b.coeffs[0b111] != 0.0]
    assert len(volume_terms) == 1
    assert volume_terms[0].coeffs[0b111] == float(lam)
    for b in basis.blades[:-1]:
        assert b.coeffs[0b111] == 0.0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31 - 1), st.sampled_from([1, -1]))
def test_duality_and_identity_hold_for_arbitrary_unit_pairs(seed, lam):
    rng = np.random.default_rng(seed)
    a, b = random_unit(rng), random_unit(rng)
    assert duality_check(a, b, lam) < 1e-12
    assert combined_identity_check(a, b, lam) < 1e-12
