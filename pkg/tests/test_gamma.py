"""The two-coefficient model category and its comparison with complexes."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALGEBRA_PARAMS
from kbproj.algebra import AlgebraSpec
from kbproj.complexes import (
    add_chain_maps,
    compose_chain_maps,
    hom_space_dimension,
    is_isomorphic_K,
    is_null_homotopic,
    scale_chain_map,
    shift,
    stalk_complex,
    validate_chain_map,
)
from kbproj.gamma import (
    GammaHom,
    GammaVertex,
    gamma_compose,
    gamma_hom_dim,
    hom_add,
    hom_f,
    hom_g,
    hom_scale,
    identity_hom,
    in_F,
    in_G,
    invert_hom,
    irreducible_targets,
    is_irreducible,
    is_isomorphism,
    is_shifted_projective,
    is_vertex,
    projective_vertex,
    radical_degree,
    suspend_hom,
    suspend_vertex,
    theta_hom,
    theta_vertex,
    unsuspend_hom,
    unsuspend_vertex,
    zero_hom,
)
from kbproj.quadruples import Quadruple, build_complex, suspend_quadruple


def grid(spec: AlgebraSpec, lo: int, hi: int) -> list[GammaVertex]:
    return [
        GammaVertex(i, a, b)
        for i in range(spec.n)
        for a in range(lo, hi + 1)
        for b in range(lo, hi + 1)
        if is_vertex(spec, GammaVertex(i, a, b))
    ]


def test_vertex_membership():
    spec = AlgebraSpec(2, 1)
    assert is_vertex(spec, GammaVertex(0, 0, 0))
    assert is_vertex(spec, GammaVertex(0, 1, 0))  # sheet 0 allows a <= b + m
    assert not is_vertex(spec, GammaVertex(1, 1, 0))
    assert not is_vertex(spec, GammaVertex(2, 0, 0))
    assert is_vertex(AlgebraSpec(1, 0), GammaVertex(0, 5, 5))
    assert not is_vertex(AlgebraSpec(1, 0), GammaVertex(0, 1, 0))


def test_hom_dim_is_membership_count(spec):
    vertices = grid(spec, -2, 2)
    for v in vertices:
        for u in vertices:
            assert gamma_hom_dim(spec, v, u) == int(in_F(spec, v, u)) + int(
                in_G(spec, v, u)
            )


def test_identity_is_f_plus_maybe_g():
    spec = AlgebraSpec(2, 1)
    v = GammaVertex(0, 0, 0)
    assert in_F(spec, v, v)
    assert not in_G(spec, v, v)
    # only the band case admits a loop of the second kind
    loop = AlgebraSpec(1, 0)
    w = GammaVertex(0, 0, 1)
    assert in_G(loop, w, w)
    assert in_G(loop, GammaVertex(0, 0, 0), GammaVertex(0, 0, 0))


def test_composition_examples():
    spec = AlgebraSpec(2, 1)
    v, u, w = GammaVertex(0, 0, 0), GammaVertex(0, 0, 1), GammaVertex(0, 1, 1)
    f1 = hom_f(spec, v, u)
    f2 = hom_f(spec, u, w)
    assert gamma_compose(f2, f1) == hom_f(spec, v, w)
    g1 = hom_g(spec, v, GammaVertex(1, 0, 0))
    composed = gamma_compose(hom_f(spec, GammaVertex(1, 0, 0), GammaVertex(1, 0, 1)), g1)
    assert composed.g_coeff == 1 and composed.f_coeff == 0


def test_second_kind_squares_to_zero(spec):
    vertices = grid(spec, -1, 1)
    for v in vertices:
        for u in vertices:
            if not in_G(spec, v, u):
                continue
            for w in vertices:
                if in_G(spec, u, w):
                    assert gamma_compose(hom_g(spec, u, w), hom_g(spec, v, u)).is_zero()


def test_normal_form_rejects_missing_generators():
    spec = AlgebraSpec(2, 1)
    v, u = GammaVertex(0, 0, 0), GammaVertex(1, 0, 0)
    assert not in_F(spec, v, u)
    with pytest.raises(ValueError):
        GammaHom(spec, v, u, Fraction(1), Fraction(0))
    GammaHom(spec, v, u, Fraction(0), Fraction(1))  # second kind exists


def test_isomorphisms_and_inverses():
    spec = AlgebraSpec(1, 0)
    v = GammaVertex(0, 0, 1)
    h = GammaHom(spec, v, v, Fraction(2), Fraction(3))
    assert is_isomorphism(h)
    inv = invert_hom(h)
    assert gamma_compose(inv, h) == identity_hom(spec, v)
    assert gamma_compose(h, inv) == identity_hom(spec, v)
    assert not is_isomorphism(zero_hom(spec, v, v))
    with pytest.raises(ValueError):
        invert_hom(GammaHom(spec, v, v, Fraction(0), Fraction(1)))


def test_radical_degree_and_irreducibility():
    spec = AlgebraSpec(2, 1)
    v = GammaVertex(0, 0, 0)
    assert radical_degree(identity_hom(spec, v)) == 0
    f = hom_f(spec, v, GammaVertex(0, 0, 1))
    assert radical_degree(f) == 1
    assert is_irreducible(f)
    far = hom_f(spec, v, GammaVertex(0, 0, 2))
    assert radical_degree(far) == 2
    assert not is_irreducible(far)


def test_irreducible_targets_shape(spec):
    for v in grid(spec, -1, 1):
        targets = irreducible_targets(spec, v)
        assert 1 <= len(targets) <= 2
        for t in targets:
            assert is_vertex(spec, t)
            assert gamma_hom_dim(spec, v, t) >= 1


def test_suspension_is_a_bijection(spec):
    for v in grid(spec, -2, 2):
        s = suspend_vertex(spec, v)
        assert is_vertex(spec, s)
        assert unsuspend_vertex(spec, s) == v


def test_suspension_transports_homs(spec):
    vertices = grid(spec, -1, 1)
    for v in vertices:
        for u in vertices:
            for h in (
                [hom_f(spec, v, u)] if in_F(spec, v, u) else []
            ) + ([hom_g(spec, v, u)] if in_G(spec, v, u) else []):
                moved = suspend_hom(h)
                assert moved.source == suspend_vertex(spec, v)
                assert moved.target == suspend_vertex(spec, u)
                assert unsuspend_hom(moved) == h


def test_projective_vertices_are_stalks(spec):
    for j in spec.vertices:
        v = projective_vertex(spec, j)
        assert is_shifted_projective(spec, v) == (j, 0)
        c = build_complex(spec, theta_vertex(spec, v))
        assert is_isomorphic_K(c, stalk_complex(spec, j))


def test_shifted_projective_detection():
    spec = AlgebraSpec(2, 1)
    assert is_shifted_projective(spec, GammaVertex(1, 1, 1)) == (-1, 1)
    assert is_shifted_projective(spec, GammaVertex(0, 0, 0)) == (0, 0)
    assert is_shifted_projective(spec, GammaVertex(0, 0, 1)) is None


def test_theta_frozen_values():
    loop = AlgebraSpec(1, 0)
    assert theta_vertex(loop, GammaVertex(0, 0, 0)) == Quadruple(0, 0, 0, 0)
    assert theta_vertex(loop, GammaVertex(0, 0, 1)) == Quadruple(-1, 0, 1, 0)
    assert theta_vertex(loop, GammaVertex(0, 0, 2)) == Quadruple(-2, 0, 2, 0)
    assert theta_vertex(loop, GammaVertex(0, 1, 1)) == Quadruple(-1, 0, 0, 0)
    spec = AlgebraSpec(1, 1)
    assert theta_vertex(spec, GammaVertex(0, 1, 0)) == Quadruple(0, 0, 0, -1)
    assert theta_vertex(spec, GammaVertex(0, 0, 1)) == Quadruple(-1, -1, 1, 0)
    assert theta_vertex(spec, GammaVertex(0, 2, 1)) == Quadruple(-1, -1, 0, -1)
    assert theta_vertex(spec, GammaVertex(0, 3, 2)) == Quadruple(-1, 0, 0, -1)
    spec = AlgebraSpec(3, 2)
    assert theta_vertex(spec, GammaVertex(1, 1, 1)) == Quadruple(-1, -2, 0, -2)
    assert theta_vertex(spec, GammaVertex(1, 1, 2)) == Quadruple(-1, -1, 0, -1)
    spec = AlgebraSpec(2, 1)
    assert theta_vertex(spec, GammaVertex(1, 1, 1)) == Quadruple(-1, -1, 0, -1)


def test_theta_is_injective_on_windows(spec):
    vertices = grid(spec, -2, 2)
    images = [theta_vertex(spec, v) for v in vertices]
    assert len(set(images)) == len(images)


def test_theta_commutes_with_suspension_strictly(spec):
    for v in grid(spec, -2, 2):
        assert theta_vertex(spec, suspend_vertex(spec, v)) == suspend_quadruple(
            theta_vertex(spec, v)
        )


def test_theta_hom_transports_bases(spec):
    vertices = grid(spec, -1, 1)
    for v in vertices:
        for u in vertices:
            expected = gamma_hom_dim(spec, v, u)
            got = hom_space_dimension(
                build_complex(spec, theta_vertex(spec, v)),
                build_complex(spec, theta_vertex(spec, u)),
            )
            assert expected == got
            for h in (
                [hom_f(spec, v, u)] if in_F(spec, v, u) else []
            ) + ([hom_g(spec, v, u)] if in_G(spec, v, u) else []):
                chain = theta_hom(h)
                assert validate_chain_map(chain) is None
                assert not is_null_homotopic(chain)


def test_theta_functoriality_small_window():
    spec = AlgebraSpec(2, 1)
    vertices = grid(spec, -1, 1)
    gens = []
    for v in vertices:
        for u in vertices:
            if in_F(spec, v, u) and v != u:
                gens.append(hom_f(spec, v, u))
            if in_G(spec, v, u):
                gens.append(hom_g(spec, v, u))
    for h1 in gens:
        for h2 in gens:
            if h2.source != h1.target:
                continue
            lhs = compose_chain_maps(theta_hom(h2), theta_hom(h1))
            composite = gamma_compose(h2, h1)
            if not composite.is_zero():
                lhs = add_chain_maps(lhs, scale_chain_map(theta_hom(composite), -1))
            assert is_null_homotopic(lhs), (h1, h2)


coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=2)


@st.composite
def random_hom(draw, spec: AlgebraSpec, v: GammaVertex, u: GammaVertex):
    lam = draw(coeffs) if in_F(spec, v, u) else Fraction(0)
    mu = draw(coeffs) if in_G(spec, v, u) else Fraction(0)
    return GammaHom(spec, v, u, lam, mu)


@settings(max_examples=60)
@given(data=st.data())
def test_composition_is_bilinear_and_associative(data):
    n, m = data.draw(st.sampled_from(ALGEBRA_PARAMS))
    spec = AlgebraSpec(n, m)
    vertices = grid(spec, -1, 1)
    a, b, c, d = (data.draw(st.sampled_from(vertices)) for _ in range(4))
    h1 = data.draw(random_hom(spec, a, b))
    h2 = data.draw(random_hom(spec, b, c))
    h3 = data.draw(random_hom(spec, c, d))
    assert gamma_compose(h3, gamma_compose(h2, h1)) == gamma_compose(
        gamma_compose(h3, h2), h1
    )
    h2b = data.draw(random_hom(spec, b, c))
    t = data.draw(coeffs)
    assert gamma_compose(hom_add(h2, h2b), h1) == hom_add(
        gamma_compose(h2, h1), gamma_compose(h2b, h1)
    )
    assert gamma_compose(hom_scale(h2, t), h1) == hom_scale(gamma_compose(h2, h1), t)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_theta_respects_random_combinations(data):
    n, m = data.draw(st.sampled_from(ALGEBRA_PARAMS))
    spec = AlgebraSpec(n, m)
    vertices = grid(spec, -1, 1)
    v = data.draw(st.sampled_from(vertices))
    u = data.draw(st.sampled_from(vertices))
    h = data.draw(random_hom(spec, v, u))
    if h.is_zero():
        return
    chain = theta_hom(h)
    rebuilt = None
    if h.f_coeff:
        rebuilt = scale_chain_map(theta_hom(hom_f(spec, v, u)), h.f_coeff)
    if h.g_coeff:
        part = scale_chain_map(theta_hom(hom_g(spec, v, u)), h.g_coeff)
        rebuilt = part if rebuilt is None else add_chain_maps(rebuilt, part)
    assert chain.key() == rebuilt.key()
