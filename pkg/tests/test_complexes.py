"""Chain-level oracle: validation, hom spaces, cones, isomorphism tests.

Everything here is exact rational linear algebra on honest chain maps; the
closed-form combinatorics is tested against this module, never the other
way around.
"""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALGEBRA_PARAMS
from kbproj.algebra import AlgebraSpec, PathCombination, make_path
from kbproj.complexes import (
    add_chain_maps,
    compose_chain_maps,
    cone_inclusion,
    cone_projection,
    direct_sum,
    dumps_complex,
    hom_space,
    hom_space_dimension,
    homotopy_rank,
    identity_chain_map,
    is_contractible,
    is_isomorphic_K,
    is_null_homotopic,
    loads_complex,
    make_chain_map,
    make_complex,
    mapping_cone,
    minimal_model,
    scale_chain_map,
    shift,
    shift_chain_map,
    stalk_complex,
    validate_chain_map,
    validate_complex,
    zero_chain_map,
    zero_complex,
)
from kbproj.quadruples import Quadruple, build_complex, enumerate_quadruples


def two_term(spec: AlgebraSpec):
    """Tail top in degree 0, its cover P_0 in degree 1, tail arrow between."""
    entry = PathCombination.of(make_path(spec, [-1]))
    return make_complex(spec, {0: (-1,), 1: (0,)}, {0: ((entry,),)})


def test_validate_accepts_built_complexes():
    for n, m in ALGEBRA_PARAMS:
        spec = AlgebraSpec(n, m)
        for q in enumerate_quadruples(spec, -2, 2, 3):
            assert validate_complex(build_complex(spec, q)) is None


def test_validate_rejects_bad_shape():
    spec = AlgebraSpec(2, 1)
    entry = PathCombination.of(make_path(spec, [-1]))
    c = make_complex(spec, {0: (0, 0), 1: (-1,)}, {0: ((entry,),)})
    assert validate_complex(c) is not None


def test_validate_rejects_wrong_endpoints():
    spec = AlgebraSpec(2, 1)
    entry = PathCombination.of(make_path(spec, [0]))
    c = make_complex(spec, {0: (0,), 1: (-1,)}, {0: ((entry,),)})
    assert "path runs" in validate_complex(c)


def test_validate_rejects_nonzero_square():
    spec = AlgebraSpec(2, 1)
    tail = PathCombination.of(make_path(spec, [-1]))
    cycle = PathCombination.of(make_path(spec, [0]))
    c = make_complex(
        spec,
        {0: (-1,), 1: (0,), 2: (1,)},
        {0: ((tail,),), 1: ((cycle,),)},
    )
    assert "square" in validate_complex(c)


def test_shift_signs_differentials():
    spec = AlgebraSpec(2, 1)
    c = two_term(spec)
    s = shift(c, 1)
    assert s.summand(-1) == (-1,)
    assert s.diff(-1)[0][0] == -c.diff(0)[0][0]
    assert shift(s, -1).key() == c.key()
    assert shift(c, 2).diffs[-2] == c.diffs[0]


def test_stalk_hom_dimensions():
    spec = AlgebraSpec(2, 1)
    assert hom_space_dimension(stalk_complex(spec, -1), stalk_complex(spec, 0)) == 1
    assert hom_space_dimension(stalk_complex(spec, 0), stalk_complex(spec, -1)) == 0
    assert hom_space_dimension(stalk_complex(spec, 0), stalk_complex(spec, 0, 1)) == 0


def test_hom_space_basis_members_are_chain_maps(spec):
    quads = enumerate_quadruples(spec, -1, 1, 2)[:6]
    for qs in quads:
        for qt in quads:
            c, d = build_complex(spec, qs), build_complex(spec, qt)
            basis = hom_space(c, d).basis
            assert len(basis) == hom_space_dimension(c, d)
            for f in basis:
                assert validate_chain_map(f) is None
                assert not is_null_homotopic(f)
            if len(basis) > 1:
                assert homotopy_rank(list(basis)) == len(basis)


def test_identity_and_zero_maps():
    spec = AlgebraSpec(2, 1)
    c = two_term(spec)
    ident = identity_chain_map(c)
    assert validate_chain_map(ident) is None
    assert not is_null_homotopic(ident)
    assert is_null_homotopic(zero_chain_map(c, c))
    assert is_null_homotopic(add_chain_maps(ident, scale_chain_map(ident, -1)))


def test_cone_of_identity_is_contractible():
    spec = AlgebraSpec(2, 1)
    for q in [(0, 0, 1, 1), (0, 0, 0, -1), (0, 1, 0, 1)]:
        c = build_complex(spec, Quadruple(*q))
        cone = mapping_cone(identity_chain_map(c))
        assert validate_complex(cone) is None
        assert is_contractible(cone)
        assert minimal_model(cone).is_zero()


def test_cone_triangle_pieces_compose_to_zero(spec):
    quads = enumerate_quadruples(spec, -1, 1, 2)[:5]
    for qs in quads:
        for qt in quads:
            c, d = build_complex(spec, qs), build_complex(spec, qt)
            for f in hom_space(c, d).basis:
                inc = cone_inclusion(f)
                proj = cone_projection(f)
                assert validate_complex(mapping_cone(f)) is None
                assert validate_chain_map(inc) is None
                assert validate_chain_map(proj) is None
                assert is_null_homotopic(compose_chain_maps(inc, f))
                assert is_null_homotopic(compose_chain_maps(proj, inc))


def test_homotopy_rank_counts_modulo_null_maps():
    spec = AlgebraSpec(1, 0)
    c = build_complex(spec, Quadruple(0, 0, 0, 0))
    basis = hom_space(c, c).basis
    assert len(basis) == 2
    assert homotopy_rank(list(basis)) == 2
    assert homotopy_rank([basis[0], basis[0]]) == 1
    assert homotopy_rank([zero_chain_map(c, c)]) == 0
    assert homotopy_rank([]) == 0
    with pytest.raises(ValueError):
        homotopy_rank([basis[0], identity_chain_map(shift(c, 1))])


def test_direct_sum_addition_of_dimensions():
    spec = AlgebraSpec(2, 1)
    a = build_complex(spec, Quadruple(0, 0, 1, 1))
    b = build_complex(spec, Quadruple(0, 1, 0, 1))
    s = direct_sum(a, b)
    assert validate_complex(s) is None
    for q in enumerate_quadruples(spec, 0, 0, 1)[:4]:
        t = build_complex(spec, q)
        assert hom_space_dimension(s, t) == hom_space_dimension(
            a, t
        ) + hom_space_dimension(b, t)


def test_is_isomorphic_examples():
    spec = AlgebraSpec(2, 1)
    c = build_complex(spec, Quadruple(0, 0, 1, 1))
    assert is_isomorphic_K(c, c)
    assert not is_isomorphic_K(c, shift(c, 1))
    assert not is_isomorphic_K(c, build_complex(spec, Quadruple(0, 1, 0, 1)))
    # adding a contractible summand does not change the isomorphism class
    padded = direct_sum(c, mapping_cone(identity_chain_map(stalk_complex(spec, 0))))
    result = is_isomorphic_K(padded, c)
    assert result
    assert validate_chain_map(result.forward) is None
    assert validate_chain_map(result.backward) is None
    round_trip = compose_chain_maps(result.backward, result.forward)
    ident = identity_chain_map(padded)
    assert is_null_homotopic(add_chain_maps(round_trip, scale_chain_map(ident, -1)))


def test_minimal_model_strips_contractibles(spec):
    for q in enumerate_quadruples(spec, -1, 1, 2)[:6]:
        c = build_complex(spec, q)
        padded = direct_sum(
            c, mapping_cone(identity_chain_map(stalk_complex(spec, 0, -1)))
        )
        model = minimal_model(padded)
        assert model.key() == c.key()


def test_shift_chain_map_stays_valid():
    spec = AlgebraSpec(2, 1)
    c = build_complex(spec, Quadruple(0, 0, 1, 1))
    d = build_complex(spec, Quadruple(0, 0, 0, -1))
    for f in hom_space(c, d).basis:
        g = shift_chain_map(f, 1)
        assert validate_chain_map(g) is None
        assert g.source.key() == shift(c, 1).key()


def test_serialization_round_trip(spec):
    for q in enumerate_quadruples(spec, -1, 1, 2)[:8]:
        c = build_complex(spec, q)
        again = loads_complex(dumps_complex(c))
        assert again.key() == c.key()
        assert dumps_complex(again) == dumps_complex(c)


def test_zero_complex_edge_cases():
    spec = AlgebraSpec(2, 1)
    z = zero_complex(spec)
    assert z.is_zero()
    assert validate_complex(z) is None
    c = build_complex(spec, Quadruple(0, 0, 1, 1))
    assert hom_space_dimension(z, c) == 0
    assert hom_space_dimension(c, z) == 0
    assert is_isomorphic_K(z, zero_complex(spec))
    assert not is_isomorphic_K(z, c)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_random_composites_are_chain_maps(data):
    n, m = data.draw(st.sampled_from(ALGEBRA_PARAMS))
    spec = AlgebraSpec(n, m)
    quads = enumerate_quadruples(spec, -1, 1, 2)
    qa, qb, qc = (data.draw(st.sampled_from(quads)) for _ in range(3))
    a, b, c = (build_complex(spec, q) for q in (qa, qb, qc))
    fs = hom_space(a, b).basis
    gs = hom_space(b, c).basis
    if not fs or not gs:
        return
    f = data.draw(st.sampled_from(fs))
    g = data.draw(st.sampled_from(gs))
    composite = compose_chain_maps(g, f)
    assert validate_chain_map(composite) is None
    # bilinearity of composition
    two_f = add_chain_maps(f, f)
    assert compose_chain_maps(g, two_f).key() == scale_chain_map(composite, 2).key()
