"""Combinatorial model of the homotopy category of the indecomposables.

Vertices are integer triples (i, a, b) with i a cyclic sheet index in
[0, n-1] and a <= b + (m if i == 0 else 0).  Hom spaces are spanned by
at most one "forward" generator f (present when the target lies in the
forward cone of the source) and at most one "deep" generator g (present
when the target lies in the deep cone; g composes to zero with itself,
like a square-zero infinitesimal).  The translation ``theta_vertex`` /
``theta_hom`` matches this model with the complexes built from
quadruples, generator by generator: f-parts become the unsigned basis
maps and g-parts the signed ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .algebra import AlgebraSpec
from .basismaps import in_phi, in_psi, phi_map, psi_map
from .complexes import ChainMap, add_chain_maps, scale_chain_map, zero_chain_map
from .quadruples import Quadruple, build_complex, in_calC


class GammaVertex(NamedTuple):
    i: int
    a: int
    b: int


def _delta_top(spec: AlgebraSpec, i: int) -> int:
    """m if i is the distinguished sheet 0, else 0."""
    return spec.m if i == 0 else 0


def _delta_last(spec: AlgebraSpec, i: int) -> int:
    """m if i is the last sheet n-1, else 0."""
    return spec.m if i == spec.n - 1 else 0


def is_vertex(spec: AlgebraSpec, v: GammaVertex) -> bool:
    i, a, b = v
    return 0 <= i <= spec.n - 1 and a <= b + _delta_top(spec, i)


def check_vertex(spec: AlgebraSpec, v: GammaVertex) -> None:
    if not is_vertex(spec, v):
        raise ValueError(f"{tuple(v)} is not a vertex for (n,m)=({spec.n},{spec.m})")


def in_F(spec: AlgebraSpec, base: GammaVertex, x: GammaVertex) -> bool:
    """Whether ``x`` lies in the forward cone of ``base``."""
    check_vertex(spec, base)
    check_vertex(spec, x)
    i, a, b = base
    return x.i == i and a <= x.a <= b + _delta_top(spec, i) and x.b >= b


def in_G(spec: AlgebraSpec, base: GammaVertex, x: GammaVertex) -> bool:
    """Whether ``x`` lies in the deep cone of ``base``."""
    check_vertex(spec, base)
    check_vertex(spec, x)
    i, a, b = base
    return (
        x.i == (i + 1) % spec.n
        and x.a <= a + _delta_last(spec, i)
        and a <= x.b <= b + _delta_top(spec, i)
    )


def gamma_hom_dim(spec: AlgebraSpec, source: GammaVertex, target: GammaVertex) -> int:
    return int(in_F(spec, source, target)) + int(in_G(spec, source, target))


@dataclass(frozen=True)
class GammaHom:
    """A morphism in normal form: f_coeff * f + g_coeff * g.

    The coefficient of a generator may be nonzero only when that
    generator exists for the (source, target) pair.
    """

    spec: AlgebraSpec
    source: GammaVertex
    target: GammaVertex
    f_coeff: Fraction
    g_coeff: Fraction

    def __post_init__(self):
        object.__setattr__(self, "f_coeff", Fraction(self.f_coeff))
        object.__setattr__(self, "g_coeff", Fraction(self.g_coeff))
        check_vertex(self.spec, self.source)
        check_vertex(self.spec, self.target)
        if self.f_coeff != 0 and not in_F(self.spec, self.source, self.target):
            raise ValueError(f"no f generator {tuple(self.source)} -> {tuple(self.target)}")
        if self.g_coeff != 0 and not in_G(self.spec, self.source, self.target):
            raise ValueError(f"no g generator {tuple(self.source)} -> {tuple(self.target)}")

    def is_zero(self) -> bool:
        return self.f_coeff == 0 and self.g_coeff == 0


def hom_f(spec: AlgebraSpec, source: GammaVertex, target: GammaVertex) -> GammaHom:
    return GammaHom(spec, source, target, Fraction(1), Fraction(0))


def hom_g(spec: AlgebraSpec, source: GammaVertex, target: GammaVertex) -> GammaHom:
    return GammaHom(spec, source, target, Fraction(0), Fraction(1))


def zero_hom(spec: AlgebraSpec, source: GammaVertex, target: GammaVertex) -> GammaHom:
    return GammaHom(spec, source, target, Fraction(0), Fraction(0))


def identity_hom(spec: AlgebraSpec, v: GammaVertex) -> GammaHom:
    return GammaHom(spec, v, v, Fraction(1), Fraction(0))


def hom_add(h1: GammaHom, h2: GammaHom) -> GammaHom:
    if h1.source != h2.source or h1.target != h2.target:
        raise ValueError("cannot add morphisms with different endpoints")
    return GammaHom(h1.spec, h1.source, h1.target, h1.f_coeff + h2.f_coeff, h1.g_coeff + h2.g_coeff)


def hom_scale(h: GammaHom, coeff) -> GammaHom:
    c = Fraction(coeff)
    return GammaHom(h.spec, h.source, h.target, c * h.f_coeff, c * h.g_coeff)


def gamma_compose(second: GammaHom, first: GammaHom) -> GammaHom:
    """Composite ``second after first``.

    The f-part composes to the f generator when it exists, the mixed
    f/g products compose to the g generator when it exists, and the
    g/g product always vanishes.
    """
    if first.spec != second.spec:
        raise ValueError("morphisms from different algebras")
    if first.target != second.source:
        raise ValueError("morphisms are not composable")
    spec = first.spec
    f_coeff = Fraction(0)
    if in_F(spec, first.source, second.target):
        f_coeff = first.f_coeff * second.f_coeff
    g_coeff = Fraction(0)
    if in_G(spec, first.source, second.target):
        g_coeff = first.f_coeff * second.g_coeff + first.g_coeff * second.f_coeff
    return GammaHom(spec, first.source, second.target, f_coeff, g_coeff)


def is_isomorphism(h: GammaHom) -> bool:
    return h.source == h.target and h.f_coeff != 0


def invert_hom(h: GammaHom) -> GammaHom:
    """Inverse of an endomorphism with invertible f-part.

    (lam + mu g)^(-1) = lam^(-1) - lam^(-2) mu g since g squares to zero.
    """
    if not is_isomorphism(h):
        raise ValueError("morphism is not invertible")
    lam = h.f_coeff
    return GammaHom(h.spec, h.source, h.target, 1 / lam, -h.g_coeff / lam**2)


def radical_degree(h: GammaHom):
    """Distance of the f-part target from the source corner, or infinity.

    Morphisms with zero f-part (including the zero morphism) factor
    through arbitrarily long chains of irreducibles.
    """
    if h.f_coeff == 0:
        return math.inf
    return (h.target.a - h.source.a) + (h.target.b - h.source.b)


def is_irreducible(h: GammaHom) -> bool:
    return radical_degree(h) == 1


def irreducible_targets(spec: AlgebraSpec, v: GammaVertex) -> list[GammaVertex]:
    """Targets of the irreducible morphisms out of ``v``, b-step first."""
    check_vertex(spec, v)
    i, a, b = v
    out = [GammaVertex(i, a, b + 1)]
    if a + 1 <= b + _delta_top(spec, i):
        out.append(GammaVertex(i, a + 1, b))
    return out


def suspend_vertex(spec: AlgebraSpec, v: GammaVertex) -> GammaVertex:
    check_vertex(spec, v)
    i, a, b = v
    return GammaVertex(
        (i + 1) % spec.n, a + 1 + _delta_last(spec, i), b + 1 + _delta_top(spec, i)
    )


def unsuspend_vertex(spec: AlgebraSpec, v: GammaVertex) -> GammaVertex:
    check_vertex(spec, v)
    i, a, b = v
    j = (i - 1) % spec.n
    return GammaVertex(j, a - 1 - _delta_last(spec, j), b - 1 - _delta_top(spec, j))


def suspend_hom(h: GammaHom) -> GammaHom:
    spec = h.spec
    return GammaHom(
        spec,
        suspend_vertex(spec, h.source),
        suspend_vertex(spec, h.target),
        h.f_coeff,
        h.g_coeff,
    )


def unsuspend_hom(h: GammaHom) -> GammaHom:
    spec = h.spec
    return GammaHom(
        spec,
        unsuspend_vertex(spec, h.source),
        unsuspend_vertex(spec, h.target),
        h.f_coeff,
        h.g_coeff,
    )


def projective_vertex(spec: AlgebraSpec, j: int) -> GammaVertex:
    """Vertex presenting the indecomposable projective at quiver vertex j."""
    if j not in spec.vertices:
        raise ValueError(f"{j} is not a quiver vertex")
    if j <= 0:
        return GammaVertex(0, 0, j)
    return GammaVertex(j, 0, 0)


def is_shifted_projective(spec: AlgebraSpec, v: GammaVertex) -> tuple[int, int] | None:
    """Return (j, t) with v the t-fold suspension of the projective at j.

    Suspension moves the a-coordinate strictly monotonically, so walking
    back toward a == 0 either hits a projective vertex or proves there
    is none.
    """
    check_vertex(spec, v)
    cur = v
    t = 0
    while cur.a > 0:
        cur = unsuspend_vertex(spec, cur)
        t += 1
    while cur.a < 0:
        cur = suspend_vertex(spec, cur)
        t -= 1
    if cur.a != 0:
        return None
    if cur.i == 0 and -spec.m <= cur.b <= 0:
        return (cur.b, t)
    if cur.i >= 1 and cur.b == 0:
        return (cur.i, t)
    return None


def theta_vertex(spec: AlgebraSpec, v: GammaVertex) -> Quadruple:
    """The quadruple whose complex realizes the vertex ``v``.

    The two corner coordinates are unrolled along the period m + n into
    quotient/remainder pairs; the five cases distinguish whether each
    remainder falls in the cyclic part or the tail part of the period.
    """
    check_vertex(spec, v)
    n, m = spec.n, spec.m
    period = m + n
    i, a, b = v
    ap = a - i
    bp = b - i + _delta_top(spec, i)
    r = ((ap + n - 1) % period) - (n - 1)
    p = (ap - r) // period
    t = ((bp + n - 1) % period) - (n - 1)
    q = (bp - t) // period
    if r <= 0:
        if t <= -1:
            quad = Quadruple(-q * n - t - i, -t, (q - p) * n + (t - r), -r)
        elif (q - p) * n - r > 0:
            quad = Quadruple(-q * n - i, -m + t, (q - p) * n - r, -r)
        else:
            quad = Quadruple(-q * n - i, -m + t, 0, -m + t)
    else:
        if t <= -1:
            quad = Quadruple(-q * n - t - i, -t, (q - p) * n + t, -m - 1 + r)
        else:
            quad = Quadruple(-q * n - i, -m + t, (q - p) * n, -m - 1 + r)
    if not in_calC(spec, quad):
        raise AssertionError(f"translation left the family: {tuple(v)} -> {tuple(quad)}")
    return quad


def theta_hom(h: GammaHom) -> ChainMap:
    """Chain-map realization of a morphism, generator by generator."""
    spec = h.spec
    q_source = theta_vertex(spec, h.source)
    q_target = theta_vertex(spec, h.target)
    total = zero_chain_map(build_complex(spec, q_source), build_complex(spec, q_target))
    if h.f_coeff != 0:
        if not in_phi(spec, q_target, q_source):
            raise AssertionError(
                f"forward cone not transported: {tuple(q_source)} -> {tuple(q_target)}"
            )
        total = add_chain_maps(total, scale_chain_map(phi_map(spec, q_target, q_source), h.f_coeff))
    if h.g_coeff != 0:
        if not in_psi(spec, q_target, q_source):
            raise AssertionError(
                f"deep cone not transported: {tuple(q_source)} -> {tuple(q_target)}"
            )
        total = add_chain_maps(total, scale_chain_map(psi_map(spec, q_target, q_source), h.g_coeff))
    return total
