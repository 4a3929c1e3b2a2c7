"""The four-parameter family of indecomposable complexes.

A quadruple (k, u, l, v) with l >= 0 and either v = successor^l(u) or
v < successor^l(u) <= 0 names an indecomposable complex: a chain of
maximal-path differentials through the successor orbit of u, starting in
degree k and of length l, with an optional extra tail summand P_v next to
the top.  This module builds those complexes, enumerates the family over
a window, and translates walk descriptions (homotopy strings) into
quadruples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .algebra import (
    AlgebraSpec,
    Path,
    PathCombination,
    factor_path,
    max_path,
    stationary_path,
    successor_power,
)
from .complexes import Matrix, ProjComplex, mat_zero


class Quadruple(NamedTuple):
    k: int
    u: int
    l: int
    v: int


def in_calC(spec: AlgebraSpec, q: Quadruple) -> bool:
    """Membership in the indexing family."""
    k, u, l, v = q
    if u not in spec.vertices or v not in spec.vertices or l < 0:
        return False
    top = successor_power(spec, u, l)
    return v == top or (v < top <= 0)


def _check_member(spec: AlgebraSpec, q: Quadruple) -> None:
    if not in_calC(spec, q):
        raise ValueError(f"{tuple(q)} is not in the family for {spec}")


def chain_tail_positions(spec: AlgebraSpec, q: Quadruple, i: int) -> tuple[int | None, int | None]:
    """(index of chain summand, index of tail summand) at degree i, or None."""
    k, u, l, v = q
    top = successor_power(spec, u, l)
    has_tail = v != top
    chain = None
    tail = None
    if has_tail and i == k + l - 1:
        tail_pos = 0
        if l > 0 and k <= i:
            chain = 0
            tail_pos = 1
        tail = tail_pos
    elif k <= i <= k + l:
        chain = 0
    return chain, tail


def build_complex(spec: AlgebraSpec, q: Quadruple) -> ProjComplex:
    """The minimal complex named by the quadruple.

    Chain summands carry maximal-path differentials; the tail summand
    (present when v differs from the top of the successor orbit) maps in
    by the factor path of the top vertex.
    """
    _check_member(spec, q)
    k, u, l, v = q
    top = successor_power(spec, u, l)
    has_tail = v != top

    summands: dict[int, tuple[int, ...]] = {}
    for i in range(k, k + l + 1):
        summands[i] = (successor_power(spec, u, i - k),)
    if has_tail:
        if l == 0:
            summands[k - 1] = (v,)
        else:
            summands[k + l - 1] = (successor_power(spec, u, l - 1), v)

    diffs: dict[int, Matrix] = {}
    sigma = lambda w: PathCombination.of(max_path(spec, w))
    if not has_tail:
        for i in range(k, k + l):
            diffs[i] = ((sigma(successor_power(spec, u, i - k)),),)
    else:
        if l == 0:
            diffs[k - 1] = ((PathCombination.of(factor_path(spec, v, u)),),)
        else:
            for i in range(k, k + l - 2):
                diffs[i] = ((sigma(successor_power(spec, u, i - k)),),)
            if l >= 2:
                diffs[k + l - 2] = (
                    (sigma(successor_power(spec, u, l - 2)),),
                    (PathCombination.zero(),),
                )
            diffs[k + l - 1] = (
                (
                    sigma(successor_power(spec, u, l - 1)),
                    PathCombination.of(factor_path(spec, v, top)),
                ),
            )
    return ProjComplex(spec, summands, diffs)


def suspend_quadruple(q: Quadruple) -> Quadruple:
    """Index of the suspension: degrees drop by one."""
    return Quadruple(q.k - 1, q.u, q.l, q.v)


def enumerate_quadruples(
    spec: AlgebraSpec, k_min: int, k_max: int, l_max: int
) -> list[Quadruple]:
    """All family members with k in [k_min, k_max] and l <= l_max.

    Lexicographic in (k, u, l, v); an empty window gives [].
    """
    out = []
    for k in range(k_min, k_max + 1):
        for u in spec.vertices:
            for l in range(l_max + 1):
                top = successor_power(spec, u, l)
                for v in spec.vertices:
                    if v == top or (v < top <= 0):
                        out.append(Quadruple(k, u, l, v))
    return out


# -- Homotopy strings ---------------------------------------------------------


@dataclass(frozen=True)
class HomotopyString:
    """A walk description: stationary, descending run, or run with a turn.

    kind is one of "stationary", "descending", "turning".  A descending
    run is the arrow word alpha_u ... alpha_{u+l} (indices ascending,
    cycle indices mod n); a turning string continues against the arrows
    from the tail top back down to v < 0, which requires the run to end
    at the closing cycle arrow (u + l = n-1 mod n, u + l >= 0).
    """

    kind: str
    u: int
    l: int = 0
    v: int | None = None

    def __str__(self) -> str:
        if self.kind == "stationary":
            return f"e{self.u}"
        run = f"a{self.u}" if self.l == 0 else f"a{self.u}..a{self.u + self.l}"
        if self.kind == "descending":
            return run
        turn = "a-1" if self.v == -1 else f"a-1..a{self.v}"
        return f"{run}~{turn}"


def validate_string(spec: AlgebraSpec, theta: HomotopyString) -> None:
    if theta.kind == "stationary":
        if theta.u not in spec.vertices:
            raise ValueError(f"stationary string at {theta.u}: not a vertex")
        return
    if theta.kind == "descending":
        if theta.u not in spec.vertices or theta.l < 0:
            raise ValueError(f"bad descending string {theta}")
        return
    if theta.kind == "turning":
        if (
            theta.u not in spec.vertices
            or theta.l < 0
            or theta.v is None
            or not -spec.m <= theta.v <= -1
            or theta.u + theta.l < 0
            or (theta.u + theta.l) % spec.n != spec.n - 1
        ):
            raise ValueError(f"bad turning string {theta}")
        return
    raise ValueError(f"unknown string kind {theta.kind!r}")


def string_to_quadruple(spec: AlgebraSpec, k: int, theta: HomotopyString) -> Quadruple:
    """Complex of a homotopy string placed with its left end in degree k."""
    validate_string(spec, theta)
    u, l, v = theta.u, theta.l, theta.v
    n = spec.n
    if theta.kind == "stationary":
        return Quadruple(k, u, 0, u)
    if theta.kind == "descending":
        if u < 0 and u + l < 0:
            return Quadruple(k + 1, u + l + 1, 0, u)
        if u < 0:
            return Quadruple(k, u, u + l + 1, (u + l + 1) % n)
        return Quadruple(k, u, l + 1, (u + l + 1) % n)
    if u < 0:
        return Quadruple(k, u, u + l + 1, v)
    return Quadruple(k, u, l + 1, v)


def enumerate_strings(
    spec: AlgebraSpec, k_min: int, k_max: int, l_max: int
) -> Iterator[tuple[int, HomotopyString]]:
    """All (k, string) pairs whose complex lands in the quadruple window.

    Parameter ranges are bounded from the window arithmetic, then
    filtered exactly; used by the round-trip tests against
    enumerate_quadruples.
    """
    n, m = spec.n, spec.m

    def in_window(q: Quadruple) -> bool:
        return k_min <= q.k <= k_max and q.l <= l_max

    for k in range(k_min - 1, k_max + 2):
        for u in spec.vertices:
            theta = HomotopyString("stationary", u)
            if in_window(string_to_quadruple(spec, k, theta)):
                yield k, theta
            for l in range(0, l_max + m + n + 1):
                theta = HomotopyString("descending", u, l)
                if in_window(string_to_quadruple(spec, k, theta)):
                    yield k, theta
                if u + l >= 0 and (u + l) % n == n - 1:
                    for v in range(-m, 0):
                        theta = HomotopyString("turning", u, l, v)
                        if in_window(string_to_quadruple(spec, k, theta)):
                            yield k, theta


# -- Text forms ---------------------------------------------------------------


def format_quadruple(q: Quadruple) -> str:
    return f"({q.k},{q.u},{q.l},{q.v})"


def parse_quadruple(text: str) -> Quadruple:
    parts = text.strip().strip("()").split(",")
    if len(parts) != 4:
        raise ValueError(f"expected (k,u,l,v), got {text!r}")
    k, u, l, v = (int(p.strip()) for p in parts)
    return Quadruple(k, u, l, v)
