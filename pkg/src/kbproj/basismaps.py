"""Closed-form hom spaces between the indecomposable complexes.

Hom up to homotopy between two family members has dimension 0, 1 or 2,
witnessed by at most one unsigned "graph-type" basis map (phi) and at
most one signed "singleton-type" basis map (psi).  Membership is decided
by inequalities on the quadruples; the maps themselves are assembled
from stationary, factor and maximal paths.  The oracle in
``complexes`` recomputes the same dimensions by linear algebra, which is
what the verification sweeps compare against.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    AlgebraSpec,
    Path,
    PathCombination,
    factor_path,
    max_path,
    successor_power,
)
from .complexes import ChainMap, make_chain_map, mat_zero
from .quadruples import Quadruple, build_complex, chain_tail_positions, in_calC

# Test hook: set to "psi-sign" or "phi-membership" to deliberately break the
# corresponding computation (exercised by the CLI fault-injection option).
_FAULT: str | None = None


def in_phi(spec: AlgebraSpec, q_target: Quadruple, q_source: Quadruple) -> bool:
    """Whether the unsigned basis map C_{q_source} -> C_{q_target} exists."""
    if not in_calC(spec, q_target) or not in_calC(spec, q_source):
        raise ValueError("quadruples outside the family")
    kp, up, lp, vp = q_target
    k, u, l, v = q_source
    if not (kp <= k <= kp + lp <= k + l):
        return False
    if successor_power(spec, up, lp + 1) != successor_power(spec, u, kp + lp + 1 - k):
        return False
    if kp == k and not (u <= up) and _FAULT != "phi-membership":
        return False
    top = successor_power(spec, u, l)
    if k + l == kp + lp and v < top and not (v <= vp < top):
        return False
    # When the map consists of the bottom factor path alone (no identity
    # components) and the target has a tail below the slot it lands in,
    # the factor path slides down the target's tail differential and the
    # map is null-homotopic; such pairs contribute nothing.
    if k == kp + lp and vp != successor_power(spec, up, lp) and u <= vp:
        return False
    return True


def _psi_r1(spec, q_target, q_source) -> bool:
    kp, up, lp, vp = q_target
    k, u, l, v = q_source
    if not (kp <= k + l <= kp + lp):
        return False
    top = successor_power(spec, u, l)
    if v == top:
        return True
    return kp < k + l - 1 or (kp == k + l - 1 and v <= up)


def _psi_r2(spec, q_target, q_source) -> bool:
    kp, up, lp, vp = q_target
    k, u, l, v = q_source
    if k + l != kp + lp + 1:
        return False
    top = successor_power(spec, u, l)
    if not v < top:
        return False
    tail_anchor = successor_power(spec, up, lp)
    if not (vp < v or vp == tail_anchor):
        return False
    # the factor path from v into the target's top must exist
    return v <= tail_anchor


def in_psi(spec: AlgebraSpec, q_target: Quadruple, q_source: Quadruple) -> bool:
    """Whether the signed basis map C_{q_source} -> C_{q_target} exists."""
    if not in_calC(spec, q_target) or not in_calC(spec, q_source):
        raise ValueError("quadruples outside the family")
    kp, up, lp, vp = q_target
    k, u, l, v = q_source
    if not (k <= kp or (k == kp + 1 and up < u)):
        return False
    if not (_psi_r1(spec, q_target, q_source) or _psi_r2(spec, q_target, q_source)):
        return False
    return successor_power(spec, u, l + 1) == successor_power(spec, up, k + l - kp)


def hom_dim(spec: AlgebraSpec, q_source: Quadruple, q_target: Quadruple) -> int:
    """Dimension of Hom(C_{q_source}, C_{q_target}) up to homotopy."""
    return int(in_phi(spec, q_target, q_source)) + int(in_psi(spec, q_target, q_source))


def _empty_components(spec, source, target):
    comps = {}
    for i in set(source.summands) & set(target.summands):
        comps[i] = [
            [PathCombination.zero() for _ in source.summand(i)]
            for _ in target.summand(i)
        ]
    return comps


def phi_map(spec: AlgebraSpec, q_target: Quadruple, q_source: Quadruple) -> ChainMap:
    """The unsigned basis map: factor path at the bottom, identities along
    the shared successor chain, and a tail-to-tail factor when the tops align.
    """
    if not in_phi(spec, q_target, q_source):
        raise ValueError(f"phi not defined for {tuple(q_source)} -> {tuple(q_target)}")
    kp, up, lp, vp = q_target
    k, u, l, v = q_source
    source = build_complex(spec, q_source)
    target = build_complex(spec, q_target)
    comps = _empty_components(spec, source, target)

    def set_entry(i, row, col, combo):
        comps[i][row][col] = combo

    # bottom component
    c_pos, _ = chain_tail_positions(spec, q_source, k)
    t_pos, _ = chain_tail_positions(spec, q_target, k)
    anchor = successor_power(spec, up, k - kp)
    set_entry(k, t_pos, c_pos, PathCombination.of(factor_path(spec, u, anchor)))
    # identities along the shared chain
    for i in range(k + 1, kp + lp + 1):
        c_pos, _ = chain_tail_positions(spec, q_source, i)
        t_pos, _ = chain_tail_positions(spec, q_target, i)
        w = successor_power(spec, u, i - k)
        set_entry(i, t_pos, c_pos, PathCombination.of(Path(w, ())))
    # tail to tail
    top = successor_power(spec, u, l)
    if k + l == kp + lp and v < top:
        _, c_tail = chain_tail_positions(spec, q_source, k + l - 1)
        _, t_tail = chain_tail_positions(spec, q_target, k + l - 1)
        set_entry(k + l - 1, t_tail, c_tail, PathCombination.of(factor_path(spec, v, vp)))
    return make_chain_map(source, target, {i: tuple(tuple(r) for r in m) for i, m in comps.items()})


def psi_map(spec: AlgebraSpec, q_target: Quadruple, q_source: Quadruple) -> ChainMap:
    """The signed basis map, with global sign (-1)^(k+l) of the source."""
    if not in_psi(spec, q_target, q_source):
        raise ValueError(f"psi not defined for {tuple(q_source)} -> {tuple(q_target)}")
    kp, up, lp, vp = q_target
    k, u, l, v = q_source
    source = build_complex(spec, q_source)
    target = build_complex(spec, q_target)
    comps = _empty_components(spec, source, target)
    sign = Fraction(1) if (k + l) % 2 == 0 else Fraction(-1)
    if _FAULT == "psi-sign":
        # test hook: lose the parity dependence so that composites mixing
        # sources of different parity come out wrong
        sign = Fraction(1)
    top = successor_power(spec, u, l)

    if _psi_r1(spec, q_target, q_source):
        if v != top:
            # tail lands on the target chain one step below the top
            _, c_tail = chain_tail_positions(spec, q_source, k + l - 1)
            t_pos, _ = chain_tail_positions(spec, q_target, k + l - 1)
            anchor = successor_power(spec, up, k + l - 1 - kp)
            comps[k + l - 1][t_pos][c_tail] = PathCombination.of(
                factor_path(spec, v, anchor), sign
            )
        c_pos, _ = chain_tail_positions(spec, q_source, k + l)
        t_pos, _ = chain_tail_positions(spec, q_target, k + l)
        comps[k + l][t_pos][c_pos] = PathCombination.of(max_path(spec, top), sign)
    else:
        _, c_tail = chain_tail_positions(spec, q_source, k + l - 1)
        t_pos, _ = chain_tail_positions(spec, q_target, k + l - 1)
        anchor = successor_power(spec, up, lp)
        comps[k + l - 1][t_pos][c_tail] = PathCombination.of(
            factor_path(spec, v, anchor), sign
        )
    return make_chain_map(source, target, {i: tuple(tuple(r) for r in m) for i, m in comps.items()})


def irr_targets_quadruple(spec: AlgebraSpec, q: Quadruple) -> list[Quadruple]:
    """Targets of the irreducible maps out of C_q, longer one first.

    The first target always exists (extend the chain downward); the
    second (shorten or grow the tail) exists unless the complex is a
    stalk at a simple-ended position.
    """
    if not in_calC(spec, q):
        raise ValueError(f"{tuple(q)} is not in the family")
    k, u, l, v = q
    n, m = spec.n, spec.m
    out = []
    if u > 1:
        out.append(Quadruple(k - 1, u - 1, l + 1, v))
    elif (n > 1 and u == 1) or (n == 1 and u == 0):
        out.append(Quadruple(k - 1, -m, l + 1, v))
    elif u == 0:
        out.append(Quadruple(k - 1, n - 1, l + 1, v))
    elif l == 0 and v == u:
        # one-term complex low in the tail range: the irreducible map is
        # the arrow into the next one-term complex, not into the cone
        out.append(Quadruple(k, u + 1, l, u + 1))
    else:
        out.append(Quadruple(k, u + 1, l, v))
    if l > 0:
        below = successor_power(spec, u, l - 1)
        if v > 0 or v == -1 or (v == 0 and m == 0):
            out.append(Quadruple(k, u, l - 1, below))
        elif v == 0:
            out.append(Quadruple(k, u, l, -m))
        else:
            out.append(Quadruple(k, u, l, v + 1))
    else:
        if -m < u and u == v and v <= 0:
            out.append(Quadruple(k, u, l, -m))
        elif v + 1 < u:
            out.append(Quadruple(k, u, l, v + 1))
    return out
