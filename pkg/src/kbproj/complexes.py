"""Bounded complexes of indecomposable projectives, up to homotopy.

A complex stores, per degree, the tuple of vertices of its projective
summands, and for each pair of consecutive nonempty degrees a matrix of
path combinations.  The entry in row r, column c of the degree-i matrix
is a combination of paths starting at the row vertex (degree i+1) and
ending at the column vertex (degree i); it acts on module elements by
right multiplication, so composition of matrices multiplies the left
factor's entries by the right factor's entries in algebra order.

Everything here is exact: dimensions, homotopies and isomorphism checks
reduce to rational linear algebra over the path basis.
"""

from __future__ import annotations

import json
import random
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    AlgebraSpec,
    Path,
    PathCombination,
    algebra_product,
    hom_basis_proj,
    path_is_valid,
)
from .linalg import SpanSolver, nullspace, rank

# Caches are keyed by structural keys and guarded by a lock; set to True to
# force every query to solve from scratch (e.g. when sharing specs across
# threads is off the table anyway and memory matters more than speed).
DISABLE_CACHE = False
_CACHE_LOCK = threading.Lock()
_HOMOTOPY_SOLVERS: dict = {}


def clear_caches() -> None:
    with _CACHE_LOCK:
        _HOMOTOPY_SOLVERS.clear()


Matrix = tuple[tuple[PathCombination, ...], ...]


def mat_zero(nrows: int, ncols: int) -> Matrix:
    z = PathCombination.zero()
    return tuple(tuple(z for _ in range(ncols)) for _ in range(nrows))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_scale(a: Matrix, coeff) -> Matrix:
    return tuple(tuple(x.scale(coeff) for x in row) for row in a)


def mat_mul(spec: AlgebraSpec, g: Matrix, f: Matrix) -> Matrix:
    """Matrix of the composite (g after f)."""
    if not g or not f:
        return ()
    inner = len(f)
    out = []
    for s in range(len(g)):
        row = []
        for c in range(len(f[0]) if f else 0):
            acc = PathCombination.zero()
            for r in range(inner):
                if f[r][c] and g[s][r]:
                    acc = acc + algebra_product(spec, f[r][c], g[s][r])
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


@dataclass(frozen=True)
class ProjComplex:
    """Bounded complex of projectives over a fixed algebra."""

    spec: AlgebraSpec
    summands: dict[int, tuple[int, ...]]
    diffs: dict[int, Matrix]
    _key: tuple = field(default=None, compare=False, repr=False)

    def summand(self, i: int) -> tuple[int, ...]:
        return self.summands.get(i, ())

    def diff(self, i: int) -> Matrix:
        d = self.diffs.get(i)
        if d is not None:
            return d
        return mat_zero(len(self.summand(i + 1)), len(self.summand(i)))

    def degrees(self) -> list[int]:
        return sorted(self.summands)

    def is_zero(self) -> bool:
        return not self.summands

    def key(self) -> tuple:
        if self._key is None:
            k = (
                self.spec.n,
                self.spec.m,
                tuple(sorted((i, s) for i, s in self.summands.items())),
                tuple(
                    sorted(
                        (i, tuple(tuple(e.key() for e in row) for row in mat))
                        for i, mat in self.diffs.items()
                    )
                ),
            )
            object.__setattr__(self, "_key", k)
        return self._key

    def __repr__(self) -> str:
        if not self.summands:
            return "ProjComplex(0)"
        parts = [f"{i}:{list(self.summands[i])}" for i in self.degrees()]
        return f"ProjComplex({', '.join(parts)})"


def make_complex(spec: AlgebraSpec, summands, diffs) -> ProjComplex:
    """Normalize raw dicts into a ProjComplex (no validation)."""
    norm_s = {int(i): tuple(v) for i, v in summands.items() if len(tuple(v))}
    norm_d = {}
    for i, mat in diffs.items():
        i = int(i)
        mat = tuple(tuple(row) for row in mat)
        if i in norm_s and i + 1 in norm_s:
            norm_d[i] = mat
        elif any(e for row in mat for e in row):
            # keep it so validation can report the shape error
            norm_d[i] = mat
    return ProjComplex(spec, norm_s, norm_d)


def stalk_complex(spec: AlgebraSpec, vertex: int, degree: int = 0) -> ProjComplex:
    if vertex not in spec.vertices:
        raise ValueError(f"vertex {vertex} not in {spec}")
    return ProjComplex(spec, {degree: (vertex,)}, {})


def zero_complex(spec: AlgebraSpec) -> ProjComplex:
    return ProjComplex(spec, {}, {})


def validate_complex(c: ProjComplex) -> str | None:
    """None when well formed, else a description of the first failure."""
    spec = c.spec
    for i in c.degrees():
        for v in c.summand(i):
            if v not in spec.vertices:
                return f"degree {i}: summand vertex {v} not in the algebra"
    for i, mat in sorted(c.diffs.items()):
        rows, cols = c.summand(i + 1), c.summand(i)
        if len(mat) != len(rows) or any(len(r) != len(cols) for r in mat):
            return f"degree {i}: differential shape does not match summands"
        for r, row in enumerate(mat):
            for col, entry in enumerate(row):
                for path, _ in entry.terms():
                    if not path_is_valid(spec, path):
                        return f"degree {i}: entry ({r},{col}) holds an invalid path"
                    if path.start != rows[r] or path.end != cols[col]:
                        return (
                            f"degree {i}: entry ({r},{col}) path runs "
                            f"{path.start}->{path.end}, expected {rows[r]}->{cols[col]}"
                        )
    for i in c.degrees():
        if c.summand(i) and c.summand(i + 1) and c.summand(i + 2):
            sq = mat_mul(spec, c.diff(i + 1), c.diff(i))
            if not mat_is_zero(sq):
                return f"degree {i}: differential does not square to zero"
    return None


def shift(c: ProjComplex, t: int) -> ProjComplex:
    """Suspension by t: degree i of the result is degree i+t of c.

    Differentials pick up the sign (-1)^t.
    """
    sign = 1 if t % 2 == 0 else -1
    return ProjComplex(
        c.spec,
        {i - t: s for i, s in c.summands.items()},
        {i - t: mat_scale(mat, sign) if sign < 0 else mat for i, mat in c.diffs.items()},
    )


def direct_sum(a: ProjComplex, b: ProjComplex) -> ProjComplex:
    if a.spec != b.spec:
        raise ValueError("direct sum across different algebras")
    summands = {}
    for i in set(a.summands) | set(b.summands):
        summands[i] = a.summand(i) + b.summand(i)
    diffs = {}
    for i in summands:
        if i + 1 not in summands:
            continue
        na_r, nb_r = len(a.summand(i + 1)), len(b.summand(i + 1))
        na_c, nb_c = len(a.summand(i)), len(b.summand(i))
        da, db = a.diff(i), b.diff(i)
        mat = []
        for r in range(na_r):
            mat.append(tuple(da[r]) + mat_zero(1, nb_c)[0])
        for r in range(nb_r):
            mat.append(mat_zero(1, na_c)[0] + tuple(db[r]))
        diffs[i] = tuple(mat)
    return ProjComplex(a.spec, summands, diffs)


# -- Chain maps -------------------------------------------------------------


@dataclass(frozen=True)
class ChainMap:
    """Degreewise map between complexes; absent degrees are zero."""

    source: ProjComplex
    target: ProjComplex
    components: dict[int, Matrix]

    def component(self, i: int) -> Matrix:
        comp = self.components.get(i)
        if comp is not None:
            return comp
        return mat_zero(len(self.target.summand(i)), len(self.source.summand(i)))

    def key(self) -> tuple:
        return tuple(
            sorted(
                (i, tuple(tuple(e.key() for e in row) for row in mat))
                for i, mat in self.components.items()
            )
        )

    def is_zero(self) -> bool:
        return all(mat_is_zero(m) for m in self.components.values())


def make_chain_map(source: ProjComplex, target: ProjComplex, components) -> ChainMap:
    comps = {}
    for i, mat in components.items():
        mat = tuple(tuple(row) for row in mat)
        if any(e for row in mat for e in row):
            comps[int(i)] = mat
    return ChainMap(source, target, comps)


def identity_chain_map(c: ProjComplex) -> ChainMap:
    comps = {}
    for i in c.degrees():
        verts = c.summand(i)
        comps[i] = tuple(
            tuple(
                PathCombination.of(Path(v, ())) if r == col else PathCombination.zero()
                for col, _ in enumerate(verts)
            )
            for r, v in enumerate(verts)
        )
    return ChainMap(c, c, comps)


def zero_chain_map(source: ProjComplex, target: ProjComplex) -> ChainMap:
    return ChainMap(source, target, {})


def validate_chain_map(f: ChainMap) -> str | None:
    spec = f.source.spec
    if spec != f.target.spec:
        return "source and target live over different algebras"
    for i, mat in sorted(f.components.items()):
        rows, cols = f.target.summand(i), f.source.summand(i)
        if len(mat) != len(rows) or any(len(r) != len(cols) for r in mat):
            return f"degree {i}: component shape does not match summands"
        for r, row in enumerate(mat):
            for col, entry in enumerate(row):
                for path, _ in entry.terms():
                    if not path_is_valid(spec, path):
                        return f"degree {i}: component ({r},{col}) holds an invalid path"
                    if path.start != rows[r] or path.end != cols[col]:
                        return (
                            f"degree {i}: component ({r},{col}) path runs "
                            f"{path.start}->{path.end}, expected {rows[r]}->{cols[col]}"
                        )
    lo = min(list(f.source.summands) + list(f.target.summands), default=0)
    hi = max(list(f.source.summands) + list(f.target.summands), default=0)
    for i in range(lo, hi + 1):
        lhs = mat_mul(spec, f.target.diff(i), f.component(i))
        rhs = mat_mul(spec, f.component(i + 1), f.source.diff(i))
        # zero-row/zero-column products collapse to (), so compare up to zero
        if lhs != rhs and not (mat_is_zero(lhs) and mat_is_zero(rhs)):
            return f"degree {i}: does not commute with the differentials"
    return None


def compose_chain_maps(g: ChainMap, f: ChainMap) -> ChainMap:
    """g after f."""
    if f.target.key() != g.source.key():
        raise ValueError("chain maps do not compose: middle complexes differ")
    spec = f.source.spec
    comps = {}
    for i in set(f.components) | set(g.components):
        mat = mat_mul(spec, g.component(i), f.component(i))
        if not mat_is_zero(mat):
            comps[i] = mat
    return ChainMap(f.source, g.target, comps)


def add_chain_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    comps = {}
    for i in set(f.components) | set(g.components):
        mat = mat_add(f.component(i), g.component(i))
        if not mat_is_zero(mat):
            comps[i] = mat
    return ChainMap(f.source, f.target, comps)


def scale_chain_map(f: ChainMap, coeff) -> ChainMap:
    comps = {i: mat_scale(m, coeff) for i, m in f.components.items()}
    if not Fraction(coeff):
        comps = {}
    return ChainMap(f.source, f.target, comps)


def shift_chain_map(f: ChainMap, t: int) -> ChainMap:
    return ChainMap(
        shift(f.source, t),
        shift(f.target, t),
        {i - t: m for i, m in f.components.items()},
    )


# -- Cones ------------------------------------------------------------------


def mapping_cone(f: ChainMap) -> ProjComplex:
    """Cone of f: C -> D; degree i is C^{i+1} (+) D^i.

    The differential is [[-d_C, 0], [f, d_D]] in that block layout.
    """
    c, d = f.source, f.target
    spec = c.spec
    summands = {}
    for i in set(x - 1 for x in c.summands) | set(d.summands):
        s = c.summand(i + 1) + d.summand(i)
        if s:
            summands[i] = s
    diffs = {}
    for i in summands:
        if i + 1 not in summands:
            continue
        c_rows, d_rows = c.summand(i + 2), d.summand(i + 1)
        c_cols, d_cols = c.summand(i + 1), d.summand(i)
        dc = mat_scale(c.diff(i + 1), -1)
        dd = d.diff(i)
        fc = f.component(i + 1)
        mat = []
        for r in range(len(c_rows)):
            mat.append(tuple(dc[r]) + mat_zero(1, len(d_cols))[0])
        for r in range(len(d_rows)):
            mat.append(tuple(fc[r]) + tuple(dd[r]))
        diffs[i] = tuple(mat)
    return ProjComplex(spec, summands, diffs)


def cone_inclusion(f: ChainMap) -> ChainMap:
    """The canonical chain map D -> cone(f)."""
    cone = mapping_cone(f)
    c, d = f.source, f.target
    comps = {}
    for i in d.degrees():
        nc = len(c.summand(i + 1))
        verts = d.summand(i)
        rows = []
        for r in range(nc):
            rows.append(mat_zero(1, len(verts))[0])
        for r, v in enumerate(verts):
            rows.append(
                tuple(
                    PathCombination.of(Path(v, ())) if r == col else PathCombination.zero()
                    for col in range(len(verts))
                )
            )
        comps[i] = tuple(rows)
    return ChainMap(d, cone, comps)


def cone_projection(f: ChainMap) -> ChainMap:
    """The canonical chain map cone(f) -> shift(C, 1)."""
    cone = mapping_cone(f)
    c = f.source
    sc = shift(c, 1)
    comps = {}
    for i in cone.degrees():
        verts = c.summand(i + 1)
        if not verts:
            continue
        nd = len(f.target.summand(i))
        rows = []
        for r, v in enumerate(verts):
            rows.append(
                tuple(
                    PathCombination.of(Path(v, ())) if r == col else PathCombination.zero()
                    for col in range(len(verts))
                )
                + mat_zero(1, nd)[0]
            )
        comps[i] = tuple(rows)
    return ChainMap(cone, sc, comps)


# -- Hom spaces in the homotopy category -------------------------------------


def _hom_variables(c: ProjComplex, d: ProjComplex, offset: int):
    """Variables for degreewise maps C^i -> D^{i+offset}.

    Returns (vars, index) with vars a list of (i, r, c, path) in the fixed
    deterministic order and index its inverse mapping.
    """
    spec = c.spec
    out = []
    for i in sorted(set(c.summands)):
        targets = d.summand(i + offset)
        sources = c.summand(i)
        if not targets or not sources:
            continue
        for r, tv in enumerate(targets):
            for col, sv in enumerate(sources):
                for p in hom_basis_proj(spec, sv, tv):
                    out.append((i, r, col, p))
    return out, {v: j for j, v in enumerate(out)}


def _chain_equations(c: ProjComplex, d: ProjComplex, fvars, findex):
    """Rows of the linear system expressing d_D f = f d_C on path coordinates."""
    spec = c.spec
    rows: dict[tuple, dict[int, Fraction]] = {}

    def put(eqkey, var, coeff):
        rows.setdefault(eqkey, {})
        cur = rows[eqkey].get(var, Fraction(0)) + coeff
        if cur:
            rows[eqkey][var] = cur
        else:
            rows[eqkey].pop(var, None)

    for (i, r, col, p) in fvars:
        var = findex[(i, r, col, p)]
        # d_D composed after f at degree i
        dd = d.diff(i)
        for s in range(len(d.summand(i + 1))):
            entry = dd[s][r]
            if not entry:
                continue
            prod = algebra_product(spec, PathCombination.of(p), entry)
            for path, coeff in prod.terms():
                put((i, s, col, path), var, coeff)
        # f at degree i composed after d_C at degree i-1
        dc = c.diff(i - 1)
        for col0 in range(len(c.summand(i - 1))):
            entry = dc[col][col0] if dc else None
            if not entry:
                continue
            prod = algebra_product(spec, entry, PathCombination.of(p))
            for path, coeff in prod.terms():
                put((i - 1, r, col0, path), var, -coeff)
    return [rows[k] for k in sorted(rows, key=lambda t: (t[0], t[1], t[2], t[3].sort_key()))]


def _homotopy_images(c: ProjComplex, d: ProjComplex, findex):
    """Image vectors (in f-variable coordinates) of the unit homotopies."""
    spec = c.spec
    hvars, _ = _hom_variables(c, d, -1)
    images = []
    for (i, r, col, q) in hvars:
        vec: dict[int, Fraction] = {}

        def put(fkey, coeff):
            var = findex.get(fkey)
            if var is None:
                return
            cur = vec.get(var, Fraction(0)) + coeff
            if cur:
                vec[var] = cur
            else:
                vec.pop(var, None)

        dd = d.diff(i - 1)
        for s in range(len(d.summand(i))):
            entry = dd[s][r]
            if entry:
                prod = algebra_product(spec, PathCombination.of(q), entry)
                for path, coeff in prod.terms():
                    put((i, s, col, path), coeff)
        dc = c.diff(i - 1)
        for col0 in range(len(c.summand(i - 1))):
            entry = dc[col][col0] if dc else None
            if entry:
                prod = algebra_product(spec, entry, PathCombination.of(q))
                for path, coeff in prod.terms():
                    put((i - 1, r, col0, path), coeff)
        images.append(vec)
    return images


@dataclass(frozen=True)
class HomSpace:
    dimension: int
    basis: list[ChainMap]


def hom_space_dimension(c: ProjComplex, d: ProjComplex) -> int:
    """Dimension of the hom space in the homotopy category."""
    fvars, findex = _hom_variables(c, d, 0)
    if not fvars:
        return 0
    eqs = _chain_equations(c, d, fvars, findex)
    images = _homotopy_images(c, d, findex)
    return len(fvars) - rank(eqs) - rank(images)


def _lift_vector(c: ProjComplex, d: ProjComplex, fvars, vec) -> ChainMap:
    comps: dict[int, list[list[PathCombination]]] = {}
    for j, (i, r, col, p) in enumerate(fvars):
        coeff = vec.get(j)
        if not coeff:
            continue
        if i not in comps:
            comps[i] = [
                [PathCombination.zero() for _ in c.summand(i)]
                for _ in d.summand(i)
            ]
        comps[i][r][col] = comps[i][r][col] + PathCombination.of(p, coeff)
    return make_chain_map(c, d, {i: tuple(tuple(r) for r in m) for i, m in comps.items()})


def hom_space(c: ProjComplex, d: ProjComplex) -> HomSpace:
    """Basis of Hom up to homotopy, represented by actual chain maps.

    Representatives are the echelon choice over the fixed variable order
    (degree, row, column, path), so repeated runs agree exactly.
    """
    if c.spec != d.spec:
        raise ValueError("hom across different algebras")
    fvars, findex = _hom_variables(c, d, 0)
    if not fvars:
        return HomSpace(0, [])
    eqs = _chain_equations(c, d, fvars, findex)
    cycles = nullspace(eqs, len(fvars))
    solver = SpanSolver()
    for img in _homotopy_images(c, d, findex):
        solver.add_generator(img)
    boundary_rank = solver.rank
    dim = len(cycles) - boundary_rank
    basis = []
    for z in cycles:
        if len(basis) == dim:
            break
        if not solver.contains(z):
            solver.add_generator(z)
            basis.append(_lift_vector(c, d, fvars, z))
    return HomSpace(dim, basis)


def _map_vector(f: ChainMap, findex) -> dict[int, Fraction]:
    vec: dict[int, Fraction] = {}
    for i, mat in f.components.items():
        for r, row in enumerate(mat):
            for col, entry in enumerate(row):
                for path, coeff in entry.terms():
                    var = findex.get((i, r, col, path))
                    if var is None:
                        raise ValueError(
                            f"component at degree {i} falls outside the hom variable grid"
                        )
                    vec[var] = vec.get(var, Fraction(0)) + coeff
    return {k: v for k, v in vec.items() if v}


def _homotopy_solver(c: ProjComplex, d: ProjComplex):
    cache_key = (c.key(), d.key())
    if not DISABLE_CACHE:
        with _CACHE_LOCK:
            hit = _HOMOTOPY_SOLVERS.get(cache_key)
        if hit is not None:
            return hit
    fvars, findex = _hom_variables(c, d, 0)
    solver = SpanSolver()
    for img in _homotopy_images(c, d, findex):
        solver.add_generator(img)
    result = (solver, findex)
    if not DISABLE_CACHE:
        with _CACHE_LOCK:
            _HOMOTOPY_SOLVERS[cache_key] = result
    return result


def homotopy_rank(maps: list[ChainMap]) -> int:
    """Rank of the span of the given chain maps in the homotopy category.

    All maps must share source and target.  Builds a fresh solver so the
    cached boundary solvers stay untouched.
    """
    if not maps:
        return 0
    first = maps[0]
    for f in maps[1:]:
        if f.source.key() != first.source.key() or f.target.key() != first.target.key():
            raise ValueError("maps must share source and target")
    fvars, findex = _hom_variables(first.source, first.target, 0)
    solver = SpanSolver()
    for img in _homotopy_images(first.source, first.target, findex):
        solver.add_generator(img)
    base = solver.rank
    for f in maps:
        solver.add_generator(_map_vector(f, findex))
    return solver.rank - base


def is_null_homotopic(f: ChainMap) -> bool:
    """Whether f = d h + h d for some degreewise h.

    Raises ValueError when f is not a chain map: nullhomotopy of a
    non-map is meaningless and almost always signals a construction bug.
    """
    problem = validate_chain_map(f)
    if problem is not None:
        raise ValueError(f"not a chain map: {problem}")
    solver, findex = _homotopy_solver(f.source, f.target)
    try:
        vec = _map_vector(f, findex)
    except ValueError:
        return False
    return solver.contains(vec)


def is_contractible(c: ProjComplex) -> bool:
    """Whether the identity is nullhomotopic, i.e. c is zero up to homotopy."""
    return is_null_homotopic(identity_chain_map(c))


# -- Minimal models ----------------------------------------------------------


def _invert_local(spec: AlgebraSpec, entry: PathCombination) -> PathCombination:
    """Inverse of a local-ring element (stationary part + nilpotent loop part)."""
    lam = entry.stationary_coefficient()
    if not lam:
        raise ValueError("entry has no invertible part")
    vertex = None
    for p, _ in entry.terms():
        vertex = p.start
        break
    e = PathCombination.of(Path(vertex, ()))
    nil = entry - e.scale(lam)
    # nil squares to zero: the only cycles are powers of the length-1 loop
    return e.scale(Fraction(1, 1) / lam) - nil.scale(Fraction(1) / (lam * lam))


def minimal_model(c: ProjComplex) -> ProjComplex:
    """Gaussian reduction of invertible differential entries.

    Repeatedly splits off two-term contractible summands until every
    entry lies in the radical (no stationary coefficient); the result is
    homotopy equivalent to the input and unique up to isomorphism.
    """
    spec = c.spec
    summands = {i: list(s) for i, s in c.summands.items()}
    diffs = {i: [list(row) for row in mat] for i, mat in c.diffs.items()}

    def find_pivot():
        for i in sorted(diffs):
            mat = diffs[i]
            for r, row in enumerate(mat):
                for col, entry in enumerate(row):
                    if entry.stationary_coefficient():
                        return i, r, col
        return None

    while True:
        pivot = find_pivot()
        if pivot is None:
            break
        i, r, col = pivot
        mat = diffs[i]
        inv = _invert_local(spec, mat[r][col])
        nrows, ncols = len(mat), len(mat[0])
        for s in range(nrows):
            if s == r:
                continue
            for e in range(ncols):
                if e == col:
                    continue
                if mat[r][e] and mat[s][col]:
                    corr = algebra_product(
                        spec, algebra_product(spec, mat[r][e], inv), mat[s][col]
                    )
                    mat[s][e] = mat[s][e] - corr
        # drop column col at degree i and row r at degree i+1
        del summands[i][col]
        del summands[i + 1][r]
        del mat[r]
        for row in mat:
            del row[col]
        if not mat or not mat[0]:
            del diffs[i]
        below = diffs.get(i - 1)
        if below is not None:
            del below[col]
            if not below:
                del diffs[i - 1]
        above = diffs.get(i + 1)
        if above is not None:
            for row in above:
                del row[r]
            if above and not above[0]:
                del diffs[i + 1]
        for j in (i - 1, i, i + 1):
            if j in diffs and (j not in summands or not summands[j] or j + 1 not in summands or not summands[j + 1]):
                del diffs[j]
        for j in (i, i + 1):
            if j in summands and not summands[j]:
                del summands[j]
    return ProjComplex(
        spec,
        {i: tuple(s) for i, s in summands.items() if s},
        {i: tuple(tuple(row) for row in mat) for i, mat in diffs.items()},
    )


# -- Isomorphism in the homotopy category ------------------------------------


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    forward: ChainMap | None = None
    backward: ChainMap | None = None

    def __bool__(self) -> bool:
        return self.isomorphic


def _signature(c: ProjComplex) -> tuple:
    return tuple(sorted((i, tuple(sorted(s))) for i, s in c.summands.items()))


def _try_inverse(f: ChainMap) -> ChainMap | None:
    """Solve g f ~ id_source over the hom basis of maps target -> source."""
    c, d = f.source, f.target
    backward = hom_space(d, c)
    if not backward.basis:
        return None
    fvars, findex = _hom_variables(c, c, 0)
    solver = SpanSolver()
    generators = []
    for g in backward.basis:
        vec = _map_vector(compose_chain_maps(g, f), findex)
        generators.append(vec)
        solver.add_generator(vec)
    n_g = len(generators)
    for img in _homotopy_images(c, c, findex):
        solver.add_generator(img)
    target_vec = _map_vector(identity_chain_map(c), findex)
    sol = solver.solve(target_vec)
    if sol is None:
        return None
    g = zero_chain_map(d, c)
    for idx, coeff in sol.items():
        if idx < n_g and coeff:
            g = add_chain_maps(g, scale_chain_map(backward.basis[idx], coeff))
    return g


def is_isomorphic_K(c: ProjComplex, d: ProjComplex) -> IsoResult:
    """Isomorphism test in the homotopy category, with explicit witnesses.

    Minimal models are compared degreewise first (an exact invariant);
    on a match, candidate isomorphisms are searched among hom basis
    elements and a few combinations, each certified by solving for a
    two-sided homotopy inverse.  Complete whenever one side is
    indecomposable up to homotopy.
    """
    if c.spec != d.spec:
        raise ValueError("isomorphism across different algebras")
    if _signature(minimal_model(c)) != _signature(minimal_model(d)):
        return IsoResult(False)
    if is_contractible(c):
        return IsoResult(True, zero_chain_map(c, d), zero_chain_map(d, c))
    forward = hom_space(c, d)
    candidates = list(forward.basis)
    if len(forward.basis) > 1:
        total = forward.basis[0]
        for f in forward.basis[1:]:
            total = add_chain_maps(total, f)
        candidates.append(total)
        rng = random.Random(0)
        for _ in range(6):
            combo = zero_chain_map(c, d)
            for f in forward.basis:
                combo = add_chain_maps(combo, scale_chain_map(f, rng.randint(1, 7)))
            candidates.append(combo)
    for f in candidates:
        g = _try_inverse(f)
        if g is None:
            continue
        round_trip = compose_chain_maps(f, g)
        diff = add_chain_maps(round_trip, scale_chain_map(identity_chain_map(d), -1))
        if is_null_homotopic(diff):
            return IsoResult(True, f, g)
    return IsoResult(False)


# -- Serialization ------------------------------------------------------------


SCHEMA_VERSION = 1


def complex_to_obj(c: ProjComplex) -> dict:
    diffs = {}
    for i, mat in sorted(c.diffs.items()):
        rows = []
        for row in mat:
            cells = []
            for entry in row:
                cells.append(
                    [
                        [list(p.arrows), coeff.numerator, coeff.denominator]
                        for p, coeff in entry.terms()
                    ]
                )
            rows.append(cells)
        diffs[str(i)] = rows
    return {
        "schema_version": SCHEMA_VERSION,
        "algebra": [c.spec.n, c.spec.m],
        "degrees": {str(i): list(c.summands[i]) for i in c.degrees()},
        "differentials": diffs,
    }


def complex_from_obj(obj: dict) -> ProjComplex:
    version = obj.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {version!r}")
    spec = AlgebraSpec(int(obj["algebra"][0]), int(obj["algebra"][1]))
    summands = {int(i): tuple(int(v) for v in s) for i, s in obj["degrees"].items()}
    diffs = {}
    for key, rows in obj.get("differentials", {}).items():
        i = int(key)
        row_verts = summands.get(i + 1, ())
        mat = []
        for r, row in enumerate(rows):
            cells = []
            for cell in row:
                acc = PathCombination.zero()
                for arrows, num, den in cell:
                    arrows = tuple(int(w) for w in arrows)
                    start = spec.arrow_source(arrows[-1]) if arrows else row_verts[r]
                    acc = acc + PathCombination.of(
                        Path(start, arrows), Fraction(int(num), int(den))
                    )
                cells.append(acc)
            mat.append(tuple(cells))
        diffs[i] = tuple(mat)
    return ProjComplex(spec, summands, diffs)


def dumps_complex(c: ProjComplex) -> str:
    return json.dumps(complex_to_obj(c), sort_keys=True, separators=(",", ":"))


def loads_complex(text: str) -> ProjComplex:
    return complex_from_obj(json.loads(text))
