"""Path combinatorics for a family of one-cycle gentle algebras.

The algebra depends on two integers n >= 1 and m >= 0.  Its quiver has
vertices -m, ..., n-1: an oriented cycle through 0, ..., n-1 (a loop at 0
when n = 1) together with a descending tail 0 -> -1 -> ... -> -m.  Arrows
are indexed by their target: alpha_u ends at u, and its source is u+1 for
a tail or inner cycle arrow and 0 for the closing arrow alpha_{n-1}.  The
product of two consecutive cycle arrows is zero; these quadratic monomial
relations are the only ones, so a nonzero path is exactly an arrow word
that walks the quiver without containing a forbidden cycle pair.

Arrow words are stored in algebra order: ``arrows[-1]`` is applied first,
``arrows[0]`` last.  A path therefore starts at the source of its last
entry and ends at the target (= index) of its first entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator


@dataclass(frozen=True)
class AlgebraSpec:
    """Parameters (n, m) of the algebra: cycle length and tail length."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"cycle length n must be >= 1, got {self.n}")
        if self.m < 0:
            raise ValueError(f"tail length m must be >= 0, got {self.m}")

    @property
    def vertices(self) -> range:
        return range(-self.m, self.n)

    @property
    def arrows(self) -> range:
        """Arrow indices; alpha_u has target u."""
        return range(-self.m, self.n)

    def arrow_source(self, u: int) -> int:
        if not -self.m <= u <= self.n - 1:
            raise ValueError(f"no arrow with index {u} in {self}")
        if u == self.n - 1:
            return 0
        return u + 1

    def arrow_target(self, u: int) -> int:
        if not -self.m <= u <= self.n - 1:
            raise ValueError(f"no arrow with index {u} in {self}")
        return u

    def normalize_arrow(self, w: int) -> int:
        """Reduce an arrow index: cycle indices are periodic mod n.

        Tail indices (w < 0) are returned unchanged.
        """
        return w % self.n if w >= 0 else w


def successor(spec: AlgebraSpec, u: int) -> int:
    """Source vertex of the maximal path ending at u.

    >>> successor(AlgebraSpec(2, 1), -1)
    1
    >>> successor(AlgebraSpec(2, 1), 1)
    0
    >>> successor(AlgebraSpec(1, 2), 0)
    0
    """
    if u not in spec.vertices:
        raise ValueError(f"vertex {u} not in {spec}")
    if spec.n == 1:
        return 0
    if u < 0:
        return 1
    return (u + 1) % spec.n


def successor_power(spec: AlgebraSpec, u: int, j: int) -> int:
    """j-fold iterate of :func:`successor` (j >= 0)."""
    if j < 0:
        raise ValueError(f"negative iterate {j}")
    if j == 0:
        return u
    if u not in spec.vertices:
        raise ValueError(f"vertex {u} not in {spec}")
    if u >= 0:
        return (u + j) % spec.n
    return j % spec.n


@dataclass(frozen=True)
class Path:
    """A nonzero path: start vertex plus arrow word in algebra order."""

    start: int
    arrows: tuple[int, ...]

    @property
    def end(self) -> int:
        # target of an arrow is its index
        return self.arrows[0] if self.arrows else self.start

    @property
    def is_stationary(self) -> bool:
        return not self.arrows

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.arrows), self.arrows)

    def __repr__(self) -> str:
        if not self.arrows:
            return f"e({self.start})"
        return "*".join(f"a({w})" for w in self.arrows)


def stationary_path(spec: AlgebraSpec, u: int) -> Path:
    if u not in spec.vertices:
        raise ValueError(f"vertex {u} not in {spec}")
    return Path(u, ())


def _is_forbidden_pair(spec: AlgebraSpec, a: int, b: int) -> bool:
    """True if the length-2 word (a, b), with b applied first, is a relation."""
    return a >= 0 and b >= 0 and b == (a + 1) % spec.n


def path_is_valid(spec: AlgebraSpec, p: Path) -> bool:
    """Check endpoint chaining and relation freeness of an arrow word."""
    if p.start not in spec.vertices:
        return False
    at = p.start
    for w in reversed(p.arrows):
        if w not in spec.arrows or spec.arrow_source(w) != at:
            return False
        at = spec.arrow_target(w)
    for a, b in zip(p.arrows, p.arrows[1:]):
        if _is_forbidden_pair(spec, a, b):
            return False
    return True


def make_path(spec: AlgebraSpec, arrows: Iterable[int]) -> Path:
    """Build a validated path from an arrow word in algebra order."""
    word = tuple(spec.normalize_arrow(w) for w in arrows)
    if not word:
        raise ValueError("stationary path needs a vertex; use stationary_path")
    p = Path(spec.arrow_source(word[-1]), word)
    if not path_is_valid(spec, p):
        raise ValueError(f"invalid or zero path word {word} in {spec}")
    return p


def max_path(spec: AlgebraSpec, u: int) -> Path:
    """The maximal nonzero path ending at u.

    For u < 0 this is the full descent from successor(u) through the tail;
    for a cycle vertex it is the single arrow alpha_u.

    >>> max_path(AlgebraSpec(2, 1), -1)
    a(-1)*a(0)
    """
    if u not in spec.vertices:
        raise ValueError(f"vertex {u} not in {spec}")
    if u < 0:
        return Path(successor(spec, u), tuple(range(u, 1)))
    return Path(successor(spec, u), (u,))


def factor_path(spec: AlgebraSpec, u: int, v: int) -> Path:
    """The path with max_path(u) = factor_path(u, v) * max_path(v).

    Defined when u <= v and both maximal paths start at the same vertex;
    stationary at u when u = v.
    """
    if u not in spec.vertices or v not in spec.vertices:
        raise ValueError(f"vertices ({u}, {v}) not in {spec}")
    if u > v:
        raise ValueError(f"no factor path: {u} > {v}")
    if successor(spec, u) != successor(spec, v):
        raise ValueError(f"no factor path: max paths at {u}, {v} start apart")
    if u == v:
        return Path(u, ())
    return Path(v, tuple(range(u, v)))


def compose_paths(spec: AlgebraSpec, p: Path, q: Path) -> "PathCombination":
    """Algebra product p*q, with q applied first (end of q = start of p).

    The result is a PathCombination because the product may be zero: the
    concatenated word vanishes exactly when the junction is a forbidden
    cycle pair.
    """
    if q.end != p.start:
        raise ValueError(f"paths do not compose: {q} ends at {q.end}, {p} starts at {p.start}")
    if not p.arrows:
        return PathCombination.of(q)
    if not q.arrows:
        return PathCombination.of(p)
    if _is_forbidden_pair(spec, p.arrows[-1], q.arrows[0]):
        return PathCombination.zero()
    return PathCombination.of(Path(q.start, p.arrows + q.arrows))


class PathCombination:
    """A rational linear combination of parallel paths.

    Internally a dict Path -> Fraction with zero coefficients dropped.
    Combinations occurring as matrix entries always consist of parallel
    paths (same start, same end), but that is the caller's concern.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Path, Fraction] | None = None):
        self._terms: dict[Path, Fraction] = {}
        if terms:
            for path, coeff in terms.items():
                if coeff:
                    self._terms[path] = Fraction(coeff)

    @classmethod
    def zero(cls) -> "PathCombination":
        return cls()

    @classmethod
    def of(cls, path: Path, coeff: Fraction | int = 1) -> "PathCombination":
        return cls({path: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def terms(self) -> Iterator[tuple[Path, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda it: it[0].sort_key()))

    def coefficient(self, path: Path) -> Fraction:
        return self._terms.get(path, Fraction(0))

    def stationary_coefficient(self) -> Fraction:
        for path, coeff in self._terms.items():
            if path.is_stationary:
                return coeff
        return Fraction(0)

    def __add__(self, other: "PathCombination") -> "PathCombination":
        out = dict(self._terms)
        for path, coeff in other._terms.items():
            new = out.get(path, Fraction(0)) + coeff
            if new:
                out[path] = new
            else:
                out.pop(path, None)
        return PathCombination(out)

    def __sub__(self, other: "PathCombination") -> "PathCombination":
        return self + other.scale(-1)

    def __neg__(self) -> "PathCombination":
        return self.scale(-1)

    def scale(self, coeff: Fraction | int) -> "PathCombination":
        coeff = Fraction(coeff)
        if not coeff:
            return PathCombination.zero()
        return PathCombination({p: c * coeff for p, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PathCombination):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self.key())

    def key(self) -> tuple:
        """Canonical hashable form: sorted ((start, arrows, num, den), ...)."""
        return tuple(
            (p.start, p.arrows, c.numerator, c.denominator)
            for p, c in self.terms()
        )

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for path, coeff in self.terms():
            bits.append(f"{coeff}*{path!r}" if coeff != 1 else repr(path))
        return " + ".join(bits)


def algebra_product(
    spec: AlgebraSpec, x: PathCombination, y: PathCombination
) -> PathCombination:
    """Bilinear extension of compose_paths: x*y with y applied first."""
    out = PathCombination.zero()
    for px, cx in x.terms():
        for py, cy in y.terms():
            out = out + compose_paths(spec, px, py).scale(cx * cy)
    return out


def hom_basis_proj(spec: AlgebraSpec, v: int, u: int) -> list[Path]:
    """All nonzero paths from u to v, sorted by (length, arrow word).

    These paths index a basis of the module maps P_v -> P_u by right
    multiplication.

    >>> hom_basis_proj(AlgebraSpec(1, 0), 0, 0)
    [e(0), a(0)]
    >>> hom_basis_proj(AlgebraSpec(2, 1), -1, 0)
    [a(-1)]
    """
    if v not in spec.vertices or u not in spec.vertices:
        raise ValueError(f"vertices ({v}, {u}) not in {spec}")
    found: list[Path] = []
    # Walk forward from u; path length is bounded by m + 1, so plain DFS.
    stack: list[Path] = [Path(u, ())]
    while stack:
        p = stack.pop()
        if p.end == v:
            found.append(p)
        at = p.end
        for w in spec.arrows:
            if spec.arrow_source(w) != at:
                continue
            if p.arrows and _is_forbidden_pair(spec, w, p.arrows[0]):
                continue
            stack.append(Path(p.start, (w,) + p.arrows))
    found.sort(key=Path.sort_key)
    return found
