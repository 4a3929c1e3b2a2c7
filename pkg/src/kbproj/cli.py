"""Command-line front end: hom queries, verification sweeps, and exports.

Subcommands (all take --algebra N,M):

- hom: dimension and basis labels between two vertices or two index
  quadruples, with an optional chain-level cross-check.
- verify: the invariant suites (dimension agreement, functoriality,
  suspension squares, irreducibles, triangles, rigidity) on a window,
  with a JSON report; exit code 1 on any failure.
- ar-export: the vertex grid with irreducible-map edges as DOT or JSON,
  shifted-projective vertices marked.
- rigidity-check: seeded random pseudo-identity data (or data from a
  JSON file) run through validation, the conjugation construction, and
  the naturality check.

Exit codes: 0 success, 1 verification failure, 2 usage error.  JSON
reports are schema-versioned and byte-identical for identical inputs
and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import basismaps
from .algebra import AlgebraSpec
from .basismaps import hom_dim, in_phi, in_psi, irr_targets_quadruple, phi_map, psi_map
from .complexes import (
    SCHEMA_VERSION,
    add_chain_maps,
    clear_caches,
    compose_chain_maps,
    hom_space_dimension,
    homotopy_rank,
    is_isomorphic_K,
    is_null_homotopic,
    scale_chain_map,
    validate_chain_map,
)
from .gamma import (
    GammaVertex,
    gamma_compose,
    gamma_hom_dim,
    hom_f,
    hom_g,
    in_F,
    in_G,
    irreducible_targets,
    is_shifted_projective,
    is_vertex,
    suspend_vertex,
    theta_hom,
    theta_vertex,
)
from .quadruples import Quadruple, build_complex, enumerate_quadruples, in_calC, suspend_quadruple
from .rigidity import (
    InvalidPseudoIdentity,
    TriangleCertificationError,
    construct_conjugation,
    family_to_obj,
    identity_data,
    identity_family,
    pseudo_identity_from_obj,
    pseudo_identity_to_obj,
    random_pseudo_identity,
    standard_triangle,
    validate_pseudo_identity,
    verify_naturality,
)


class UsageError(Exception):
    """Bad arguments discovered after argparse: reported on exit code 2."""


# -- Argument parsing -----------------------------------------------------------


def _algebra_spec(text: str) -> AlgebraSpec:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--algebra expects N,M, got {text!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"--algebra expects integers, got {text!r}") from None
    if n < 1 or m < 0:
        raise UsageError(f"--algebra needs N >= 1 and M >= 0, got {text!r}")
    return AlgebraSpec(n, m)


def _parse_span(text: str, flag: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"{flag} expects LO:HI, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise UsageError(f"{flag} expects integers, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"{flag} window {text!r} is empty")
    return lo, hi


def _parse_point(spec: AlgebraSpec, text: str):
    """A vertex (i,a,b) or a quadruple (k,u,l,v) from its printed form."""
    parts = text.strip().strip("()").split(",")
    try:
        numbers = [int(p.strip()) for p in parts]
    except ValueError:
        raise UsageError(f"cannot parse {text!r} as a vertex or quadruple") from None
    if len(numbers) == 3:
        v = GammaVertex(*numbers)
        if not is_vertex(spec, v):
            raise UsageError(f"{text!r} is not a vertex of the grid")
        return v
    if len(numbers) == 4:
        q = Quadruple(*numbers)
        if not in_calC(spec, q):
            raise UsageError(f"{text!r} is not in the indexing family")
        return q
    raise UsageError(f"expected (i,a,b) or (k,u,l,v), got {text!r}")


def _window_vertices(spec: AlgebraSpec, a_span: tuple[int, int], b_span: tuple[int, int]):
    out = []
    for i in range(spec.n):
        for a in range(a_span[0], a_span[1] + 1):
            for b in range(b_span[0], b_span[1] + 1):
                v = GammaVertex(i, a, b)
                if is_vertex(spec, v):
                    out.append(v)
    return out


def _emit(obj: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- hom --------------------------------------------------------------------------


def cmd_hom(spec: AlgebraSpec, args: argparse.Namespace) -> int:
    source = _parse_point(spec, args.from_)
    target = _parse_point(spec, args.to)
    if type(source) is not type(target):
        raise UsageError("--from and --to must both be vertices or both be quadruples")
    if isinstance(source, GammaVertex):
        labels = []
        if in_F(spec, source, target):
            labels.append("f")
        if in_G(spec, source, target):
            labels.append("g")
        dim = gamma_hom_dim(spec, source, target)
        oracle_pair = (theta_vertex(spec, source), theta_vertex(spec, target))
    else:
        labels = []
        if in_phi(spec, target, source):
            labels.append("phi")
        if in_psi(spec, target, source):
            labels.append("psi")
        dim = hom_dim(spec, source, target)
        oracle_pair = (source, target)
    obj = {
        "schema": SCHEMA_VERSION,
        "algebra": [spec.n, spec.m],
        "from": list(source),
        "to": list(target),
        "dim": dim,
        "basis": labels,
    }
    lines = [f"dim {dim}: {', '.join(labels)}" if labels else f"dim {dim}"]
    status = 0
    if args.oracle == "on":
        oracle_dim = hom_space_dimension(
            build_complex(spec, oracle_pair[0]), build_complex(spec, oracle_pair[1])
        )
        obj["oracle_dim"] = oracle_dim
        lines.append(f"oracle dim {oracle_dim}")
        if oracle_dim != dim:
            lines.append("MISMATCH")
            obj["ok"] = False
            status = 1
    _emit(obj, args.format, lines)
    return status


# -- verify ------------------------------------------------------------------------


def _suite_dims(spec: AlgebraSpec, k_span, l_max) -> dict:
    quads = enumerate_quadruples(spec, k_span[0], k_span[1], l_max)
    memo: dict[tuple, int] = {}
    checks = 0
    failures = []
    for qs in quads:
        for qt in quads:
            key = (qs.u, qs.l, qs.v, qt.k - qs.k, qt.u, qt.l, qt.v)
            oracle = memo.get(key)
            if oracle is None:
                rep_s = Quadruple(0, qs.u, qs.l, qs.v)
                rep_t = Quadruple(qt.k - qs.k, qt.u, qt.l, qt.v)
                oracle = hom_space_dimension(
                    build_complex(spec, rep_s), build_complex(spec, rep_t)
                )
                memo[key] = oracle
            checks += 1
            if hom_dim(spec, qs, qt) != oracle:
                failures.append(
                    f"{tuple(qs)} -> {tuple(qt)}: formula {hom_dim(spec, qs, qt)}, oracle {oracle}"
                )
    return {"name": "dims", "checks": checks, "failures": failures}


def _suite_basis(spec: AlgebraSpec, k_span, l_max) -> dict:
    quads = enumerate_quadruples(spec, k_span[0], k_span[1], l_max)
    seen: set[tuple] = set()
    checks = 0
    failures = []
    for qs in quads:
        for qt in quads:
            key = (qs.u, qs.l, qs.v, qt.k - qs.k, qt.u, qt.l, qt.v)
            if key in seen:
                continue
            seen.add(key)
            rep_s = Quadruple(0, qs.u, qs.l, qs.v)
            rep_t = Quadruple(qt.k - qs.k, qt.u, qt.l, qt.v)
            claimed = []
            if in_phi(spec, rep_t, rep_s):
                claimed.append(("phi", phi_map))
            if in_psi(spec, rep_t, rep_s):
                claimed.append(("psi", psi_map))
            if not claimed:
                continue
            checks += 1
            maps = []
            broken = False
            for label, build in claimed:
                try:
                    maps.append((label, build(spec, rep_t, rep_s)))
                except ValueError as exc:
                    failures.append(f"{label} {tuple(rep_s)} -> {tuple(rep_t)}: {exc}")
                    broken = True
            if broken:
                continue
            for label, chain in maps:
                problem = validate_chain_map(chain)
                if problem is not None:
                    failures.append(f"{label} {tuple(rep_s)} -> {tuple(rep_t)}: {problem}")
                elif is_null_homotopic(chain):
                    failures.append(f"{label} {tuple(rep_s)} -> {tuple(rep_t)}: null-homotopic")
            if len(maps) == 2 and homotopy_rank([c for _, c in maps]) != 2:
                failures.append(f"{tuple(rep_s)} -> {tuple(rep_t)}: pair is not rank 2")
    return {"name": "basis", "checks": checks, "failures": failures}


def _window_generators(spec: AlgebraSpec, vertices):
    gens = []
    for v in vertices:
        for u in vertices:
            if in_F(spec, v, u) and v != u:
                gens.append(hom_f(spec, v, u))
            if in_G(spec, v, u):
                gens.append(hom_g(spec, v, u))
    return gens


def _suite_functoriality(spec: AlgebraSpec, a_span, b_span) -> dict:
    vertices = _window_vertices(spec, a_span, b_span)
    gens = _window_generators(spec, vertices)
    by_source: dict[GammaVertex, list] = {}
    for h in gens:
        by_source.setdefault(h.source, []).append(h)
    checks = 0
    failures = []
    for h1 in gens:
        for h2 in by_source.get(h1.target, ()):
            checks += 1
            composite = gamma_compose(h2, h1)
            lhs = compose_chain_maps(theta_hom(h2), theta_hom(h1))
            if not composite.is_zero():
                lhs = add_chain_maps(lhs, scale_chain_map(theta_hom(composite), -1))
            if not is_null_homotopic(lhs):
                failures.append(
                    f"{tuple(h1.source)} -> {tuple(h1.target)} -> {tuple(h2.target)}"
                )
    return {"name": "functoriality", "checks": checks, "failures": failures}


def _suite_suspension(spec: AlgebraSpec, a_span, b_span) -> dict:
    checks = 0
    failures = []
    for v in _window_vertices(spec, a_span, b_span):
        checks += 1
        left = build_complex(spec, suspend_quadruple(theta_vertex(spec, v)))
        right = build_complex(spec, theta_vertex(spec, suspend_vertex(spec, v)))
        if not is_isomorphic_K(left, right):
            failures.append(f"suspension square fails at {tuple(v)}")
    return {"name": "suspension", "checks": checks, "failures": failures}


def _suite_irreducibles(spec: AlgebraSpec, a_span, b_span) -> dict:
    checks = 0
    failures = []
    for v in _window_vertices(spec, a_span, b_span):
        checks += 1
        transported = [theta_vertex(spec, t) for t in irreducible_targets(spec, v)]
        table = irr_targets_quadruple(spec, theta_vertex(spec, v))
        if transported != table:
            failures.append(
                f"{tuple(v)}: transported {[tuple(q) for q in transported]}"
                f" != table {[tuple(q) for q in table]}"
            )
    return {"name": "irreducibles", "checks": checks, "failures": failures}


def _suite_triangles(spec: AlgebraSpec, a_span, b_span) -> dict:
    checks = 0
    failures = []
    for v in _window_vertices(spec, a_span, b_span):
        checks += 1
        try:
            standard_triangle(spec, v)
        except TriangleCertificationError as exc:
            failures.append(str(exc))
    return {"name": "triangles", "checks": checks, "failures": failures}


def _suite_rigidity(spec: AlgebraSpec, a_span, b_span, seed: int) -> dict:
    window = (a_span[0], a_span[1], b_span[0], b_span[1])
    checks = 0
    failures = []
    if not (a_span[0] <= 0 <= a_span[1]) or b_span[1] < 0:
        return {
            "name": "rigidity",
            "checks": 0,
            "failures": ["window cannot seed the construction (needs a = 0 and b >= 0)"],
        }
    ident = identity_data(spec, window)
    checks += 1
    if construct_conjugation(ident) != identity_family(spec, ident.vertices()):
        failures.append("identity data does not return the identity family")
    for offset in range(3):
        checks += 1
        data = random_pseudo_identity(spec, window, seed + offset)
        try:
            family = construct_conjugation(data)
        except InvalidPseudoIdentity as exc:
            failures.append(f"seed {seed + offset}: {exc}")
            continue
        counterexample = verify_naturality(family, data)
        if counterexample is not None:
            failures.append(
                f"seed {seed + offset}: naturality fails for {counterexample.kind} "
                f"{tuple(counterexample.source)} -> {tuple(counterexample.target)}"
            )
    return {"name": "rigidity", "checks": checks, "failures": failures}


def cmd_verify(spec: AlgebraSpec, args: argparse.Namespace) -> int:
    k_span = _parse_span(args.k, "--k")
    a_span = _parse_span(args.a, "--a")
    b_span = _parse_span(args.b, "--b")
    if args.l < 0:
        raise UsageError("--l must be nonnegative")
    if args.inject_fault:
        basismaps._FAULT = args.inject_fault
        clear_caches()
    try:
        suites = []
        if args.oracle == "on":
            suites.append(_suite_dims(spec, k_span, args.l))
        suites.append(_suite_basis(spec, k_span, args.l))
        suites.append(_suite_functoriality(spec, a_span, b_span))
        suites.append(_suite_suspension(spec, a_span, b_span))
        suites.append(_suite_irreducibles(spec, a_span, b_span))
        suites.append(_suite_triangles(spec, a_span, b_span))
        suites.append(_suite_rigidity(spec, a_span, b_span, args.seed))
    finally:
        if args.inject_fault:
            basismaps._FAULT = None
            clear_caches()
    ok = all(not s["failures"] for s in suites)
    obj = {
        "schema": SCHEMA_VERSION,
        "algebra": [spec.n, spec.m],
        "window": {"k": list(k_span), "l": args.l, "a": list(a_span), "b": list(b_span)},
        "seed": args.seed,
        "oracle": args.oracle == "on",
        "fault": args.inject_fault,
        "suites": [
            {"name": s["name"], "checks": s["checks"], "failures": s["failures"][:10]}
            for s in suites
        ],
        "ok": ok,
    }
    lines = []
    for s in suites:
        lines.append(f"{s['name']}: {s['checks']} checks, {len(s['failures'])} failures")
        for example in s["failures"][:3]:
            lines.append(f"  {example}")
    lines.append("OK" if ok else "FAIL")
    _emit(obj, args.format, lines)
    return 0 if ok else 1


# -- ar-export -----------------------------------------------------------------------


def cmd_ar_export(spec: AlgebraSpec, args: argparse.Namespace) -> int:
    a_span = _parse_span(args.a, "--a")
    b_span = _parse_span(args.b, "--b")
    vertices = sorted(_window_vertices(spec, a_span, b_span))
    inside = set(vertices)
    edges = []
    for v in vertices:
        for t in irreducible_targets(spec, v):
            if t in inside:
                edges.append((v, t))
    if args.format == "json":
        obj = {
            "schema": SCHEMA_VERSION,
            "algebra": [spec.n, spec.m],
            "window": {"a": list(a_span), "b": list(b_span)},
            "vertices": [
                {
                    "vertex": list(v),
                    "shifted_projective": (
                        list(sp) if (sp := is_shifted_projective(spec, v)) is not None else None
                    ),
                }
                for v in vertices
            ],
            "edges": [{"from": list(v), "to": list(t)} for v, t in edges],
        }
        print(json.dumps(obj, indent=2, sort_keys=True))
        return 0
    lines = ["digraph grid {"]
    for v in vertices:
        shape = " shape=box" if is_shifted_projective(spec, v) is not None else ""
        lines.append(f'  "{v.i},{v.a},{v.b}" [label="({v.i},{v.a},{v.b})"{shape}];')
    for v, t in edges:
        lines.append(f'  "{v.i},{v.a},{v.b}" -> "{t.i},{t.a},{t.b}";')
    lines.append("}")
    print("\n".join(lines))
    return 0


# -- rigidity-check ---------------------------------------------------------------------


def cmd_rigidity_check(spec: AlgebraSpec, args: argparse.Namespace) -> int:
    a_span = _parse_span(args.a, "--a")
    b_span = _parse_span(args.b, "--b")
    window = (a_span[0], a_span[1], b_span[0], b_span[1])
    instances = []
    family_obj = None
    if args.input is not None:
        try:
            with open(args.input, "r", encoding="utf-8") as handle:
                data = pseudo_identity_from_obj(json.load(handle))
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot load pseudo-identity data: {exc}") from None
        if data.spec != spec:
            raise UsageError("data algebra does not match --algebra")
        entry = {"source": args.input, "violations": validate_pseudo_identity(data)[:10]}
        if not entry["violations"]:
            try:
                family = construct_conjugation(data)
                counterexample = verify_naturality(family, data)
                if counterexample is None:
                    entry["ok"] = True
                    family_obj = family_to_obj(family)
                else:
                    entry["ok"] = False
                    entry["violations"] = [
                        f"naturality fails for {counterexample.kind} "
                        f"{tuple(counterexample.source)} -> {tuple(counterexample.target)}"
                    ]
            except InvalidPseudoIdentity as exc:
                entry["ok"] = False
                entry["violations"] = [str(exc)]
        else:
            entry["ok"] = False
        instances.append(entry)
    else:
        if args.count < 1:
            raise UsageError("--count must be positive")
        for offset in range(args.count):
            seed = args.seed + offset
            entry = {"seed": seed}
            try:
                data = random_pseudo_identity(spec, window, seed)
                family = construct_conjugation(data)
                counterexample = verify_naturality(family, data)
                if counterexample is None:
                    entry["ok"] = True
                else:
                    entry["ok"] = False
                    entry["violations"] = [
                        f"naturality fails for {counterexample.kind} "
                        f"{tuple(counterexample.source)} -> {tuple(counterexample.target)}"
                    ]
            except (InvalidPseudoIdentity, ValueError) as exc:
                entry["ok"] = False
                entry["violations"] = [str(exc)]
            instances.append(entry)
    ok = all(entry["ok"] for entry in instances)
    obj = {
        "schema": SCHEMA_VERSION,
        "algebra": [spec.n, spec.m],
        "window": {"a": list(a_span), "b": list(b_span)},
        "seed": args.seed,
        "instances": instances,
        "ok": ok,
    }
    if family_obj is not None:
        obj["family"] = family_obj
    lines = []
    for entry in instances:
        tag = entry.get("source", f"seed {entry.get('seed')}")
        lines.append(f"{tag}: {'ok' if entry['ok'] else 'FAIL'}")
        for violation in entry.get("violations", [])[:3]:
            lines.append(f"  {violation}")
    lines.append("OK" if ok else "FAIL")
    _emit(obj, args.format, lines)
    return 0 if ok else 1


# -- Entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kbproj",
        description="Homotopy-category calculator for the one-cycle gentle algebras",
    )
    parser.add_argument("--algebra", required=True, metavar="N,M", help="algebra parameters")
    sub = parser.add_subparsers(dest="command", required=True)

    hom = sub.add_parser("hom", help="dimension and basis of a hom space")
    hom.add_argument("--from", dest="from_", required=True, metavar="POINT")
    hom.add_argument("--to", required=True, metavar="POINT")
    hom.add_argument("--format", choices=["text", "json"], default="text")
    hom.add_argument("--oracle", choices=["on", "off"], default="off")

    verify = sub.add_parser("verify", help="run the invariant suites on a window")
    verify.add_argument("--k", default="-2:2", metavar="LO:HI")
    verify.add_argument("--l", type=int, default=3, metavar="MAX")
    verify.add_argument("--a", default="-2:2", metavar="LO:HI")
    verify.add_argument("--b", default="-2:2", metavar="LO:HI")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--format", choices=["text", "json"], default="text")
    verify.add_argument("--oracle", choices=["on", "off"], default="on")
    verify.add_argument(
        "--inject-fault",
        choices=["psi-sign", "phi-membership"],
        default=None,
        help=argparse.SUPPRESS,
    )

    export = sub.add_parser("ar-export", help="vertex grid with irreducible-map edges")
    export.add_argument("--a", default="0:2", metavar="LO:HI")
    export.add_argument("--b", default="0:2", metavar="LO:HI")
    export.add_argument("--format", choices=["dot", "json"], default="dot")

    rigidity = sub.add_parser("rigidity-check", help="conjugation construction on seeded data")
    rigidity.add_argument("--a", default="-2:2", metavar="LO:HI")
    rigidity.add_argument("--b", default="-2:2", metavar="LO:HI")
    rigidity.add_argument("--seed", type=int, default=0)
    rigidity.add_argument("--count", type=int, default=5)
    rigidity.add_argument("--input", default=None, metavar="FILE")
    rigidity.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _merge_window_tokens(argv: list[str]) -> list[str]:
    """Join "--k -1:1" into "--k=-1:1" so negative windows parse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in ("--k", "--a", "--b") and nxt.startswith("-") and ":" in nxt:
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_merge_window_tokens(list(sys.argv[1:] if argv is None else argv)))
    try:
        spec = _algebra_spec(args.algebra)
        if args.command == "hom":
            return cmd_hom(spec, args)
        if args.command == "verify":
            return cmd_verify(spec, args)
        if args.command == "ar-export":
            return cmd_ar_export(spec, args)
        return cmd_rigidity_check(spec, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
