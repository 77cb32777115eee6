"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .combinatorics import (
    GeneratorSystem,
    SimplicialComplement,
    SimplicialComplex,
    compress,
    complement_from_complex,
    complex_from_complement,
    minimalize,
    vertex_set,
)
from .hochster import hochster_bigraded
from .linalg import FieldSpec, parse_field
from .moment_angle import PairFamily, ma_poincare, s2s1_series, zk_series
from .polynomial import PoincarePolynomial
from .sampling import random_complement, random_complex, random_generator_system
from .taylor import exactness_sweep
from .tor import BettiTable, bigraded_betti, link_cohomology, tor_product_table


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    try:
        return json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as e:
        raise InputError(f"{path}: byte {e.start}: not valid UTF-8") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None


def _int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{where}: expected an integer, got {x!r}")
    return x


def _vertex_lists(doc, key: str, m: int, path: str) -> list[frozenset]:
    seq = doc[key]
    if not isinstance(seq, list):
        raise InputError(f"{path}: '{key}' must be a list of vertex lists")
    out = []
    for i, vs in enumerate(seq):
        where = f"{path}: {key}[{i}]"
        if not isinstance(vs, list):
            raise InputError(f"{where}: expected a list of vertices")
        vs = [_int(v, where) for v in vs]
        try:
            out.append(vertex_set(vs, m))
        except ValueError as e:
            raise InputError(f"{where}: {e}") from None
    return out


def load_input(path: str) -> dict:
    """Parse an input document into ``{"m", "complement", "complex", "generators"}``."""
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top level must be an object")
    if "m" not in doc:
        raise InputError(f"{path}: missing 'm'")
    m = _int(doc["m"], f"{path}: m")
    if m < 0:
        raise InputError(f"{path}: m must be nonnegative")
    has_c, has_f = "complement" in doc, "facets" in doc
    out: dict = {"m": m, "complement": None, "complex": None, "generators": None}
    if has_c and has_f:
        raise InputError(f"{path}: give exactly one of 'complement' and 'facets'")
    if has_c:
        P = SimplicialComplement(m, tuple(_vertex_lists(doc, "complement", m, path)))
        if P.has_empty_generator:
            raise InputError(f"{path}: complement contains an empty generator")
        out["complement"] = P
        out["complex"] = complex_from_complement(P)
    elif has_f:
        facets = _vertex_lists(doc, "facets", m, path)
        K = SimplicialComplex.from_faces(m, facets)
        out["complex"] = K
        out["complement"] = complement_from_complex(K)
    if "generators" in doc:
        gens = doc["generators"]
        if not isinstance(gens, list):
            raise InputError(f"{path}: 'generators' must be a list of exponent vectors")
        vecs = []
        for i, g in enumerate(gens):
            where = f"{path}: generators[{i}]"
            if not isinstance(g, list):
                raise InputError(f"{where}: expected a list")
            vecs.append(tuple(_int(x, where) for x in g))
        try:
            out["generators"] = GeneratorSystem(m, tuple(vecs))
        except ValueError as e:
            raise InputError(f"{path}: generators: {e}") from None
    if out["complement"] is None and out["generators"] is None:
        raise InputError(f"{path}: need 'complement', 'facets' or 'generators'")
    return out


def load_pairs(path: str, m: int) -> PairFamily:
    doc = _load_json(path)
    if not isinstance(doc, dict) or not isinstance(doc.get("pairs"), list):
        raise InputError(f"{path}: expected an object with a 'pairs' list")
    recs = doc["pairs"]
    if len(recs) != m:
        raise InputError(f"{path}: {len(recs)} pair records for m = {m}")
    px, pa = [], []
    for i, r in enumerate(recs):
        where = f"{path}: pairs[{i}]"
        if not isinstance(r, dict) or not isinstance(r.get("X"), list) or not isinstance(r.get("A"), list):
            raise InputError(f"{where}: expected {{'X': [...], 'A': [...]}}")
        for key, dest in (("X", px), ("A", pa)):
            coeffs = [_int(c, f"{where}.{key}") for c in r[key]]
            if any(c < 0 for c in coeffs):
                raise InputError(f"{where}.{key}: Betti numbers must be nonnegative")
            dest.append(PoincarePolynomial(tuple(coeffs)))
    return PairFamily(tuple(px), tuple(pa))


def _parse_omega(text: str, m: int) -> frozenset:
    text = text.strip()
    if not text:
        return frozenset()
    try:
        vs = [int(v) for v in text.split(",")]
        return vertex_set(vs, m)
    except ValueError as e:
        raise InputError(f"--omega: {e}") from None


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def _need_complement(inp: dict, path: str) -> SimplicialComplement:
    if inp["complement"] is None:
        raise InputError(f"{path}: this command needs 'complement' or 'facets'")
    return inp["complement"]


def _emit(args, payload: dict, text_lines: Sequence[str]) -> None:
    if args.json:
        json.dump(payload, sys.stdout, sort_keys=True, ensure_ascii=False)
        sys.stdout.write("\n")
    else:
        for line in text_lines:
            print(line)


def _table_lines(table: BettiTable) -> list[str]:
    lines = ["q\tsigma\tdim"]
    for (q, s), v in table.items():
        lines.append(f"{q}\t{{{','.join(map(str, sorted(s)))}}}\t{v}")
    return lines


def cmd_tor(args) -> int:
    P = _need_complement(load_input(args.input), args.input)
    table = bigraded_betti(P, args.field)
    series = table.totals()
    _emit(
        args,
        {"field": str(args.field), "series": series.to_list(), "series_text": series.format("x"), "table": table.to_json()},
        [series.format("x")] + _table_lines(table),
    )
    return 0


def cmd_product(args) -> int:
    P = _need_complement(load_input(args.input), args.input)
    T = tor_product_table(P, args.field)
    classes = [
        {"q": c.q, "sigma": list(c.sigma), "index": c.i, "representative": T.describe(c)} for c in T.classes
    ]

    def ref(c):
        return [c.q, list(c.sigma), c.i]

    products = [
        {"left": ref(a), "right": ref(b), "result": [[*ref(c), _num(v)] for c, v in sorted(r.items())]}
        for a, b, r in T.nonzero_products(positive_only=not args.all)
    ]
    lines = ["classes:"] + [f"  {c}  = {T.describe(c)}" for c in T.classes] + ["products:"]
    for a, b, r in T.nonzero_products(positive_only=not args.all):
        rhs = " + ".join(f"{_num(v)}·{c}" for c, v in sorted(r.items()))
        lines.append(f"  {a} * {b} = {rhs}")
    _emit(args, {"field": str(args.field), "classes": classes, "products": products}, lines)
    return 0


def _series_cmd(args, poly: PoincarePolynomial, extra: Optional[dict] = None) -> int:
    payload = {"field": str(args.field), "series": poly.to_list(), "series_text": poly.format("t"), "total_betti": poly.total()}
    payload.update(extra or {})
    _emit(args, payload, [poly.format("t"), f"total Betti number: {poly.total()}"])
    return 0


def cmd_ma(args) -> int:
    inp = load_input(args.input)
    P = _need_complement(inp, args.input)
    pairs = load_pairs(args.pairs, P.m)
    rep = ma_poincare(P, pairs, args.field, prune=not args.unpruned)
    ledger = [
        {"omega": list(w), "sigma": list(s), "q": q, "series": p.to_list()} for w, s, q, p in rep.ledger()
    ]
    payload = {
        "field": str(args.field),
        "series": rep.total.to_list(),
        "series_text": rep.total.format("t"),
        "total_betti": rep.total_betti,
        "hypotheses": rep.hypotheses,
    }
    if args.ledger:
        payload["ledger"] = ledger
    lines = [rep.total.format("t"), f"total Betti number: {rep.total_betti}", f"note: {rep.hypotheses}"]
    if args.ledger:
        lines += [f"  ω={{{','.join(map(str, w))}}} σ={{{','.join(map(str, s))}}} q={q}: {p.format('t')}" for w, s, q, p in rep.ledger()]
    _emit(args, payload, lines)
    return 0


def cmd_zk(args) -> int:
    P = _need_complement(load_input(args.input), args.input)
    return _series_cmd(args, zk_series(P, args.field))


def cmd_s2s1(args) -> int:
    P = _need_complement(load_input(args.input), args.input)
    return _series_cmd(args, s2s1_series(P, args.field))


def cmd_link(args) -> int:
    P = _need_complement(load_input(args.input), args.input)
    w = _parse_omega(args.omega, P.m)
    dims = link_cohomology(P, w, args.field)
    _emit(
        args,
        {"field": str(args.field), "omega": sorted(w), "reduced_cohomology": {str(j): h for j, h in sorted(dims.items())}},
        [f"H~^{j}: {h}" for j, h in sorted(dims.items())] or ["all reduced cohomology vanishes"],
    )
    return 0


def cmd_compress(args) -> int:
    P = _need_complement(load_input(args.input), args.input)
    w = _parse_omega(args.omega, P.m)
    E = compress(P, w)
    payload = {"m": E.m, "complement": E.as_lists(), "minimal": minimalize(E).as_lists()}
    _emit(args, payload, [json.dumps(E.as_lists()), f"minimal: {json.dumps(minimalize(E).as_lists())}"])
    return 0


def _verify_report(args, name: str, ok: int, failures: list[str]) -> int:
    total = ok + len(failures)
    status = "OK" if not failures else "FAIL"
    if args.json:
        json.dump({"check": name, "passed": ok, "trials": total, "failures": failures}, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
    else:
        print(f"{status} {ok}/{total}")
        for f in failures:
            print(f"  {f}", file=sys.stderr)
    return 0 if not failures else 1


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    ok, failures = 0, []
    for t in range(args.trials):
        if args.check == "hochster":
            K = random_complex(rng, args.m)
            P = complement_from_complex(K)
            diff = bigraded_betti(P, args.field).discrepancies(hochster_bigraded(K, args.field))
            bad = [f"trial {t}: facets={K.sorted_facets()} (q,σ,wedge,hochster)={[(q, sorted(s), a, b) for q, s, a, b in diff]}"] if diff else []
        elif args.check == "taylor":
            k = rng.randint(1, args.k)
            G = random_generator_system(rng, args.m, k, args.max_exp)
            reps = [r for r in exactness_sweep(G, args.field) if not r.passed]
            bad = [f"trial {t}: generators={list(G.generators)} failing b={[r.b for r in reps]}"] if reps else []
        else:
            k = rng.randint(1, args.k)
            P = random_complement(rng, args.m, k)
            base = bigraded_betti(P, args.field)
            perm = list(P.generators)
            rng.shuffle(perm)
            extra = P.generators[rng.randrange(k)] | {rng.randint(1, args.m)}
            variants = {
                "minimalized": minimalize(P),
                "permuted": SimplicialComplement(P.m, tuple(perm)),
                "redundant": SimplicialComplement(P.m, P.generators + (frozenset(extra),)),
            }
            names = [n for n, Q in variants.items() if bigraded_betti(Q, args.field) != base]
            bad = [f"trial {t}: complement={P.as_lists()} differs when {names}"] if names else []
        if bad:
            failures.extend(bad)
        else:
            ok += 1
    return _verify_report(args, args.check, ok, failures)


def _field_arg(text: str) -> FieldSpec:
    try:
        return parse_field(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=parse_field("rational"),
                        help="'rational' (default) or 'gf:p'")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="sctor", description="Tor algebras of face rings and moment-angle series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tor", parents=[common], help="Tor series and bigraded Betti table")
    p.add_argument("input")
    p.set_defaults(func=cmd_tor)

    p = sub.add_parser("product", parents=[common], help="structure constants of the Tor algebra")
    p.add_argument("input")
    p.add_argument("--all", action="store_true", help="include products with the unit")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("ma", parents=[common], help="Poincaré polynomial of Z_K(X, A)")
    p.add_argument("--pairs", required=True, help="pairs document")
    p.add_argument("--ledger", action="store_true", help="list every (ω, σ, q) contribution")
    p.add_argument("--unpruned", action="store_true", help="sum over all ω ⊆ [m], not only faces")
    p.add_argument("input")
    p.set_defaults(func=cmd_ma)

    for name, func, helptext in (("zk", cmd_zk, "Poincaré polynomial of Z_K(D², S¹)"),
                                 ("s2s1", cmd_s2s1, "Poincaré polynomial of Z_K(S², S¹)")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("input")
        p.set_defaults(func=func)

    p = sub.add_parser("link", parents=[common], help="reduced cohomology of link_K ω via compression")
    p.add_argument("--omega", required=True, help="comma-separated vertices, e.g. 1,3")
    p.add_argument("input")
    p.set_defaults(func=cmd_link)

    p = sub.add_parser("compress", parents=[common], help="ω-compression of the complement")
    p.add_argument("--omega", required=True)
    p.add_argument("input")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("verify", parents=[common], help="randomized cross-checks")
    p.add_argument("check", choices=["hochster", "taylor", "equiv"])
    p.add_argument("--m", type=int, default=None, help="vertex count (default 6; 3 for taylor)")
    p.add_argument("--k", type=int, default=5, help="maximum number of generators")
    p.add_argument("--max-exp", type=int, default=2, help="maximum exponent (taylor)")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "verify":
        if args.m is None:
            args.m = 3 if args.check == "taylor" else 6
        if args.m < 1 or args.trials < 0 or args.k < 1 or args.max_exp < 1:
            parser.error("--m, --k and --max-exp must be positive and --trials nonnegative")
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
