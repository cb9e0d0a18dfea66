"""Command-line front end.

Results go to standard output, either as plain text or (with ``--json``)
as a single JSON object ``{"v": 1, "command": ..., "result": ...}``.
Diagnostics, including timing, go to standard error only, so standard
output is byte-identical across runs and worker counts.

Exit codes: 0 success or verified; 1 failed verification (the payload
carries a witness); 2 usage error; 3 enumeration-limit refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import bipartite, complexes, cyclo, dual
from .matroids import EnumerationLimitError, indices_from_mask
from .parallel import cpu_count

DEFAULT_SWEEP = 20
DEFAULT_BASIS = 32


def _limits(args) -> tuple[int, int]:
    if args.limit_bits is not None:
        return args.limit_bits, args.limit_bits
    return DEFAULT_SWEEP, DEFAULT_BASIS


def _report_payload(report) -> dict:
    return report.as_dict()


def _cmd_phi(args):
    return {"value": cyclo.euler_phi(args.n)}, None, 0


def _cmd_cyclo_poly(args):
    poly = cyclo.cyclotomic_polynomial(args.n)
    return {"polynomial": poly.text()}, None, 0


def _cmd_mu_matrix(args):
    m = cyclo.cyclotomic_matroid(args.n)
    rows = [list(row) for row in m.matrix.rows]
    lines = [" ".join(str(x) for x in row) for row in rows]
    return {"rank": m.rank, "rows": rows}, lines, 0


def _cmd_bases(args):
    sweep, basis = _limits(args)
    m = cyclo.cyclotomic_matroid(args.n)
    count, masks = m.enumerate_bases(listing=args.list, limit=basis, threads=args.threads)
    result = {"count": count}
    lines = [str(count)]
    if args.list:
        listing = [indices_from_mask(mask) for mask in masks]
        result["bases"] = listing
        lines.extend(",".join(map(str, basis_set)) for basis_set in listing)
    return result, lines, 0


def _cmd_tutte(args):
    sweep, _ = _limits(args)
    if (args.mu is None) == (args.kpq is None):
        raise ValueError("exactly one of --mu and --kpq is required")
    if args.mu is not None:
        matroid = cyclo.cyclotomic_matroid(args.mu)
    else:
        p, q = args.kpq
        matroid = bipartite.kpq_matroid(p, q)
    poly = matroid.tutte(limit=sweep, threads=args.threads)
    return {"polynomial": poly.text()}, None, 0


def _cmd_verify_duality(args):
    sweep, basis = _limits(args)
    report = dual.verify_theorem1(
        args.n, exhaustive_limit=sweep, basis_limit=basis, threads=args.threads
    )
    return _report_payload(report), None, 0 if report.passed else 1


def _cmd_bolker(args):
    return {"value": complexes.bolker_bound(args.sizes)}, None, 0


def _cmd_adin(args):
    _, basis = _limits(args)
    total = complexes.adin_sum(args.sizes, limit=basis, threads=args.threads)
    bound = complexes.bolker_bound(args.sizes)
    result = {"adin_sum": total, "bolker_bound": bound, "equal": total == bound}
    return result, None, 0 if total == bound else 1


def _cmd_star_tree(args):
    mask = complexes.star_tree(args.sizes)
    complex_ = complexes.JoinComplex(args.sizes)
    facets = [list(complex_.facets[i]) for i in indices_from_mask(mask)]
    try:
        summary = complexes.tree_homology(complex_, mask)
        is_basis = True
        torsion = summary.torsion_order
    except ValueError:
        is_basis = False
        torsion = None
    result = {
        "facets": facets,
        "size": len(facets),
        "is_basis": is_basis,
        "torsion_order": torsion,
    }
    lines = [
        f"size {len(facets)}",
        f"is_basis {str(is_basis).lower()}",
        f"torsion_order {torsion}",
    ] + [",".join(map(str, f)) for f in facets]
    return result, lines, 0 if is_basis and torsion == 1 else 1


def _cmd_coboundary(args):
    sweep, _ = _limits(args)
    poly = bipartite.coboundary_polynomial(args.p, args.q, limit=sweep, threads=args.threads)
    return {"polynomial": poly.text(("q", "t"))}, None, 0


def _cmd_chromatic(args):
    sweep, _ = _limits(args)
    poly = bipartite.chromatic_polynomial(args.p, args.q, limit=sweep, threads=args.threads)
    return {"polynomial": poly.text(("q",))}, None, 0


def _cmd_verify_prop4(args):
    sweep, _ = _limits(args)
    q_max = args.qmax if args.qmax is not None else args.p1 + args.p2 + 1
    report = bipartite.verify_prop4(
        (args.p1, args.p2), q_max, limit=sweep, threads=args.threads
    )
    return _report_payload(report), None, 0 if report.passed else 1


def _cmd_indep_gf(args):
    sweep, _ = _limits(args)
    factors = cyclo.factorize(args.n)
    if len(factors) != 2:
        raise ValueError("indep-gf requires n with exactly two prime factors")
    (p1, m1), (p2, m2) = factors
    t = p1 ** (m1 - 1) * p2 ** (m2 - 1)
    base = bipartite.indep_gf_from_egf(p1, p2)
    predicted = base**t
    result = {
        "polynomial": predicted.text(),
        "base_polynomial": base.text(),
        "power": t,
    }
    code = 0
    if args.n <= sweep:
        report = bipartite.corollary5_check(args.n, limit=sweep, threads=args.threads)
        result["verified"] = report.passed
        if not report.passed:
            result["witness"] = report.witness
            code = 1
    else:
        result["verified"] = None
    return result, None, code


def _cmd_forest_enum(args):
    limit = args.limit_bits if args.limit_bits is not None else bipartite.DEFAULT_FOREST_LIMIT
    if args.restricted is not None:
        poly = bipartite.restricted_forest_enumerator(args.p, args.restricted, limit=limit)
    else:
        poly = bipartite.forest_enumerator(args.p, args.q, limit=limit)
    names = [f"x{i+1}" for i in range(args.p)]
    return {"polynomial": poly.text(names)}, None, 0


def _cmd_verify_prop6(args):
    limit = args.limit_bits if args.limit_bits is not None else bipartite.DEFAULT_FOREST_LIMIT
    report = bipartite.verify_prop6(args.p, args.q, limit=limit)
    return _report_payload(report), None, 0 if report.passed else 1


def _cmd_corollary2(args):
    _, basis = _limits(args)
    bound, predicted = dual.corollary2_bound(args.n)
    result = {"bound": bound, "equality_predicted": predicted}
    code = 0
    if args.n <= basis:
        count = dual.qbasis_count(args.n, limit=basis, threads=args.threads)
        respected = count <= bound
        observed = count == bound
        consistent = respected and (observed == predicted)
        result.update(
            {
                "qbasis_count": count,
                "bound_respected": respected,
                "equality_observed": observed,
                "consistent": consistent,
            }
        )
        if not consistent:
            code = 1
    return result, None, code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclomat",
        description="Exact constructions and verifications for matroids of "
        "roots of unity and simplicial join complexes.",
    )
    parser.add_argument("--json", action="store_true", help="emit a single JSON object")
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker processes for sweeps (default: all cores; 1 = fully serial)",
    )
    parser.add_argument(
        "--limit-bits",
        type=int,
        default=None,
        help="override the enumeration limits (ground-set size for sweeps "
        "and basis listings)",
    )
    parser.add_argument(
        "--list", action="store_true", help="emit basis lists where applicable"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = add("phi", _cmd_phi, help="Euler phi of n")
    p.add_argument("n", type=int)

    p = add("cyclo-poly", _cmd_cyclo_poly, help="cyclotomic polynomial of order n")
    p.add_argument("n", type=int)

    p = add("mu-matrix", _cmd_mu_matrix, help="representation matrix of the order-n matroid")
    p.add_argument("n", type=int)

    p = add("bases", _cmd_bases, help="number of spanning subsets of size phi(n)")
    p.add_argument("n", type=int)

    p = add("tutte", _cmd_tutte, help="Tutte polynomial")
    p.add_argument("--mu", type=int, help="order of the root-of-unity matroid")
    p.add_argument("--kpq", nargs=2, type=int, metavar=("P", "Q"), help="complete bipartite part sizes")

    p = add("verify-duality", _cmd_verify_duality, help="check the duality theorem for order n")
    p.add_argument("n", type=int)

    p = add("bolker", _cmd_bolker, help="basis-count upper bound for a join complex")
    p.add_argument("sizes", nargs="+", type=int)

    p = add("adin", _cmd_adin, help="torsion-weighted basis count of a join complex")
    p.add_argument("sizes", nargs="+", type=int)

    p = add("star-tree", _cmd_star_tree, help="star-union tree for distinct prime parts")
    p.add_argument("sizes", nargs="+", type=int)

    p = add("coboundary", _cmd_coboundary, help="coboundary polynomial of a complete bipartite graph")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = add("chromatic", _cmd_chromatic, help="chromatic polynomial of a complete bipartite graph")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = add("verify-prop4", _cmd_verify_prop4, help="check the coboundary series identity")
    p.add_argument("p1", type=int)
    p.add_argument("p2", type=int)
    p.add_argument("--qmax", type=int, default=None)

    p = add("indep-gf", _cmd_indep_gf, help="independence generating function via the log series")
    p.add_argument("n", type=int)

    p = add("forest-enum", _cmd_forest_enum, help="forest enumerator of a complete bipartite graph")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--restricted", type=int, default=None, metavar="J",
                   help="restricted enumerator with all w-degrees at least 2")

    p = add("verify-prop6", _cmd_verify_prop6, help="check the forest-enumerator factorization")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)

    p = add("corollary2", _cmd_corollary2, help="basis-count bound and equality prediction")
    p.add_argument("n", type=int)

    return parser


def _render_text(result: dict, lines: list[str] | None) -> str:
    if lines is not None:
        return "\n".join(lines)
    keys = list(result)
    if keys == ["value"]:
        return str(result["value"])
    if keys == ["polynomial"]:
        return result["polynomial"]
    out = []
    for key in keys:
        out.append(f"{key} {json.dumps(result[key], sort_keys=True)}")
    return "\n".join(out)


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is None:
        args.threads = cpu_count()
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    started = time.monotonic()
    try:
        result, lines, code = args.handler(args)
    except EnumerationLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = int((time.monotonic() - started) * 1000)
    print(f"elapsed_ms={elapsed_ms}", file=sys.stderr)
    if args.json:
        # echo only the semantic arguments: worker count and output format
        # must not leak into standard output, which is byte-identical
        # across runs and worker counts
        echo = {
            k: v
            for k, v in vars(args).items()
            if k not in ("handler", "json", "threads", "verb")
        }
        envelope = {
            "v": 1,
            "command": {"verb": args.verb, "args": echo},
            "result": result,
        }
        print(json.dumps(envelope, sort_keys=True))
    else:
        print(_render_text(result, lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
