"""Command line front end.

Subcommands: classify, bases, character, oracle-mult, oracle-probe,
validate-grid.  All reports are available as JSON (schema tag "lsb/1").

Exit codes: 0 success, 1 usage or parse error, 2 character-formula hypothesis
violation, 3 unknown verdict under --strict, 4 oracle cap exceeded,
5 validation grid found disagreements.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from lsbound import basegraph, classifier, rootdata
from lsbound.characters import HypothesisError, typical_character
from lsbound.oracle import (OracleCapError, boundedness_probe, shapovalov_rank,
                            truncated_character)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_UNKNOWN = 3
EXIT_CAPPED = 4
EXIT_DISAGREE = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser():
    p = _Parser(prog="lsbound",
                description="Boundedness of simple highest weight modules "
                            "over basic classical Lie superalgebras")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, weight=True, base=True, depth=None):
        sp.add_argument("--algebra", required=True,
                        help='e.g. "osp(5|4)", "sp(4)", "gl(2|3)", "D(2,1,1/2)"')
        sp.add_argument("--form-convention",
                        choices=("paper", "deltaplus", "deltaminus"),
                        default="paper",
                        help="sign of (delta, delta) where configurable")
        if weight:
            sp.add_argument("--weight", required=True,
                            help='coordinates "x1,..,xs|y1,..,yn"')
            sp.add_argument("--weight-is",
                            choices=("lambda", "lambda-plus-rho"),
                            default="lambda")
        if base:
            sp.add_argument("--base", default="default",
                            help='"default", "distinguished:N", or explicit '
                                 'simple roots "d1-d2;d2-e1;..."')
        if depth is not None:
            sp.add_argument("--depth", type=int, default=depth)
        sp.add_argument("--json", action="store_true", dest="as_json")

    sp = sub.add_parser("classify", help="boundedness verdict")
    common(sp, depth=8)
    sp.add_argument("--strict", action="store_true",
                    help="exit 3 when the verdict is unknown")

    sp = sub.add_parser("bases", help="bases and nonisotropic components")
    common(sp, weight=False, base=False)
    sp.add_argument("--distinguished", action="store_true")

    sp = sub.add_parser("character", help="truncated formal character")
    common(sp, depth=6)
    sp.add_argument("--method", choices=("oracle", "product"), default="oracle",
                    help="direct rank oracle, or the strongly typical product")

    sp = sub.add_parser("oracle-mult", help="one weight multiplicity report")
    common(sp)
    sp.add_argument("--mu", required=True,
                    help="offset from the highest weight, weight coordinates")

    sp = sub.add_parser("oracle-probe", help="boundedness evidence probe")
    common(sp)
    sp.add_argument("--depths", default="6,8,10")
    sp.add_argument("--strict", action="store_true")

    sp = sub.add_parser("validate-grid",
                        help="compare the classifier against the oracle on a "
                             "grid of shifted weights")
    common(sp, weight=False, base=False)
    sp.add_argument("--values", default="-2,-3/2,-1,-1/2,0,1/2,1,3/2,2",
                    help="grid values for every coordinate of the shifted weight")
    sp.add_argument("--depths", default="6,8,10")
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    return p


def _algebra(args):
    if args.form_convention == "paper":
        return rootdata.parse_algebra(args.algebra)
    sign = 1 if args.form_convention == "deltaplus" else -1
    return rootdata.parse_algebra(args.algebra, delta_sign=sign)


def _base(alg, text):
    if text == "default":
        return basegraph.default_base(alg)
    if text.startswith("distinguished:"):
        idx = int(text.split(":", 1)[1])
        dist = basegraph.distinguished_bases(alg)
        if not 0 <= idx < len(dist):
            raise rootdata.AlgebraError(
                f"{alg.display} has {len(dist)} distinguished bases")
        return dist[idx]
    roots = [rootdata.parse_root_expr(alg, t) for t in text.split(";") if t.strip()]
    return basegraph.find_base(alg, [r.coords for r in roots])


def _weight(alg, base, args):
    lam = rootdata.parse_weight(alg, args.weight)
    if args.weight_is == "lambda-plus-rho":
        rho = rootdata.rho_vectors(alg, base.simples)[0]
        lam = rootdata.wsub(lam, rho)
    return lam


def _emit(args, data, text_lines):
    if args.as_json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_classify(args):
    alg = _algebra(args)
    base = _base(alg, args.base)
    lam = _weight(alg, base, args)
    verdict = classifier.classify(alg, base, lam, depth=args.depth)
    data = verdict.to_json(alg)
    data["weight"] = [str(c) for c in lam]
    lines = [
        f"algebra {alg.display}  weight {rootdata.format_weight(alg, lam)}",
        f"bounded: {verdict.bounded}  (decided by {verdict.decided_by})",
        f"strongly typical: {verdict.strongly_typical}",
        f"degree bound: {verdict.degree_bound}",
    ]
    for cv in verdict.components:
        comp = cv.component
        kind = comp.kind if hasattr(comp, "kind") else str(comp)
        lines.append(f"  component {kind}: {cv.status}  [{cv.witness}]")
    _emit(args, data, lines)
    if args.strict and verdict.bounded == "unknown":
        return EXIT_UNKNOWN
    return EXIT_OK


def _cmd_bases(args):
    alg = _algebra(args)
    bases = (basegraph.distinguished_bases(alg) if args.distinguished
             else basegraph.all_bases(alg))
    roots, comps = basegraph.nonisotropic_components(alg)
    data = {
        "schema": "lsb/1",
        "algebra": alg.display,
        "bases": [{
            "simples": [rootdata.format_vector(alg, r.coords) for r in b.simples],
            "isotropicCount": b.isotropic_count,
            "distinguished": b.distinguished,
        } for b in bases],
        "nonisotropicSimples": [rootdata.format_vector(alg, r.coords)
                                for r in sorted(roots, key=lambda r: r.coords)],
        "components": [{
            "kind": c.kind,
            "rank": c.rank,
            "block": c.block,
            "simples": [rootdata.format_vector(alg, r.coords) for r in c.simples],
            "hostBase": [rootdata.format_vector(alg, r.coords)
                         for r in c.host_base.simples],
        } for c in comps],
    }
    lines = [f"algebra {alg.display}: {len(bases)} "
             f"{'distinguished ' if args.distinguished else ''}bases"]
    for i, b in enumerate(bases):
        tag = " [distinguished]" if b.distinguished else ""
        lines.append(f"  base {i}{tag} {basegraph.format_base(alg, b)}")
    lines.append("nonisotropic components:")
    for c in comps:
        simp = "{" + ", ".join(rootdata.format_vector(alg, r.coords)
                               for r in c.simples) + "}"
        lines.append(f"  kind {c.kind} rank {c.rank} {simp} "
                     f"host {basegraph.format_base(alg, c.host_base)}")
    _emit(args, data, lines)
    return EXIT_OK


def _cmd_character(args):
    alg = _algebra(args)
    base = _base(alg, args.base)
    lam = _weight(alg, base, args)
    if args.method == "product":
        ch = typical_character(alg, base, lam, args.depth)
    else:
        ch = truncated_character(alg, base, lam, args.depth)
    data = ch.to_json()
    lines = [f"character of {alg.display} at "
             f"{rootdata.format_weight(alg, lam)} to depth {args.depth} "
             f"({args.method})"]
    for off, mult in sorted(ch.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        lines.append(f"  offset {list(off)} height {sum(off)}: {mult}")
    _emit(args, data, lines)
    return EXIT_OK


def _cmd_oracle_mult(args):
    alg = _algebra(args)
    base = _base(alg, args.base)
    lam = _weight(alg, base, args)
    mu = rootdata.parse_weight(alg, args.mu)
    rep = shapovalov_rank(alg, base, lam, mu)
    lines = [
        f"multiplicity of L({rootdata.format_weight(alg, lam)}) at offset "
        f"{rootdata.format_weight(alg, mu)}:",
        f"  Verma dimension {rep.dimension}, rank {rep.rank}, "
        f"matrix hash {rep.matrix_hash}",
    ]
    _emit(args, rep.to_json(), lines)
    return EXIT_OK


def _cmd_oracle_probe(args):
    alg = _algebra(args)
    base = _base(alg, args.base)
    lam = _weight(alg, base, args)
    depths = tuple(int(t) for t in args.depths.split(","))
    pr = boundedness_probe(alg, base, lam, depths)
    lines = [f"probe {alg.display} at {rootdata.format_weight(alg, lam)}: "
             f"depths {pr.depths} max multiplicities {pr.max_mults} -> {pr.status}"]
    _emit(args, pr.to_json(), lines)
    if args.strict and pr.status == "unknown":
        return EXIT_UNKNOWN
    return EXIT_OK


def _grid_point(spec, coords_txt, depths):
    """Worker for validate-grid; module level so process pools can pickle it."""
    alg = rootdata.parse_algebra(spec)
    base = basegraph.default_base(alg)
    shifted = tuple(Fraction(t) for t in coords_txt)
    rho = rootdata.rho_vectors(alg, base.simples)[0]
    lam = rootdata.wsub(shifted, rho)
    verdict = classifier.classify(alg, base, lam)
    probe = boundedness_probe(alg, base, lam, depths)
    agree = (verdict.bounded == "yes" and probe.status == "oracleBounded") or \
            (verdict.bounded == "no" and probe.status == "oracleUnboundedEvidence")
    return coords_txt, verdict.bounded, probe.status, probe.max_mults, agree


def _cmd_validate_grid(args):
    import itertools

    alg = _algebra(args)
    values = [t.strip() for t in args.values.split(",") if t.strip()]
    depths = tuple(int(t) for t in args.depths.split(","))
    points = [tuple(p) for p in itertools.product(values, repeat=alg.dim_h)]
    if len(points) > 4096:
        raise rootdata.AlgebraError(
            f"grid too large ({len(points)} points); trim --values")
    jobs = max(1, args.jobs)
    if jobs > 1 and len(points) > 8:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_grid_point, [alg.display] * len(points),
                                 points, [depths] * len(points),
                                 chunksize=max(1, len(points) // (4 * jobs))))
    else:
        rows = [_grid_point(alg.display, p, depths) for p in points]
    disagree = [r for r in rows if not r[4]]
    data = {
        "schema": "lsb/1",
        "algebra": alg.display,
        "depths": list(depths),
        "points": len(rows),
        "disagreements": len(disagree),
        "rows": [{
            "shiftedWeight": list(r[0]), "classifier": r[1], "probe": r[2],
            "maxMultiplicities": list(r[3]), "agree": r[4],
        } for r in rows],
    }
    lines = [f"validate {alg.display} on {len(rows)} shifted weights, "
             f"depths {depths}"]
    for r in (rows if len(rows) <= 50 else disagree):
        mark = "ok " if r[4] else "FAIL"
        lines.append(f"  {mark} {','.join(r[0])}: classifier={r[1]} "
                     f"probe={r[2]} max={r[3]}")
    lines.append(f"disagreements: {len(disagree)}")
    _emit(args, data, lines)
    return EXIT_DISAGREE if disagree else EXIT_OK


_COMMANDS = {
    "classify": _cmd_classify,
    "bases": _cmd_bases,
    "character": _cmd_character,
    "oracle-mult": _cmd_oracle_mult,
    "oracle-probe": _cmd_oracle_probe,
    "validate-grid": _cmd_validate_grid,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except HypothesisError as exc:
        print(f"hypothesis violation ({exc.which}): {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except OracleCapError as exc:
        extra = f" (estimated cost {exc.estimate})" if exc.estimate else ""
        print(f"oracle cap exceeded: {exc}{extra}", file=sys.stderr)
        return EXIT_CAPPED
    except rootdata.AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
