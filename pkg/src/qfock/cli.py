"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 unsupported regime (non-integral
shift vector), 4 internal invariant violation (bar cycle, fuel exhaustion).
Identical invocations produce byte-identical output; the optional cache
directory (QFOCK_CACHE_DIR) only skips recomputation, never changes bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .abacus import degree, from_pair, monomial_from_text
from .avalue import a_table, height, m_vector
from .canonical import CanonicalBasis, decomposition_matrix, verify_unitriangular
from .crystal import crystal_graph, crystal_to_dot, crystal_to_json, flotw_predicate, uglov_set
from .errors import InvariantError, UnsupportedRegimeError
from .fock import fock_to_json
from .partitions import (
    charge_from_text,
    is_split_semisimple,
    mp_from_text,
    mp_to_text,
    multipartitions,
    rank,
)
from .wedge import WedgeEngine, vector_to_json


def _jdump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, args):
    if getattr(args, "json_envelope", False):
        payload = {"command": args.command, "data": text}
        sys.stdout.write(_jdump(payload))
    else:
        sys.stdout.write(text)


def _parse_charge(args, l=None):
    charge = charge_from_text(args.charge)
    if l is not None and len(charge) != l:
        raise ValueError("charge %s has %d entries, expected l=%d" % (args.charge, len(charge), l))
    return charge


def _ambient(args):
    """(e, l, charge) with l defaulted from the charge length."""
    charge = charge_from_text(args.charge)
    l = getattr(args, "l", None) or len(charge)
    if args.e < 2 or l < 1:
        raise ValueError("need e >= 2 and l >= 1")
    if len(charge) != l:
        raise ValueError("charge %s has %d entries, expected l=%d" % (args.charge, len(charge), l))
    return args.e, l, charge


def _wedge_vector_text(vec) -> str:
    lines = []
    for u, c in sorted(vec.items(), key=lambda kv: (kv[0].s, kv[0].prefix)):
        lines.append("(%s) * [%s]" % (c, u.to_text()))
    return "\n".join(lines) + "\n" if lines else "0\n"


# -- subcommands ------------------------------------------------------------------


def cmd_semisimple(args):
    e, l, charge = _ambient(args)
    _emit("true\n" if is_split_semisimple(e, charge, args.rank) else "false\n", args)


def cmd_uglov_set(args):
    e, l, charge = _ambient(args)
    labels = sorted(uglov_set(e, l, charge, args.rank))
    if args.format == "json":
        _emit(_jdump([mp_to_text(mp) for mp in labels]), args)
    else:
        _emit("".join(mp_to_text(mp) + "\n" for mp in labels), args)


def cmd_flotw_check(args):
    e, l, charge = _ambient(args)
    mp = mp_from_text(args.mp)
    if len(mp) != l:
        raise ValueError("multipartition %r has %d components, expected %d" % (args.mp, len(mp), l))
    _emit("true\n" if flotw_predicate(mp, e, charge) else "false\n", args)


def cmd_crystal(args):
    e, l, charge = _ambient(args)
    graph = crystal_graph(e, l, charge, args.rank)
    if args.format == "dot":
        _emit(crystal_to_dot(graph, charge) + "\n", args)
    else:
        _emit(_jdump(crystal_to_json(graph)), args)


def cmd_avalue(args):
    e, l, charge = _ambient(args)
    labels = multipartitions(l, args.rank)
    h = args.height
    if h is None:
        h = max((height(mp) for mp in labels), default=0) + 1
    vals = a_table(e, l, charge, labels, h=h)
    calibration = min(labels, key=lambda mp: (vals[mp], mp_to_text(mp)))
    base = vals[calibration]
    table = sorted(((vals[mp] - base, mp_to_text(mp)) for mp in labels))
    if args.format == "json":
        _emit(_jdump({
            "calibration": mp_to_text(calibration),
            "height": h,
            "alpha": m_vector(e, l, charge).alpha,
            "values": [{"label": t, "a": v} for v, t in table],
        }), args)
    else:
        lines = ["label,a_value"]
        lines += ["%s,%d" % (t.replace(",", " "), v) for v, t in table]
        lines.append("# calibration: %s -> 0 at height %d" % (mp_to_text(calibration), h))
        _emit("\n".join(lines) + "\n", args)


def cmd_straighten(args):
    e = args.e
    l = args.l
    engine = WedgeEngine(e, l)
    indices = [int(k) for k in args.indices.split(",")] if args.indices else []
    vec = engine.straighten(indices, args.s)
    if args.format == "json":
        _emit(_jdump(vector_to_json(vec)), args)
    else:
        _emit(_wedge_vector_text(vec), args)


def cmd_bar(args):
    engine = WedgeEngine(args.e, args.l)
    u = monomial_from_text(args.monomial)
    if degree(u) > args.max_degree:
        raise ValueError(
            "monomial degree %d exceeds --max-degree %d; raise the cap to proceed"
            % (degree(u), args.max_degree)
        )
    vec = engine.bar(u, r=args.r)
    if args.format == "json":
        _emit(_jdump(vector_to_json(vec)), args)
    else:
        _emit(_wedge_vector_text(vec), args)


def cmd_canonical(args):
    e, l, charge = _ambient(args)
    mp = mp_from_text(args.mp)
    u0 = from_pair(mp, charge, e, l)
    if degree(u0) > args.max_degree:
        raise ValueError(
            "label has wedge degree %d, exceeding --max-degree %d; raise the cap to proceed"
            % (degree(u0), args.max_degree)
        )
    basis = CanonicalBasis(e, l)
    vec = basis.element_for_label(mp, charge)
    records = fock_to_json(vec)
    if not args.keep_q:
        for record in records:
            record["coefficient_at_1"] = sum(c for _exp, c in record.pop("coefficient"))
    _emit(_jdump(records), args)


def _decomp_payload(args, e, l, charge):
    cache_dir = os.environ.get("QFOCK_CACHE_DIR")
    cache_path = None
    if cache_dir:
        name = "decomp-e%d-l%d-s%s-n%d.json" % (e, l, "_".join(map(str, charge)), args.rank)
        cache_path = os.path.join(cache_dir, name)
        if os.path.exists(cache_path):
            with open(cache_path) as fh:
                return json.load(fh)
    mat = decomposition_matrix(e, l, charge, args.rank)
    payload = mat.to_json(keep_q=True)
    payload["unitriangular"] = verify_unitriangular(mat)
    if cache_path:
        os.makedirs(cache_dir, exist_ok=True)
        with open(cache_path, "w") as fh:
            json.dump(payload, fh, sort_keys=True)
    return payload


def _payload_csv(payload) -> str:
    lines = ["row,column,entry"]
    for row, col, v in payload["triples"]:
        lines.append("%s,%s,%d" % (row.replace(",", " "), col.replace(",", " "), v))
    return "\n".join(lines) + "\n"


def _payload_latex(payload) -> str:
    entries = {(r, c): v for r, c, v in payload["triples"]}
    lines = [r"\begin{array}{l|%s}" % ("c" * len(payload["columns"]))]
    for row in payload["rows"]:
        cells = [str(entries.get((row, col), 0)) if entries.get((row, col)) else "."
                 for col in payload["columns"]]
        lines.append("%s & %s \\\\" % (row, " & ".join(cells)))
    lines.append(r"\end{array}")
    return "\n".join(lines) + "\n"


def cmd_decomp(args):
    e, l, charge = _ambient(args)
    if is_split_semisimple(e, charge, args.rank):
        sys.stderr.write(
            "warning: these parameters are split semisimple; the matrix is trivial\n"
        )
    deg = max((degree(from_pair(mp, charge, e, l)) for mp in multipartitions(l, args.rank)),
              default=0)
    if deg > args.max_degree:
        raise ValueError(
            "rank %d at this charge reaches wedge degree %d, exceeding --max-degree %d; "
            "raise the cap to proceed" % (args.rank, deg, args.max_degree)
        )
    payload = _decomp_payload(args, e, l, charge)
    if payload["checks"]["foreign_support"]:
        raise InvariantError(
            "Uglov columns acquired foreign support: %s" % payload["checks"]["foreign_support"]
        )
    if not args.keep_q:
        payload = dict(payload)
        payload.pop("q_triples", None)
    if args.format == "csv":
        _emit(_payload_csv(payload), args)
    elif args.format == "latex":
        _emit(_payload_latex(payload), args)
    else:
        _emit(_jdump(payload), args)


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfock",
        description="Canonical bases of higher-level q-deformed Fock spaces and "
                    "Ariki-Koike decomposition matrices, in exact arithmetic.",
    )
    parser.add_argument("--json", dest="json_envelope", action="store_true",
                        help="wrap any output in a JSON envelope")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, charge=True, rank=True, l=False):
        p.add_argument("--e", type=int, required=True, help="quantum characteristic, >= 2")
        if l:
            p.add_argument("--l", type=int, default=None, help="level (default: charge length)")
        if charge:
            p.add_argument("--charge", required=True, help="comma-separated integers s_1,...,s_l")
        if rank:
            p.add_argument("--rank", type=int, required=True, help="number of boxes n >= 0")

    p = sub.add_parser("semisimple", help="Ariki's split-semisimplicity criterion")
    common(p)
    p.set_defaults(func=cmd_semisimple)

    p = sub.add_parser("uglov-set", help="rank-n layer of the crystal component")
    common(p, l=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_uglov_set)

    p = sub.add_parser("flotw-check", help="membership test for ascending charges in [0, e)")
    common(p, rank=False, l=True)
    p.add_argument("--mp", required=True, help="multipartition, e.g. '2,1|-'")
    p.set_defaults(func=cmd_flotw_check)

    p = sub.add_parser("crystal", help="crystal graph on ranks <= n with component marking")
    common(p, l=True)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_crystal)

    p = sub.add_parser("avalue", help="calibrated a-value table for all rank-n labels")
    common(p, l=True)
    p.add_argument("--height", type=int, default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_avalue)

    p = sub.add_parser("straighten", help="straighten a raw wedge against the charge-s tail")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--s", type=int, required=True, help="total charge of the ambient space")
    p.add_argument("--indices", required=True, help="comma-separated integers")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("bar", help="bar involution of an ordered monomial")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--monomial", required=True, help="e.g. 's=3; k=15,12,8'")
    p.add_argument("--r", type=int, default=None, help="reversal length (default: the degree)")
    p.add_argument("--max-degree", type=int, default=64)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_bar)

    p = sub.add_parser("canonical", help="canonical basis element of a label")
    common(p, rank=False, l=True)
    p.add_argument("--mp", required=True)
    p.add_argument("--keep-q", action="store_true", help="keep q-polynomials")
    p.add_argument("--max-degree", type=int, default=64)
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("decomp", help="decomposition matrix at q = 1")
    common(p, l=True)
    p.add_argument("--format", choices=["csv", "latex", "json"], default="csv")
    p.add_argument("--keep-q", action="store_true")
    p.add_argument("--max-degree", type=int, default=64)
    p.set_defaults(func=cmd_decomp)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UnsupportedRegimeError as exc:
        sys.stderr.write("unsupported regime: %s\n" % exc)
        return 3
    except InvariantError as exc:
        sys.stderr.write("internal invariant violation: %s\n" % exc)
        return 4
    except (ValueError, IndexError, KeyError) as exc:
        sys.stderr.write("invalid input: %s\n" % exc)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
