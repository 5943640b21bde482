"""Command-line front end.

Every invocation is deterministic: the same arguments produce byte-identical
output.  Exit codes: 0 on success, 1 on domain errors (note that a violated
bound is a reported verdict, not an error), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, catalog, families, fidelity, gf, params
from .known_codes import NAMED_CODES
from .params import AsymCodeParams, CodeAlgebraError, CodeParams
from .pauli import build_decoder, correctable_counts, oracle_channel_fidelity

_CURVES = {
    "513": fidelity.CurveId.FE_513,
    "fe-513": fidelity.CurveId.FE_513,
    "cqc25": fidelity.CurveId.FE_CQC25,
    "eacqc-bowen": fidelity.CurveId.FE_EACQC_BOWEN,
    "eacqc-rep": fidelity.CurveId.FE_EACQC_REP,
    "unencoded": fidelity.CurveId.FE_UNENCODED,
    "fc-513": fidelity.CurveId.FC_513,
    "fc-bowen": fidelity.CurveId.FC_BOWEN,
    "fc-rep": fidelity.CurveId.FC_REP,
}


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _code_json(p: CodeParams | AsymCodeParams) -> dict:
    obj = {"n": p.n, "k": p.k, "c": p.c, "q": p.q, "net": p.net_transmission,
           "d_is_lower_bound": p.d_is_lower_bound, "text": p.render()}
    if isinstance(p, AsymCodeParams):
        obj["d_z"], obj["d_x"] = p.d_z, p.d_x
    else:
        obj["d"] = p.d
    return obj


def _verdict_json(v: bounds.BoundVerdict) -> dict:
    return {"lhs": str(v.lhs), "rhs": str(v.rhs),
            "satisfied": v.satisfied, "margin_log2": v.margin_log2}


def _verdict_text(v: bounds.BoundVerdict) -> str:
    word = "SATISFIED" if v.satisfied else "VIOLATED"
    return f"lhs={v.lhs} rhs={v.rhs} verdict={word}"


def _cmd_concat(args) -> str:
    outer = params.parse_code(args.outer)
    if "x" in args.inner.lower() or "+" in args.inner:
        mix = params.parse_mixed(args.inner)
        if not isinstance(outer, CodeParams):
            raise CodeAlgebraError("mixed concatenation takes a symmetric outer code")
        result = params.concat_mixed(mix, outer)
    else:
        inner = params.parse_code(args.inner)
        if isinstance(inner, AsymCodeParams) or isinstance(outer, AsymCodeParams):
            if not (isinstance(inner, AsymCodeParams) and isinstance(outer, AsymCodeParams)):
                raise CodeAlgebraError("asymmetric concatenation needs two asymmetric codes")
            result = params.concat_asym(inner, outer, allow_any_shape=args.any_shape)
        else:
            result = params.concat(inner, outer)
    if args.format == "json":
        return json.dumps(_code_json(result))
    return f"{result.render()} net={result.net_transmission}"


def _cmd_bound(args) -> str:
    if args.kind == "rate":
        if args.delta is None:
            raise CodeAlgebraError("rate bound needs --delta")
        value = bounds.asymptotic_rate_bound(args.delta, args.ebit_fraction)
        if args.format == "json":
            return json.dumps({"delta": args.delta, "c_over_n": args.ebit_fraction,
                               "rate_bound": value})
        return f"rate_bound={_fmt(value)}"
    if args.code is None:
        raise CodeAlgebraError(f"{args.kind} bound check needs --code")
    code = params.parse_code(args.code)
    if args.kind == "hamming":
        if not isinstance(code, CodeParams):
            raise CodeAlgebraError("symmetric bound check takes an [[n,k,d;c]] code")
        verdict = bounds.ea_hamming_check(code)
    else:
        if not isinstance(code, AsymCodeParams):
            raise CodeAlgebraError("asymmetric bound check takes an [[n,k,dz/dx;c]] code")
        verdict = bounds.asym_hamming_check(code)
    if args.format == "json":
        return json.dumps({"code": code.render(), **_verdict_json(verdict)})
    return _verdict_text(verdict)


def _cmd_family(args) -> str:
    fam = families.FamilyId(args.id)
    if args.scan:
        lo, hi = (int(tok) for tok in args.scan.split(":"))
        results = families.scan_violations(fam, (lo, hi), n1=args.n1)
        if args.format == "json":
            rows = []
            for n2, verdict in results:
                member = families.build_family(fam, n2, n1=args.n1)
                rows.append({"n2": n2, "code": member.result.render(),
                             "claimed": families.violation_claimed(fam, n2, args.n1),
                             **_verdict_json(verdict)})
            return json.dumps(rows)
        lines = []
        for n2, verdict in results:
            member = families.build_family(fam, n2, n1=args.n1)
            word = "SATISFIED" if verdict.satisfied else "VIOLATED"
            lines.append(f"{n2}\t{member.result.render()}\t{verdict.lhs}\t{verdict.rhs}\t{word}")
        return "\n".join(lines)
    if args.n2 is None:
        raise CodeAlgebraError("family needs --n2 or --scan")
    member = families.build_family(fam, args.n2, n1=args.n1)
    verdict = families.check_member(member)
    if args.format == "json":
        return json.dumps({
            "inner": member.inner.render(), "outer": member.outer.render(),
            "result": member.result.render(),
            "claimed": families.violation_claimed(fam, args.n2, args.n1),
            **_verdict_json(verdict)})
    word = "SATISFIED" if verdict.satisfied else "VIOLATED"
    return (f"inner={member.inner.render()} outer={member.outer.render()} "
            f"result={member.result.render()} lhs={verdict.lhs} rhs={verdict.rhs} "
            f"verdict={word}")


def _read_matrix(path: str, field: gf.GF) -> gf.Matrix:
    with open(path, encoding="utf-8") as fh:
        return gf.Matrix.from_text(field, fh.read())


def _require(args, names: list[str]) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names
               if getattr(args, name) is None]
    if missing:
        raise CodeAlgebraError(f"{args.kind} construction needs {', '.join(missing)}")


def _cmd_construct(args) -> str:
    if args.kind == "css":
        _require(args, ["k1", "d1", "k2", "d2", "h1", "h2"])
        field = gf.GF.of_order(args.q)
        h1 = _read_matrix(args.h1, field)
        h2 = _read_matrix(args.h2, field)
        result = gf.css_construct((args.n, args.k1, args.d1), (args.n, args.k2, args.d2), h1, h2)
        payload = _code_json(result)
    elif args.kind == "hermitian":
        _require(args, ["k", "d", "h", "q2"])
        field = gf.GF.of_order(args.q2)
        h = _read_matrix(args.h, field)
        result = gf.hermitian_construct((args.n, args.k, args.d), h)
        payload = _code_json(result)
    else:  # eaqmds
        _require(args, ["k1", "c"])
        built = gf.eaqmds_params(args.n, args.k1, args.c, args.q)
        result = built.params
        payload = {**_code_json(result), "singleton_ok": built.singleton_ok,
                   "catalytic_range": built.catalytic_range}
    if args.format == "json":
        return json.dumps(payload)
    return f"{result.render()} net={result.net_transmission}"


def _cmd_oracle(args) -> str:
    named = NAMED_CODES[args.code]
    pref = named.decoder_ebit_preference if args.ebit_preference is None else args.ebit_preference
    decoder = build_decoder(named.spec, ebit_preference=pref)
    table = correctable_counts(named.spec, decoder)
    if args.p_a is not None:
        p_b = args.p_b if args.p_b is not None else args.p_a
        value = oracle_channel_fidelity(table, args.p_a, p_b)
        if args.format == "json":
            return json.dumps({"code": args.code, "p_a": args.p_a, "p_b": p_b,
                               "channel_fidelity": value})
        return f"channel_fidelity={_fmt(value)}"
    return table.to_json()


def _cmd_fidelity(args) -> str:
    curve_ids = [_CURVES[name.strip()] for name in args.curves.split(",")]
    rows = fidelity.sample_curves(curve_ids, args.ratio, args.p_min, args.p_max, args.step)
    return fidelity.curves_to_csv(rows).rstrip("\n")


def _cmd_threshold(args) -> str:
    curve = _CURVES[args.curve]
    value = fidelity.find_threshold(curve, args.ratio)
    if args.format == "json":
        return json.dumps({"curve": curve.value, "ratio": args.ratio, "threshold": value})
    if value is None:
        return "threshold=none"
    return f"threshold={_fmt(value)}"


def _cmd_catalog(args) -> str:
    if args.verify:
        rows = catalog.table_rows(args.table) if args.table else catalog.all_rows()
        lines = []
        failures = 0
        for row in rows:
            report = catalog.verify_row(row)
            status = "ok" if report.passed else "FAIL"
            failures += not report.passed
            beats_ea = ("-" if report.beats_eaqecc is None
                        else ("yes" if report.beats_eaqecc else "no"))
            lines.append(f"{status}\t{row.table}\t{row.claimed.render()}\t"
                         f"beats_qecc={'yes' if report.beats_qecc else 'no'}\t"
                         f"beats_eaqecc={beats_ea}")
        lines.append(f"verified {len(rows)} rows, {failures} failures")
        return "\n".join(lines)
    if not args.table:
        raise CodeAlgebraError("catalog needs --table or --verify")
    fmt = "csv" if args.format == "text" else args.format
    return catalog.export(args.table, fmt).rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eaqec",
        description="Parameter algebra, packing bounds, and fidelity analysis "
                    "for entanglement-assisted concatenated quantum codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    p = sub.add_parser("concat", help="concatenate inner and outer code parameters")
    p.add_argument("--inner", required=True,
                   help='inner code "[[5,1,3;0]]" or mix "16x[[4,2,2;0]]+1x[[5,2,2;0]]"')
    p.add_argument("--outer", required=True, help='outer code, e.g. "[[3,1,3;2]]_2"')
    p.add_argument("--any-shape", action="store_true",
                   help="allow asymmetric inputs outside the standard shape")
    add_format(p)
    p.set_defaults(func=_cmd_concat)

    p = sub.add_parser("bound", help="exact packing-bound verdicts")
    p.add_argument("kind", choices=("hamming", "asym", "rate"))
    p.add_argument("--code", help="code parameters to check")
    p.add_argument("--delta", type=float, help="relative distance d/n (rate bound)")
    p.add_argument("--ebit-fraction", type=float, default=0.0, help="c/n (rate bound)")
    add_format(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("family", help="bound-beating concatenated families")
    p.add_argument("--id", required=True, choices=[f.value for f in families.FamilyId])
    p.add_argument("--n2", type=int, help="outer block length")
    p.add_argument("--n1", type=int, help="inner length (asymmetric family only)")
    p.add_argument("--scan", help="closed range lo:hi of outer lengths")
    add_format(p)
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("construct", help="codes from classical parity checks")
    p.add_argument("kind", choices=("css", "hermitian", "eaqmds"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k1", type=int, help="dimension of the first code")
    p.add_argument("--d1", type=int)
    p.add_argument("--k2", type=int)
    p.add_argument("--d2", type=int)
    p.add_argument("--k", type=int, help="dimension (hermitian)")
    p.add_argument("--d", type=int)
    p.add_argument("--c", type=int, help="ebit count (eaqmds)")
    p.add_argument("--q", type=int, default=2, help="base field order")
    p.add_argument("--q2", type=int, help="extension field order (hermitian)")
    p.add_argument("--h", help="parity check file, rows of hex elements")
    p.add_argument("--h1", help="first parity check file")
    p.add_argument("--h2", help="second parity check file")
    add_format(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("oracle", help="exhaustive correctable-error tables")
    p.add_argument("--code", required=True, choices=sorted(NAMED_CODES))
    p.add_argument("--ebit-preference", action=argparse.BooleanOptionalAction, default=None,
                   help="override the code's default decoder order")
    p.add_argument("--p-a", type=float, help="qubit depolarizing probability")
    p.add_argument("--p-b", type=float, help="ebit depolarizing probability")
    add_format(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("fidelity", help="sample fidelity curves as CSV")
    p.add_argument("--curves", required=True,
                   help="comma list: " + ",".join(sorted(_CURVES)))
    p.add_argument("--ratio", type=float, default=1.0, help="ebit noise ratio r (p_b = r p_a)")
    p.add_argument("--p-min", type=float, default=0.0)
    p.add_argument("--p-max", type=float, default=0.5)
    p.add_argument("--step", type=float, default=0.005)
    p.set_defaults(func=_cmd_fidelity)

    p = sub.add_parser("threshold", help="crossing with the unencoded fidelity")
    p.add_argument("--curve", required=True, choices=sorted(_CURVES))
    p.add_argument("--ratio", type=float, default=None, help="ebit noise ratio r")
    add_format(p)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("catalog", help="tabulated concatenated-code records")
    p.add_argument("--table", choices=catalog.TABLE_IDS)
    p.add_argument("--verify", action="store_true", help="recheck every row")
    add_format(p, choices=("text", "json", "csv"))
    p.set_defaults(func=_cmd_catalog)

    return parser


def run(argv: list[str]) -> tuple[int, str, str]:
    """Execute one invocation; returns (exit_code, stdout, stderr)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (int(exc.code or 0), "", "")
    try:
        out = args.func(args)
    except (CodeAlgebraError, FileNotFoundError, KeyError, ValueError) as exc:
        return (1, "", f"error: {exc}\n")
    return (0, out + "\n", "")


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
