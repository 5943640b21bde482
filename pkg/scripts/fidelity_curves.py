#!/usr/bin/env python3
"""Sample the entanglement-fidelity curves and thresholds for plotting.

Writes one CSV per ebit noise ratio (p_b = r * p_a) with the unencoded
reference, the twice-concatenated five-qubit scheme, and the two
split-noise schemes, plus a threshold summary.  Feed the CSVs to any
plotter to reproduce the four comparison panels.
"""

import argparse
import pathlib

from eaqec.fidelity import CurveId, curves_to_csv, find_threshold, sample_curves

PANEL_RATIOS = (1.0, 0.5, 0.1, 0.01)
CURVES = [CurveId.FE_UNENCODED, CurveId.FE_CQC25,
          CurveId.FE_EACQC_BOWEN, CurveId.FE_EACQC_REP]
THRESHOLD_CURVES = [CurveId.FE_513, CurveId.FE_CQC25,
                    CurveId.FE_EACQC_BOWEN, CurveId.FE_EACQC_REP]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("curves"))
    parser.add_argument("--p-max", type=float, default=0.5)
    parser.add_argument("--step", type=float, default=0.005)
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for r in PANEL_RATIOS:
        rows = sample_curves(CURVES, r, 0.0, args.p_max, args.step)
        path = args.out_dir / f"fidelity_r{r:g}.csv"
        path.write_text(curves_to_csv(rows))
        print(f"wrote {path} ({len(rows)} rows)")

    lines = ["curve,ratio,threshold"]
    for curve in THRESHOLD_CURVES:
        ratios = PANEL_RATIOS if curve.value.startswith("fe_eacqc") else (None,)
        for r in ratios:
            value = find_threshold(curve, r)
            r_text = "" if r is None else format(r, "g")
            lines.append(f"{curve.value},{r_text},{format(value, '.6f')}")
    summary = args.out_dir / "thresholds.csv"
    summary.write_text("\n".join(lines) + "\n")
    print(f"wrote {summary}")


if __name__ == "__main__":
    main()
