"""Closed-form fidelity curves, concatenated composition, and thresholds.

A depolarizing channel with error probability p leaves a maximally
entangled input with fidelity 1 - 3p/4.  Encoding with the five-qubit code
gives entanglement fidelity ``1 - 10p^2 + 20p^3 - 15p^4 + 4p^5``; its
channel fidelity (total probability of correctable patterns) is
``1 - 45p^2/8 + 75p^3/8 - 45p^4/8 + 9p^5/8``.  Concatenated schemes
compose: the inner code maps depolarizing noise to depolarizing noise with
error probability ``1 - F_c(inner)``, which feeds the outer five-qubit
entanglement fidelity.

Two-block inner codes see split noise: transmitted qubits at ``p_a = p``
and stored ebit halves at ``p_b = r * p``.  The threshold of a scheme is
the first p where its entanglement fidelity falls below the unencoded
``1 - 3p/4``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .params import CodeAlgebraError
from .pauli import CorrectableTable, oracle_channel_fidelity


class CurveId(enum.Enum):
    FC_513 = "fc_513"
    FE_513 = "fe_513"
    FE_CQC25 = "fe_cqc25"
    FC_BOWEN = "fc_bowen"
    FC_REP = "fc_rep"
    FE_EACQC_BOWEN = "fe_eacqc_bowen"
    FE_EACQC_REP = "fe_eacqc_rep"
    FE_UNENCODED = "fe_unencoded"


RATIO_CURVES = frozenset({
    CurveId.FC_BOWEN, CurveId.FC_REP, CurveId.FE_EACQC_BOWEN, CurveId.FE_EACQC_REP,
})
ENCODED_CURVES = frozenset({
    CurveId.FE_513, CurveId.FE_CQC25, CurveId.FE_EACQC_BOWEN, CurveId.FE_EACQC_REP,
})

# (coefficient, Alice weight, Bob weight) expansions of the two named
# [[3,1,3;2]] channel fidelities over split depolarizing noise.
_BOWEN_TERMS = (
    (1, 0, 0), (9, 1, 0), (6, 3, 0),
    (6, 0, 1), (36, 2, 1), (54, 3, 1),
    (18, 1, 2), (81, 2, 2), (45, 3, 2),
)
_REP_TERMS = (
    (1, 0, 0), (9, 1, 0), (6, 2, 0),
    (18, 1, 1), (38, 2, 1), (40, 3, 1),
    (18, 1, 2), (55, 2, 2), (71, 3, 2),
)


def channel_fidelity_513(p: float) -> float:
    return 1.0 + p * p * (-45.0 / 8.0 + p * (75.0 / 8.0 + p * (-45.0 / 8.0 + p * 9.0 / 8.0)))


def entanglement_fidelity_513(p: float) -> float:
    return 1.0 + p * p * (-10.0 + p * (20.0 + p * (-15.0 + p * 4.0)))


def unencoded_fidelity(p: float) -> float:
    return 1.0 - 0.75 * p


def _split_expansion(terms, n: int, c: int, p_a: float, p_b: float) -> float:
    mu = [(1.0 - 0.75 * p_a) ** (n - i) * (0.25 * p_a) ** i for i in range(n + 1)]
    nu = [(1.0 - 0.75 * p_b) ** (c - j) * (0.25 * p_b) ** j for j in range(c + 1)]
    return sum(coeff * mu[i] * nu[j] for coeff, i, j in terms)


def channel_fidelity_bowen(p_a: float, p_b: float) -> float:
    return _split_expansion(_BOWEN_TERMS, 3, 2, p_a, p_b)


def channel_fidelity_rep(p_a: float, p_b: float) -> float:
    return _split_expansion(_REP_TERMS, 3, 2, p_a, p_b)


def _check_args(curve: CurveId, p: float, r: float | None) -> float:
    if not 0.0 <= p <= 1.0:
        raise CodeAlgebraError(f"depolarizing probability must lie in [0,1], got {p}")
    if curve not in RATIO_CURVES:
        return 0.0
    if r is None:
        raise CodeAlgebraError(f"curve {curve.value} needs the ebit noise ratio r")
    if r < 0.0:
        raise CodeAlgebraError(f"ebit noise ratio must be non-negative, got {r}")
    if r * p > 1.0:
        raise CodeAlgebraError(f"ebit error probability r*p = {r * p} exceeds 1")
    return r * p


def eval_fidelity(curve: CurveId, p: float, r: float | None = None) -> float:
    """Evaluate one named fidelity curve at qubit error probability p.

    For the split-noise curves the ebit halves see ``p_b = r * p``.
    """
    p_b = _check_args(curve, p, r)
    if curve is CurveId.FC_513:
        return channel_fidelity_513(p)
    if curve is CurveId.FE_513:
        return entanglement_fidelity_513(p)
    if curve is CurveId.FE_CQC25:
        return entanglement_fidelity_513(1.0 - channel_fidelity_513(p))
    if curve is CurveId.FC_BOWEN:
        return channel_fidelity_bowen(p, p_b)
    if curve is CurveId.FC_REP:
        return channel_fidelity_rep(p, p_b)
    if curve is CurveId.FE_EACQC_BOWEN:
        return entanglement_fidelity_513(1.0 - channel_fidelity_bowen(p, p_b))
    if curve is CurveId.FE_EACQC_REP:
        return entanglement_fidelity_513(1.0 - channel_fidelity_rep(p, p_b))
    if curve is CurveId.FE_UNENCODED:
        return unencoded_fidelity(p)
    raise CodeAlgebraError(f"unknown curve {curve!r}")


def eacqc_entanglement_fidelity(inner_table: CorrectableTable, p_a: float, p_b: float) -> float:
    """Entanglement fidelity of a five-qubit outer code over a tabulated inner code.

    The inner code must encode one logical qubit; its effective error
    probability ``1 - F_c`` drives the outer five-qubit code.
    """
    if inner_table.k != 1:
        raise CodeAlgebraError(
            f"inner code must have k = 1 for single-qubit composition, got k={inner_table.k}")
    return entanglement_fidelity_513(1.0 - oracle_channel_fidelity(inner_table, p_a, p_b))


@dataclass(frozen=True)
class FidelityCurve:
    """A named curve bound to an ebit noise ratio."""

    curve: CurveId
    ebit_ratio: float | None = None

    def __call__(self, p: float) -> float:
        return eval_fidelity(self.curve, p, self.ebit_ratio)


_SCAN_STEP = 1e-3
_SCAN_FLOOR = 1e-4
_BISECT_TOL = 1e-6


def find_threshold(curve: CurveId, r: float | None = None) -> float | None:
    """Smallest p in (0,1) where the encoded curve drops below the unencoded one.

    Located by a coarse downward scan followed by bisection to 1e-6;
    returns None when the curve stays above the unencoded fidelity.
    """
    if curve not in ENCODED_CURVES:
        raise CodeAlgebraError(f"threshold is defined for encoded schemes, not {curve.value}")
    p_max = 1.0
    if curve in RATIO_CURVES:
        if r is None:
            raise CodeAlgebraError(f"curve {curve.value} needs the ebit noise ratio r")
        if r > 1.0:
            p_max = 1.0 / r

    def gap(p: float) -> float:
        return eval_fidelity(curve, p, r) - unencoded_fidelity(p)

    lo = None
    steps = int(p_max / _SCAN_STEP)
    for i in range(1, steps + 1):
        p = i * _SCAN_STEP
        if p <= _SCAN_FLOOR or p > p_max:
            continue
        if gap(p) <= 0.0:
            if lo is None:
                return None  # already below at the first scanned point
            hi = p
            break
        lo = p
    else:
        return None

    for _ in range(100):
        if hi - lo <= _BISECT_TOL:
            break
        mid = 0.5 * (lo + hi)
        if gap(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sample_curves(
    curves: list[CurveId],
    r: float | None,
    p_min: float,
    p_max: float,
    step: float,
) -> list[dict[str, float]]:
    """Evaluate curves on the grid p_min, p_min+step, ... clamped at p_max.

    Each row maps ``"p"`` and the curve column names to values.
    """
    if not curves:
        raise CodeAlgebraError("need at least one curve to sample")
    if not (0.0 <= p_min < p_max <= 1.0):
        raise CodeAlgebraError(f"need 0 <= p_min < p_max <= 1, got [{p_min}, {p_max}]")
    if step <= 0.0:
        raise CodeAlgebraError(f"step must be positive, got {step}")
    rows = []
    i = 0
    while True:
        p = p_min + i * step
        if p > p_max + 1e-12:
            break
        p = min(p, p_max)
        row = {"p": p}
        for curve in curves:
            row[curve.value] = eval_fidelity(curve, p, r)
        rows.append(row)
        i += 1
    return rows


def curves_to_csv(rows: list[dict[str, float]]) -> str:
    """Render sampled rows as CSV with 12 significant digits."""
    if not rows:
        raise CodeAlgebraError("no rows to render")
    header = list(rows[0].keys())
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format(row[col], ".12g") for col in header))
    return "\n".join(lines) + "\n"
