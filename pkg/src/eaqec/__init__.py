"""Entanglement-assisted concatenated quantum code toolkit.

Exact code-parameter algebra, Hamming-type packing bounds over big
integers, finite-field parity-check constructions, exhaustive Pauli
decoding oracles, and depolarizing-channel fidelity analysis.
"""

from .params import (
    AsymCodeParams,
    CodeAlgebraError,
    CodeParams,
    MixedInnerSpec,
    better_than,
    concat,
    concat_asym,
    concat_mixed,
    parse_code,
    parse_mixed,
)
from .bounds import (
    BoundVerdict,
    asym_hamming_check,
    asymptotic_rate_bound,
    binom,
    binom_entropy_bounds,
    ea_hamming_check,
)
from .families import FamilyId, build_family, scan_violations
from .gf import GF, Matrix, css_construct, eaqmds_params, hermitian_construct, matrix_rank
from .pauli import (
    CorrectableTable,
    PauliOperator,
    StabilizerSpec,
    build_decoder,
    correctable_counts,
    oracle_channel_fidelity,
    syndrome,
)
from .fidelity import CurveId, eacqc_entanglement_fidelity, eval_fidelity, find_threshold, sample_curves
from .catalog import CatalogRow, export, verify_row

__version__ = "0.1.0"

__all__ = [
    "AsymCodeParams", "BoundVerdict", "CatalogRow", "CodeAlgebraError", "CodeParams",
    "CorrectableTable", "CurveId", "FamilyId", "GF", "Matrix", "MixedInnerSpec",
    "PauliOperator", "StabilizerSpec", "asym_hamming_check", "asymptotic_rate_bound",
    "better_than", "binom", "binom_entropy_bounds", "build_decoder", "build_family",
    "concat", "concat_asym", "concat_mixed", "correctable_counts", "css_construct",
    "ea_hamming_check", "eacqc_entanglement_fidelity", "eaqmds_params", "eval_fidelity",
    "export", "find_threshold", "hermitian_construct", "matrix_rank",
    "oracle_channel_fidelity", "parse_code", "parse_mixed", "sample_curves",
    "scan_violations", "syndrome", "verify_row",
]
