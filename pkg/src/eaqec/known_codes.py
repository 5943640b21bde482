"""Stabilizer generators for the named small codes, with source notes.

Generators are written over n Alice qubits and c Bob ebit halves
("Alice|Bob").  ``decoder_ebit_preference`` records which representative
order reproduces each code's published correctable-error coefficients:
the five-qubit-derived code uses the plain minimum-weight decoder (all
positions treated alike), while the repetition-based code uses the
ebit-protecting order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pauli import (
    CorrectableTable,
    PauliOperator,
    StabilizerSpec,
    build_decoder,
    correctable_counts,
)


@dataclass(frozen=True)
class NamedCode:
    spec: StabilizerSpec
    decoder_ebit_preference: bool

    def decoder(self) -> dict[int, PauliOperator]:
        return build_decoder(self.spec, ebit_preference=self.decoder_ebit_preference)

    def table(self) -> CorrectableTable:
        return correctable_counts(self.spec, self.decoder())


def _spec(name: str, labels: list[str], n: int, c: int, k: int) -> StabilizerSpec:
    gens = tuple(PauliOperator.from_label(lab, n=n) for lab in labels)
    return StabilizerSpec(name=name, n_alice=n, c_bob=c, k=k, generators=gens)


# Five-qubit code [[5,1,3]]: cyclic generators XZZXI, as in Laflamme,
# Miquel, Paz & Zurek, Phys. Rev. Lett. 77, 198 (1996).
FIVE_QUBIT = NamedCode(
    spec=_spec("[[5,1,3]]", ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"], n=5, c=0, k=1),
    decoder_ebit_preference=False,
)

# Bowen's [[3,1,3;2]] code (G. Bowen, Phys. Rev. A 66, 052313 (2002)):
# the five-qubit stabilizers with the last two positions held by Bob as
# ebit halves.  Its correctable set is that of the five-qubit code, so the
# plain minimum-weight decoder reproduces the published coefficients.
BOWEN_313 = NamedCode(
    spec=_spec("[[3,1,3;2]] (Bowen)",
               ["XZZ|XI", "IXZ|ZX", "XIX|ZZ", "ZXI|XZ"], n=3, c=2, k=1),
    decoder_ebit_preference=False,
)

# [[3,1,3;2]] entanglement-assisted repetition code (Brun, Devetak &
# Hsieh, Science 314, 436 (2006)): CSS-type construction from the [3,1,3]
# repetition-code parity checks, with each anticommuting Z/X row pair
# completed on one ebit.  Published coefficients correspond to the
# ebit-protecting decoder.
EA_REPETITION_313 = NamedCode(
    spec=_spec("[[3,1,3;2]] (EA repetition)",
               ["ZZI|XI", "IZZ|IX", "XXI|IZ", "IXX|ZI"], n=3, c=2, k=1),
    decoder_ebit_preference=True,
)

NAMED_CODES = {
    "513": FIVE_QUBIT,
    "bowen": BOWEN_313,
    "ea-rep": EA_REPETITION_313,
}

# Frozen correctable-count tables (verified against exhaustive enumeration
# in the test suite).
FIVE_QUBIT_TABLE = CorrectableTable(
    n=5, c=0, k=1,
    counts=((0, 0, 1), (1, 0, 15), (3, 0, 60), (4, 0, 135), (5, 0, 45)),
)
BOWEN_TABLE = CorrectableTable(
    n=3, c=2, k=1,
    counts=((0, 0, 1), (0, 1, 6), (1, 0, 9), (1, 2, 18),
            (2, 1, 36), (2, 2, 81), (3, 0, 6), (3, 1, 54), (3, 2, 45)),
)
EA_REPETITION_TABLE = CorrectableTable(
    n=3, c=2, k=1,
    counts=((0, 0, 1), (1, 0, 9), (1, 1, 18), (1, 2, 18),
            (2, 0, 6), (2, 1, 38), (2, 2, 55), (3, 1, 40), (3, 2, 71)),
)

NAMED_TABLES = {
    "513": FIVE_QUBIT_TABLE,
    "bowen": BOWEN_TABLE,
    "ea-rep": EA_REPETITION_TABLE,
}
