"""Exhaustive Pauli enumeration and syndrome decoding for small codes.

Operators are stored in symplectic form as a pair of bitmasks over
``n + c`` positions (``n`` transmitted qubits followed by ``c`` receiver-held
ebit halves); phases are discarded since correctability is phase-blind.
Every operator has a canonical integer encoding with two bits per position
(I=00, X=01, Z=10, Y=11 reading low bit = x, high bit = z), so enumerating
``range(4**(n+c))`` walks all operators and XOR of encodings is the group
product modulo phase.

The decoder assigns each syndrome the minimum-key coset element, where the
key prefers low ebit weight first (likelihood order when the stored ebits
are less noisy than the channel qubits) and falls back to the canonical
encoding, making every table bit-exact and reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .params import CodeAlgebraError

ENUMERATION_CAP = 12  # 4^12 ~ 17M operators; beyond this, refuse rather than sample
_CHUNK = 1 << 20


@dataclass(frozen=True)
class PauliOperator:
    """An n+c qubit Pauli modulo phase, as (x_bits, z_bits) with an Alice/Bob split."""

    n: int
    c: int
    x: int
    z: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.c < 0:
            raise CodeAlgebraError(f"need n >= 1 and c >= 0, got n={self.n}, c={self.c}")
        width = self.n + self.c
        if not (0 <= self.x < (1 << width) and 0 <= self.z < (1 << width)):
            raise CodeAlgebraError("x/z bitmasks exceed the register width")

    @property
    def width(self) -> int:
        return self.n + self.c

    @property
    def support(self) -> int:
        return self.x | self.z

    @property
    def alice_weight(self) -> int:
        return (self.support & ((1 << self.n) - 1)).bit_count()

    @property
    def bob_weight(self) -> int:
        return (self.support >> self.n).bit_count()

    @property
    def weight(self) -> int:
        return self.support.bit_count()

    @property
    def encoding(self) -> int:
        """Canonical integer: two bits per position, low bit x, high bit z."""
        enc = 0
        for i in range(self.width):
            enc |= ((self.x >> i) & 1) << (2 * i)
            enc |= ((self.z >> i) & 1) << (2 * i + 1)
        return enc

    @staticmethod
    def from_encoding(n: int, c: int, enc: int) -> "PauliOperator":
        x = z = 0
        for i in range(n + c):
            x |= ((enc >> (2 * i)) & 1) << i
            z |= ((enc >> (2 * i + 1)) & 1) << i
        return PauliOperator(n=n, c=c, x=x, z=z)

    @staticmethod
    def from_label(label: str, n: int | None = None) -> "PauliOperator":
        """Build from a string like ``XZZXI`` or ``XZZ|XI`` (| splits Alice/Bob)."""
        if "|" in label:
            alice, bob = label.split("|")
            n = len(alice)
            letters = alice + bob
        else:
            letters = label
            if n is None:
                n = len(letters)
        c = len(letters) - n
        x = z = 0
        for i, ch in enumerate(letters.upper()):
            if ch in ("X", "Y"):
                x |= 1 << i
            if ch in ("Z", "Y"):
                z |= 1 << i
            if ch not in "IXYZ":
                raise CodeAlgebraError(f"bad Pauli letter {ch!r} in {label!r}")
        return PauliOperator(n=n, c=c, x=x, z=z)

    def label(self) -> str:
        out = []
        for i in range(self.width):
            xb, zb = (self.x >> i) & 1, (self.z >> i) & 1
            out.append("IXZY"[xb + 2 * zb])
            if self.c and i == self.n - 1:
                out.append("|")
        return "".join(out)

    def commutes_with(self, other: "PauliOperator") -> bool:
        return ((self.x & other.z).bit_count() + (self.z & other.x).bit_count()) % 2 == 0

    def mul(self, other: "PauliOperator") -> "PauliOperator":
        """Group product modulo phase."""
        if (self.n, self.c) != (other.n, other.c):
            raise CodeAlgebraError("operator register mismatch")
        return PauliOperator(self.n, self.c, self.x ^ other.x, self.z ^ other.z)

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class StabilizerSpec:
    """Commuting independent generators on n Alice qubits and c Bob ebits."""

    name: str
    n_alice: int
    c_bob: int
    k: int
    generators: tuple[PauliOperator, ...]

    def __post_init__(self) -> None:
        width = self.n_alice + self.c_bob
        expected = width - self.k
        if len(self.generators) != expected:
            raise CodeAlgebraError(
                f"{self.name}: need {expected} generators for k={self.k}, got {len(self.generators)}")
        for g in self.generators:
            if (g.n, g.c) != (self.n_alice, self.c_bob):
                raise CodeAlgebraError(f"{self.name}: generator register mismatch")
        for i, a in enumerate(self.generators):
            for b in self.generators[i + 1:]:
                if not a.commutes_with(b):
                    raise CodeAlgebraError(f"{self.name}: generators {a} and {b} anticommute")
        if _gf2_rank([(g.x << width) | g.z for g in self.generators]) != expected:
            raise CodeAlgebraError(f"{self.name}: dependent generators")

    @property
    def width(self) -> int:
        return self.n_alice + self.c_bob

    @property
    def num_syndromes(self) -> int:
        return 1 << len(self.generators)

    @cached_property
    def group_encodings(self) -> tuple[int, ...]:
        """Encodings of all 2^(n+c-k) stabilizer group elements."""
        encs = [0]
        for g in self.generators:
            ge = g.encoding
            encs += [e ^ ge for e in encs]
        return tuple(sorted(encs))


def _gf2_rank(vectors: list[int]) -> int:
    pivots: dict[int, int] = {}  # leading bit -> reduced vector
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = v
                break
            v ^= pivots[lead]
    return len(pivots)


def syndrome(e: PauliOperator, s: StabilizerSpec) -> int:
    """Anticommutation pattern of ``e`` with the generators, bit g = generator g."""
    if (e.n, e.c) != (s.n_alice, s.c_bob):
        raise CodeAlgebraError("error operator register does not match the code")
    out = 0
    for gi, g in enumerate(s.generators):
        if not e.commutes_with(g):
            out |= 1 << gi
    return out


def _enumeration_arrays(s: StabilizerSpec, lo: int, hi: int):
    """Vectorized (x, z, syndrome, alice_w, bob_w) for encodings in [lo, hi)."""
    width = s.width
    enc = np.arange(lo, hi, dtype=np.int64)
    x = np.zeros_like(enc)
    z = np.zeros_like(enc)
    for i in range(width):
        x |= ((enc >> (2 * i)) & 1) << i
        z |= ((enc >> (2 * i + 1)) & 1) << i
    syn = np.zeros_like(enc)
    for gi, g in enumerate(s.generators):
        anti = (np.bitwise_count(x & g.z) + np.bitwise_count(z & g.x)) & 1
        syn |= anti.astype(np.int64) << gi
    support = x | z
    alice_w = np.bitwise_count(support & ((1 << s.n_alice) - 1)).astype(np.int64)
    bob_w = np.bitwise_count(support >> s.n_alice).astype(np.int64)
    return enc, syn, alice_w, bob_w


def build_decoder(s: StabilizerSpec, ebit_preference: bool = True) -> dict[int, PauliOperator]:
    """Map each syndrome to its minimum-key coset representative.

    With ``ebit_preference`` the key is (bob weight, alice weight, encoding);
    otherwise (total weight, encoding).  Ties are impossible since the
    encoding is unique per operator.
    """
    width = s.width
    if width > ENUMERATION_CAP:
        raise CodeAlgebraError(
            f"{s.name}: n+c = {width} exceeds the exhaustive enumeration cap {ENUMERATION_CAP}")
    total = 1 << (2 * width)
    shift = 2 * width
    best = np.full(s.num_syndromes, np.iinfo(np.int64).max, dtype=np.int64)
    for lo in range(0, total, _CHUNK):
        enc, syn, aw, bw = _enumeration_arrays(s, lo, min(lo + _CHUNK, total))
        if ebit_preference:
            rank = bw * (width + 1) + aw
        else:
            rank = aw + bw
        key = (rank << shift) | enc
        np.minimum.at(best, syn, key)
    mask = (1 << shift) - 1
    return {
        syn: PauliOperator.from_encoding(s.n_alice, s.c_bob, int(best[syn]) & mask)
        for syn in range(s.num_syndromes)
    }


@dataclass(frozen=True)
class CorrectableTable:
    """Counts c_ij of decoder-correctable errors with i qubit and j ebit errors."""

    n: int
    c: int
    k: int
    counts: tuple[tuple[int, int, int], ...]  # (i, j, count), sorted

    def __post_init__(self) -> None:
        total = sum(cnt for _, _, cnt in self.counts)
        expected = 1 << (2 * (self.n + self.c - self.k))
        if total != expected:
            raise CodeAlgebraError(
                f"correctable counts sum to {total}, expected 2^(2(n+c-k)) = {expected}")
        if self.count(0, 0) != 1:
            raise CodeAlgebraError("identity must be the unique weight-(0,0) correctable error")

    def count(self, i: int, j: int) -> int:
        for ci, cj, cnt in self.counts:
            if (ci, cj) == (i, j):
                return cnt
        return 0

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): cnt for i, j, cnt in self.counts}

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n, "c": self.c, "k": self.k,
            "counts": [[i, j, cnt] for i, j, cnt in self.counts],
        })

    @staticmethod
    def from_json(text: str) -> "CorrectableTable":
        obj = json.loads(text)
        return CorrectableTable(
            n=obj["n"], c=obj["c"], k=obj["k"],
            counts=tuple((int(i), int(j), int(cnt)) for i, j, cnt in obj["counts"]),
        )

    @staticmethod
    def from_counts(n: int, c: int, k: int, counts: dict[tuple[int, int], int]) -> "CorrectableTable":
        items = tuple(sorted((i, j, cnt) for (i, j), cnt in counts.items() if cnt))
        return CorrectableTable(n=n, c=c, k=k, counts=items)


def correctable_counts(
    s: StabilizerSpec,
    decoder: dict[int, PauliOperator] | None = None,
) -> CorrectableTable:
    """Exhaustively count errors E with ``E * decoder(syndrome(E))`` in the stabilizer."""
    if decoder is None:
        decoder = build_decoder(s)
    width = s.width
    if width > ENUMERATION_CAP:
        raise CodeAlgebraError(
            f"{s.name}: n+c = {width} exceeds the exhaustive enumeration cap {ENUMERATION_CAP}")
    total = 1 << (2 * width)
    stab_mask = np.zeros(total, dtype=bool)
    stab_mask[list(s.group_encodings)] = True
    if sorted(decoder) != list(range(s.num_syndromes)):
        raise CodeAlgebraError(f"decoder must cover all {s.num_syndromes} syndromes")
    rep_enc = np.zeros(s.num_syndromes, dtype=np.int64)
    for syn, rep in decoder.items():
        if (rep.n, rep.c) != (s.n_alice, s.c_bob):
            raise CodeAlgebraError("decoder representative register mismatch")
        rep_enc[syn] = rep.encoding
    bins = np.zeros((s.n_alice + 1) * (s.c_bob + 1), dtype=np.int64)
    for lo in range(0, total, _CHUNK):
        enc, syn, aw, bw = _enumeration_arrays(s, lo, min(lo + _CHUNK, total))
        residual = enc ^ rep_enc[syn]
        ok = stab_mask[residual]
        idx = aw[ok] * (s.c_bob + 1) + bw[ok]
        bins += np.bincount(idx, minlength=bins.size)
    counts = {}
    for i in range(s.n_alice + 1):
        for j in range(s.c_bob + 1):
            cnt = int(bins[i * (s.c_bob + 1) + j])
            if cnt:
                counts[(i, j)] = cnt
    return CorrectableTable.from_counts(s.n_alice, s.c_bob, s.k, counts)


def oracle_channel_fidelity(t: CorrectableTable, p_a: float, p_b: float) -> float:
    """Total probability of correctable error patterns under depolarizing noise.

    Qubit patterns of Alice-weight i occur with probability
    ``(1-3p_a/4)^(n-i) (p_a/4)^i`` each, and ebit patterns of Bob-weight j
    with ``(1-3p_b/4)^(c-j) (p_b/4)^j``.
    """
    if not (0.0 <= p_a <= 1.0 and 0.0 <= p_b <= 1.0):
        raise CodeAlgebraError(f"depolarizing probabilities must lie in [0,1], got {p_a}, {p_b}")
    mu = [(1.0 - 0.75 * p_a) ** (t.n - i) * (0.25 * p_a) ** i for i in range(t.n + 1)]
    nu = [(1.0 - 0.75 * p_b) ** (t.c - j) * (0.25 * p_b) ** j for j in range(t.c + 1)]
    return sum(cnt * mu[i] * nu[j] for i, j, cnt in t.counts)
