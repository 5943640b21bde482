"""Arithmetic over GF(2^m), matrix rank, and parity-check code constructions.

Elements of GF(2^m) are ints below 2^m interpreted as polynomials over
GF(2); multiplication uses log/antilog tables built from a fixed Conway
polynomial per degree, so bit patterns are reproducible across runs.
Degree-2 extensions come with an explicit subfield embedding, making the
conjugation x -> x^q of the Hermitian construction a table lookup.

The constructions turn classical parity checks into entanglement-assisted
code parameters: a pair of length-n codes gives
``[[n, k1+k2-n+c, >=min(d1,d2); c]]_q`` with ``c = rank(H1 H2^T)``, and a
single code over GF(q^2) gives ``[[n, 2k-n+c, >=d; c]]_q`` with
``c = rank(H H^dagger)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .params import CodeAlgebraError, CodeParams

# Conway polynomials over GF(2), degree 1..8, as bit patterns.
CONWAY_POLY = {
    1: 0b11,          # x + 1
    2: 0b111,         # x^2 + x + 1
    3: 0b1011,        # x^3 + x + 1
    4: 0b10011,       # x^4 + x + 1
    5: 0b100101,      # x^5 + x^2 + 1
    6: 0b1011011,     # x^6 + x^4 + x^3 + x + 1
    7: 0b10000011,    # x^7 + x + 1
    8: 0b100011101,   # x^8 + x^4 + x^3 + x^2 + 1
}


class GF:
    """Finite field GF(2^m) with fixed modulus and log/antilog tables."""

    def __init__(self, m: int):
        if m not in CONWAY_POLY:
            raise CodeAlgebraError(f"unsupported field degree m={m} (need 1 <= m <= 8)")
        self.m = m
        self.q = 1 << m
        self.poly = CONWAY_POLY[m]
        self._exp = [1] * (2 * (self.q - 1))
        self._log = [0] * self.q
        x = 1
        for i in range(self.q - 1):
            self._exp[i] = x
            self._log[x] = i
            x <<= 1
            if x & self.q:
                x ^= self.poly
        # doubled table avoids a modulo in mul
        for i in range(self.q - 1, 2 * (self.q - 1)):
            self._exp[i] = self._exp[i - (self.q - 1)]

    @staticmethod
    @lru_cache(maxsize=None)
    def of_order(q: int) -> "GF":
        m = q.bit_length() - 1
        if q != 1 << m:
            raise CodeAlgebraError(f"field order must be a power of 2, got {q}")
        return GF(m)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise CodeAlgebraError(f"{a} is not an element of GF({self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        return self._exp[(self.q - 1) - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    @property
    def generator(self) -> int:
        return self._exp[1] if self.m > 1 else 1

    # -- degree-2 extension structure ------------------------------------

    @property
    def is_square_extension(self) -> bool:
        return self.m % 2 == 0

    def subfield(self) -> "GF":
        if not self.is_square_extension:
            raise CodeAlgebraError(f"GF({self.q}) is not a square extension")
        return GF.of_order(1 << (self.m // 2))

    def conj(self, a: int) -> int:
        """Conjugation x -> x^sqrt(q) of a degree-2 extension."""
        if not self.is_square_extension:
            raise CodeAlgebraError(f"GF({self.q}) has no quadratic conjugation")
        return self.pow(a, 1 << (self.m // 2))

    def embed_from_subfield(self, a: int) -> int:
        """Image of a subfield element under the norm-compatible embedding."""
        sub = self.subfield()
        sub.check(a)
        if a == 0:
            return 0
        step = (self.q - 1) // (sub.q - 1)
        return self._exp[(sub._log[a] * step) % (self.q - 1)]

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and other.m == self.m

    def __hash__(self) -> int:
        return hash(("GF", self.m))


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over a single GF(2^m), entries stored row-major."""

    field: GF
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise CodeAlgebraError("matrix needs at least one row and one column")
        width = len(self.rows[0])
        for row in self.rows:
            if len(row) != width:
                raise CodeAlgebraError("ragged matrix rows")
            for e in row:
                self.field.check(e)

    @staticmethod
    def from_rows(field: GF, rows) -> "Matrix":
        return Matrix(field, tuple(tuple(int(e) for e in row) for row in rows))

    @staticmethod
    def identity(field: GF, n: int) -> "Matrix":
        return Matrix(field, tuple(tuple(1 if i == j else 0 for j in range(n))
                                   for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, tuple(zip(*self.rows)))

    def conj_transpose(self) -> "Matrix":
        f = self.field
        return Matrix(f, tuple(tuple(f.conj(e) for e in col) for col in zip(*self.rows)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise CodeAlgebraError("matrix product across different fields")
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise CodeAlgebraError(f"shape mismatch: {self.shape} @ {other.shape}")
        f = self.field
        cols = other.transpose().rows
        out = []
        for row in self.rows:
            acc_row = []
            for col in cols:
                acc = 0
                for a, b in zip(row, col):
                    acc ^= f.mul(a, b)
                acc_row.append(acc)
            out.append(tuple(acc_row))
        return Matrix(f, tuple(out))

    def rank(self) -> int:
        """Rank by Gaussian elimination with deterministic leftmost pivots."""
        f = self.field
        work = [list(row) for row in self.rows]
        nrows, ncols = self.shape
        r = 0
        for col in range(ncols):
            pivot = next((i for i in range(r, nrows) if work[i][col] != 0), None)
            if pivot is None:
                continue
            work[r], work[pivot] = work[pivot], work[r]
            inv = f.inv(work[r][col])
            work[r] = [f.mul(inv, e) for e in work[r]]
            for i in range(nrows):
                if i != r and work[i][col] != 0:
                    factor = work[i][col]
                    work[i] = [a ^ f.mul(factor, b) for a, b in zip(work[i], work[r])]
            r += 1
            if r == nrows:
                break
        return r

    def to_text(self) -> str:
        """Rows of space-separated hex field elements."""
        return "\n".join(" ".join(format(e, "x") for e in row) for row in self.rows)

    @staticmethod
    def from_text(field: GF, text: str) -> "Matrix":
        rows = []
        for line in text.strip().splitlines():
            if not line.strip():
                continue
            rows.append([int(tok, 16) for tok in line.split()])
        return Matrix.from_rows(field, rows)


def matrix_rank(m: Matrix) -> int:
    return m.rank()


def css_construct(
    c1: tuple[int, int, int],
    c2: tuple[int, int, int],
    h1: Matrix,
    h2: Matrix,
) -> CodeParams:
    """Entanglement-assisted code from two classical codes over GF(q).

    ``c1 = (n, k1, d1)`` and ``c2 = (n, k2, d2)`` with parity checks ``h1``
    and ``h2``; the ebit count is the rank of ``h1 @ h2^T``.
    """
    n, k1, d1 = c1
    n2, k2, d2 = c2
    if n != n2:
        raise CodeAlgebraError(f"component codes must share length: {n} vs {n2}")
    if h1.field != h2.field:
        raise CodeAlgebraError("parity checks must live over the same field")
    if h1.shape != (n - k1, n):
        raise CodeAlgebraError(f"H1 must be {(n - k1, n)}, got {h1.shape}")
    if h2.shape != (n - k2, n):
        raise CodeAlgebraError(f"H2 must be {(n - k2, n)}, got {h2.shape}")
    c = (h1 @ h2.transpose()).rank()
    return CodeParams(n=n, k=k1 + k2 - n + c, d=min(d1, d2), c=c,
                      q=h1.field.q, d_is_lower_bound=True)


def hermitian_construct(code: tuple[int, int, int], h: Matrix) -> CodeParams:
    """Entanglement-assisted code from one classical code over GF(q^2).

    ``code = (n, k, d)`` with parity check ``h`` over a square-extension
    field; the ebit count is the rank of ``h @ h^dagger`` and the result is
    a ``q``-ary code.
    """
    n, k, d = code
    if not h.field.is_square_extension:
        raise CodeAlgebraError(
            f"Hermitian construction needs a square extension field, got GF({h.field.q})")
    if h.shape != (n - k, n):
        raise CodeAlgebraError(f"H must be {(n - k, n)}, got {h.shape}")
    c = (h @ h.conj_transpose()).rank()
    return CodeParams(n=n, k=2 * k - n + c, d=d, c=c,
                      q=h.field.subfield().q, d_is_lower_bound=True)


@dataclass(frozen=True)
class EaqmdsCode:
    """A Singleton-meeting code record derived from an MDS parity check.

    ``singleton_ok`` confirms ``n + c - k = 2(d - 1)``; ``catalytic_range``
    marks ``2 <= d < n/2 - 1``, the regime guaranteeing positive net
    transmission.
    """

    params: CodeParams
    singleton_ok: bool
    catalytic_range: bool

    @property
    def positive_net(self) -> bool:
        return self.params.net_transmission > 0


def eaqmds_params(n: int, k1: int, c: int, q: int) -> EaqmdsCode:
    """Parameters ``[[n, 2k1-n+c, n-k1+1; c]]_q`` from an ``[n,k1]`` MDS code.

    Valid for ``q+1 <= n <= q^2+1``; the caller supplies the ebit count
    (the rank of the Hermitian Gram matrix of the MDS parity check).
    """
    GF.of_order(q)
    if not q + 1 <= n <= q * q + 1:
        raise CodeAlgebraError(f"MDS length must satisfy q+1 <= n <= q^2+1, got n={n}, q={q}")
    if not 1 <= k1 <= n:
        raise CodeAlgebraError(f"classical dimension must satisfy 1 <= k1 <= n, got {k1}")
    if not 0 <= c <= n:
        raise CodeAlgebraError(f"ebit count must satisfy 0 <= c <= n, got {c}")
    d = n - k1 + 1
    k = 2 * k1 - n + c
    if k < 0:
        raise CodeAlgebraError(f"derived k = 2*k1 - n + c = {k} is negative")
    p = CodeParams(n=n, k=k, d=d, c=c, q=q)
    return EaqmdsCode(
        params=p,
        singleton_ok=(n + c - k == 2 * (d - 1)),
        catalytic_range=(2 <= d and 2 * d < n - 2),
    )
