"""Parameter algebra for entanglement-assisted quantum codes.

Codes are handled purely at the parameter level: an ``[[n,k,d;c]]_q`` record
tracks block length, logical dimension, designed distance and ebit count.
Concatenation of an inner code with an outer code multiplies lengths, logical
counts and distances, and accumulates ebits as ``c1*n2 + c2*k1``.  True
minimum distances of concatenated codes are never computed; the product
``d1*d2`` is stored as a designed-distance lower bound.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class CodeAlgebraError(ValueError):
    """Raised when code parameters are invalid or incompatible."""


def _is_power_of_two(q: int) -> bool:
    return q >= 2 and (q & (q - 1)) == 0


@dataclass(frozen=True)
class CodeParams:
    """An ``[[n,k,d;c]]_q`` entanglement-assisted code parameter record.

    ``d_is_lower_bound`` marks a designed distance (the true distance is at
    least ``d``); it is rendered as a ``≥`` prefix.  A plain stabilizer code
    is the special case ``c = 0``.
    """

    n: int
    k: int
    d: int
    c: int = 0
    q: int = 2
    d_is_lower_bound: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise CodeAlgebraError(f"block length must be positive, got n={self.n}")
        if self.k < 0:
            raise CodeAlgebraError(f"logical count must be non-negative, got k={self.k}")
        if self.d < 1:
            raise CodeAlgebraError(f"distance must be positive, got d={self.d}")
        if not 0 <= self.c <= self.n:
            raise CodeAlgebraError(f"ebit count must satisfy 0 <= c <= n, got c={self.c}, n={self.n}")
        if self.k > self.n + self.c:
            raise CodeAlgebraError(f"k <= n + c violated: k={self.k}, n={self.n}, c={self.c}")
        if not _is_power_of_two(self.q):
            raise CodeAlgebraError(f"alphabet must be a power of 2, got q={self.q}")

    @property
    def net_transmission(self) -> int:
        """Logical qudits conveyed minus ebits consumed; may be negative."""
        return self.k - self.c

    def render(self) -> str:
        d = f"≥{self.d}" if self.d_is_lower_bound else str(self.d)
        suffix = "" if self.q == 2 else f"_{self.q}"
        return f"[[{self.n},{self.k},{d};{self.c}]]{suffix}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class AsymCodeParams:
    """An ``[[n,k,d_Z/d_X;c]]_q`` asymmetric parameter record.

    Separate detection radii for phase flips (``d_z``) and bit flips
    (``d_x``), in the regime where Z errors dominate (``d_z >= d_x``).
    """

    n: int
    k: int
    d_z: int
    d_x: int
    c: int = 0
    q: int = 2
    d_is_lower_bound: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise CodeAlgebraError(f"block length must be positive, got n={self.n}")
        if self.k < 0:
            raise CodeAlgebraError(f"logical count must be non-negative, got k={self.k}")
        if not self.d_z >= self.d_x >= 1:
            raise CodeAlgebraError(f"need d_z >= d_x >= 1, got d_z={self.d_z}, d_x={self.d_x}")
        if not 0 <= self.c <= self.n:
            raise CodeAlgebraError(f"ebit count must satisfy 0 <= c <= n, got c={self.c}, n={self.n}")
        if self.k > self.n + self.c:
            raise CodeAlgebraError(f"k <= n + c violated: k={self.k}, n={self.n}, c={self.c}")
        if not _is_power_of_two(self.q):
            raise CodeAlgebraError(f"alphabet must be a power of 2, got q={self.q}")

    @property
    def net_transmission(self) -> int:
        return self.k - self.c

    def render(self) -> str:
        dz = f"≥{self.d_z}" if self.d_is_lower_bound else str(self.d_z)
        suffix = "" if self.q == 2 else f"_{self.q}"
        return f"[[{self.n},{self.k},{dz}/{self.d_x};{self.c}]]{suffix}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class MixedInnerSpec:
    """An ordered multiset of inner codes, as ``(code, multiplicity)`` pairs.

    All entries must share the same logical count and distance; the total
    multiplicity must match the outer block length when concatenating.
    """

    entries: tuple[tuple[CodeParams, int], ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise CodeAlgebraError("mixed inner spec needs at least one entry")
        for code, mult in self.entries:
            if mult < 1:
                raise CodeAlgebraError(f"multiplicity must be positive, got {mult}")
        first = self.entries[0][0]
        for code, _ in self.entries[1:]:
            if code.k != first.k:
                raise CodeAlgebraError(
                    f"mixed inner codes must share k: {first.k} vs {code.k}")
            if code.d != first.d:
                raise CodeAlgebraError(
                    f"mixed inner codes must share d: {first.d} vs {code.d}")
            if code.q != first.q:
                raise CodeAlgebraError(
                    f"mixed inner codes must share q: {first.q} vs {code.q}")

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def total_length(self) -> int:
        return sum(code.n * m for code, m in self.entries)

    @property
    def total_ebits(self) -> int:
        return sum(code.c * m for code, m in self.entries)

    @property
    def inner_k(self) -> int:
        return self.entries[0][0].k

    @property
    def inner_d(self) -> int:
        return self.entries[0][0].d

    def render(self) -> str:
        return "+".join(f"{m}x{code.render()}" for code, m in self.entries)

    def __str__(self) -> str:
        return self.render()


def _is_identity_outer(outer: CodeParams) -> bool:
    return (outer.n, outer.k, outer.d, outer.c) == (1, 1, 1, 0)


def concat(inner: CodeParams, outer: CodeParams) -> CodeParams:
    """Concatenate a binary inner code with an outer code over its logical alphabet.

    Returns ``[[n1*n2, k1*k2, d1*d2; c1*n2 + c2*k1]]`` with the product
    distance flagged as a lower bound.  The trivial ``[[1,1,1;0]]`` outer
    code acts as the identity and returns ``inner`` unchanged.
    """
    if inner.k < 1:
        raise CodeAlgebraError("inner code must encode at least one qubit (k1 >= 1)")
    if inner.q != 2:
        raise CodeAlgebraError(f"inner code must be binary, got q={inner.q}")
    if outer.q != 2 ** inner.k:
        raise CodeAlgebraError(
            f"alphabet mismatch: outer q={outer.q} but inner k={inner.k} needs q={2 ** inner.k}")
    if _is_identity_outer(outer):
        return inner
    exact = (inner.d == 1 and not inner.d_is_lower_bound
             and outer.d == 1 and not outer.d_is_lower_bound)
    return CodeParams(
        n=inner.n * outer.n,
        k=inner.k * outer.k,
        d=inner.d * outer.d,
        c=inner.c * outer.n + outer.c * inner.k,
        q=2,
        d_is_lower_bound=not exact,
    )


def concat_mixed(inners: MixedInnerSpec, outer: CodeParams) -> CodeParams:
    """Concatenate a multiset of inner codes, one per outer position.

    All inner codes must share ``(k, d)``; the result is
    ``[[sum n_i, k1*k2, d1*d2; sum c_i + c2*k1]]``.
    """
    k1 = inners.inner_k
    d1 = inners.inner_d
    if k1 < 1:
        raise CodeAlgebraError("inner codes must encode at least one qubit (k1 >= 1)")
    if inners.entries[0][0].q != 2:
        raise CodeAlgebraError(f"inner codes must be binary, got q={inners.entries[0][0].q}")
    if inners.total_multiplicity != outer.n:
        raise CodeAlgebraError(
            f"inner multiplicities sum to {inners.total_multiplicity}, outer length is {outer.n}")
    if outer.q != 2 ** k1:
        raise CodeAlgebraError(
            f"alphabet mismatch: outer q={outer.q} but inner k={k1} needs q={2 ** k1}")
    exact = (d1 == 1 and all(not code.d_is_lower_bound for code, _ in inners.entries)
             and outer.d == 1 and not outer.d_is_lower_bound)
    return CodeParams(
        n=inners.total_length,
        k=k1 * outer.k,
        d=d1 * outer.d,
        c=inners.total_ebits + outer.c * k1,
        q=2,
        d_is_lower_bound=not exact,
    )


def concat_asym(inner: AsymCodeParams, outer: AsymCodeParams,
                allow_any_shape: bool = False) -> AsymCodeParams:
    """Concatenate asymmetric codes of the repetition-inner / full-assistance shape.

    Expects ``inner = [[n1,1,n1/1;0]]`` and ``outer = [[n2,1,d2/d2;n2-1]]``
    with ``d2 = n2`` (odd ``n2``) or ``n2 - 1`` (even ``n2``); the result is
    ``[[n1*n2, 1, n1*d2/d2; n2-1]]``.  Set ``allow_any_shape`` to apply the
    raw product arithmetic to other inputs.
    """
    if not allow_any_shape:
        if not (inner.k == 1 and inner.c == 0 and inner.d_z == inner.n and inner.d_x == 1):
            raise CodeAlgebraError(
                f"inner {inner} is not of the form [[n1,1,n1/1;0]]; "
                "pass allow_any_shape=True to override")
        n2 = outer.n
        d2_wanted = n2 if n2 % 2 == 1 else n2 - 1
        if n2 < 2 or (n2 % 2 == 1 and n2 < 3):
            raise CodeAlgebraError(f"outer length must be >= 2 (>= 3 when odd), got {n2}")
        if not (outer.k == 1 and outer.c == n2 - 1
                and outer.d_z == d2_wanted and outer.d_x == d2_wanted):
            raise CodeAlgebraError(
                f"outer {outer} is not of the form [[n2,1,{d2_wanted}/{d2_wanted};{n2 - 1}]]; "
                "pass allow_any_shape=True to override")
    if inner.q != 2 or outer.q != 2 ** inner.k:
        raise CodeAlgebraError("asymmetric concatenation requires binary inner, matching outer alphabet")
    return AsymCodeParams(
        n=inner.n * outer.n,
        k=inner.k * outer.k,
        d_z=inner.d_z * outer.d_z,
        d_x=inner.d_x * outer.d_x,
        c=inner.c * outer.n + outer.c * inner.k,
        q=2,
    )


def better_than(candidate: CodeParams, baseline: CodeParams) -> bool:
    """True if ``candidate`` dominates ``baseline`` in (net transmission, distance).

    Both records must have the same length; domination means no coordinate is
    smaller and at least one is strictly larger.
    """
    if candidate.n != baseline.n:
        raise CodeAlgebraError(
            f"length mismatch: {candidate.n} vs {baseline.n}")
    return net_dominates(
        (candidate.net_transmission, candidate.d),
        (baseline.net_transmission, baseline.d),
    )


def net_dominates(candidate: tuple[int, int], baseline: tuple[int, int]) -> bool:
    """Strict domination of (net transmission, distance) pairs."""
    net_a, d_a = candidate
    net_b, d_b = baseline
    if net_a < net_b or d_a < d_b:
        return False
    return net_a > net_b or d_a > d_b


_CODE_RE = re.compile(
    r"^\[\[(\d+),(\d+),(≥|>=)?(\d+)(?:/(\d+))?(?:;(\d+))?\]\](?:_(\d+))?$")
_MIX_TERM_RE = re.compile(r"^(?:(\d+)[x×])?(\[\[.*?\]\](?:_\d+)?)$")


def parse_code(text: str) -> CodeParams | AsymCodeParams:
    """Parse the bracket notation, e.g. ``[[15,1,≥9;2]]`` or ``[[6,1,6/3;2]]_2``.

    Whitespace-insensitive; a missing ``;c`` means ``c = 0`` and a missing
    ``_q`` suffix means binary.  ``>=`` is accepted for ``≥``.
    """
    compact = re.sub(r"\s+", "", text)
    m = _CODE_RE.match(compact)
    if m is None:
        raise CodeAlgebraError(f"cannot parse code parameters from {text!r}")
    n, k = int(m.group(1)), int(m.group(2))
    lower = m.group(3) is not None
    c = int(m.group(6)) if m.group(6) is not None else 0
    q = int(m.group(7)) if m.group(7) is not None else 2
    if m.group(5) is not None:
        return AsymCodeParams(n=n, k=k, d_z=int(m.group(4)), d_x=int(m.group(5)),
                              c=c, q=q, d_is_lower_bound=lower)
    return CodeParams(n=n, k=k, d=int(m.group(4)), c=c, q=q, d_is_lower_bound=lower)


def parse_mixed(text: str) -> MixedInnerSpec:
    """Parse an inner-code multiset, e.g. ``16x[[4,2,2;0]]+1x[[5,2,2;0]]``."""
    compact = re.sub(r"\s+", "", text)
    entries = []
    for term in compact.split("+"):
        m = _MIX_TERM_RE.match(term)
        if m is None:
            raise CodeAlgebraError(f"cannot parse inner-code term {term!r}")
        mult = int(m.group(1)) if m.group(1) is not None else 1
        code = parse_code(m.group(2))
        if not isinstance(code, CodeParams):
            raise CodeAlgebraError("mixed inner codes must be symmetric records")
        entries.append((code, mult))
    return MixedInnerSpec(entries=tuple(entries))
