"""Function-correcting core: function tables, systematic schemes, the
distance-condition verifier, and the exhaustive function-value decoder.

A scheme maps a message u to the codeword (u, p(u)); it protects a
function f against t symbol errors when every pair of messages with
different f-values lands at codeword distance >= 2t+1.  Verification and
decoding are exhaustive and budget-guarded: at desk scale the q^k
codeword list is the ground truth, not an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import defaults
from .codes import GeneratorMatrix
from .errors import (
    BeyondRadius,
    BudgetExceeded,
    DimensionError,
    NotSystematic,
    UnknownFunction,
)
from .gf import Field, prime_power_split
from .vectors import (
    check_vector,
    hamming_weight,
    iter_messages,
    message_rank,
    messages_by_weight,
    unrank_message,
)


@dataclass(frozen=True)
class FunctionTable:
    """Explicit f: F_q^k -> labels, indexed by lexicographic message rank."""

    q: int
    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        prime_power_split(self.q)
        if self.k < 1:
            raise DimensionError(f"k must be at least 1, got {self.k}")
        expected = self.q**self.k
        if len(self.values) != expected:
            raise DimensionError(
                f"function table has {len(self.values)} entries, expected {expected}"
            )
        if any(v < 0 for v in self.values):
            raise DimensionError("function labels must be non-negative integers")

    @property
    def image_size(self) -> int:
        return len(set(self.values))

    def label(self, u: Sequence[int]) -> int:
        check_vector(u, self.q, self.k, "message")
        return self.values[message_rank(u, self.q)]


BUILTIN_NAMES = ("or", "constant", "identity", "hamming_weight", "linear", "threshold")


def builtin_function(name: str, q: int, k: int, aux=None) -> FunctionTable:
    """Named function families over F_q^k.

    ``linear`` takes a length-k coefficient vector as aux and labels each
    message by the field index of the dot product; ``threshold`` takes an
    integer aux and indicates Hamming weight >= aux.
    """
    prime_power_split(q)
    if k < 1:
        raise DimensionError(f"k must be at least 1, got {k}")
    if name == "or":
        values = [0 if all(x == 0 for x in u) else 1 for u in iter_messages(q, k)]
    elif name == "constant":
        values = [0] * q**k
    elif name == "identity":
        values = list(range(q**k))
    elif name == "hamming_weight":
        values = [hamming_weight(u) for u in iter_messages(q, k)]
    elif name == "linear":
        if aux is None or len(tuple(aux)) != k:
            raise DimensionError(f"linear needs a length-{k} coefficient vector as aux")
        coeffs = check_vector(tuple(aux), q, k, "coefficient vector")
        f = Field(q)
        values = []
        for u in iter_messages(q, k):
            acc = 0
            for a, x in zip(coeffs, u):
                acc = f.add(acc, f.mul(a, x))
            values.append(acc)
    elif name == "threshold":
        if aux is None or isinstance(aux, (tuple, list)) and len(aux) != 1:
            raise DimensionError("threshold needs a single integer aux")
        theta = int(aux[0]) if isinstance(aux, (tuple, list)) else int(aux)
        values = [1 if hamming_weight(u) >= theta else 0 for u in iter_messages(q, k)]
    else:
        raise UnknownFunction(f"no built-in function named {name!r}")
    return FunctionTable(q=q, k=k, values=tuple(values))


class FccScheme:
    """Systematic encoder u -> (u, p(u)); linear or explicit-table parity.

    The linear variant wraps a [I_k | P] generator; the tabular variant
    stores one length-r parity vector per message rank.
    """

    __slots__ = ("kind", "field", "q", "k", "r", "generator", "parity_table", "_cw_cache")

    def __init__(
        self,
        kind: str,
        field: Field,
        k: int,
        r: int,
        generator: GeneratorMatrix | None = None,
        parity_table: tuple[tuple[int, ...], ...] | None = None,
    ):
        self.kind = kind
        self.field = field
        self.q = field.q
        self.k = k
        self.r = r
        self.generator = generator
        self.parity_table = parity_table
        self._cw_cache: list[tuple[int, ...]] | None = None

    @classmethod
    def linear(cls, generator: GeneratorMatrix) -> "FccScheme":
        if not generator.is_systematic():
            raise NotSystematic("linear schemes need an [I_k | P] generator")
        return cls(
            kind="linear",
            field=generator.field,
            k=generator.k,
            r=generator.n - generator.k,
            generator=generator,
        )

    @classmethod
    def tabular(cls, q: int, k: int, parity_rows: Sequence[Sequence[int]]) -> "FccScheme":
        field = Field(q)
        if len(parity_rows) != q**k:
            raise DimensionError(
                f"parity table has {len(parity_rows)} rows, expected {q**k}"
            )
        r = len(parity_rows[0]) if parity_rows else 0
        table = tuple(
            check_vector(row, q, r, "parity row") for row in parity_rows
        )
        return cls(kind="table", field=field, k=k, r=r, parity_table=table)

    @property
    def n(self) -> int:
        return self.k + self.r

    def parity(self, u: Sequence[int]) -> tuple[int, ...]:
        u = check_vector(u, self.q, self.k, "message")
        if self.kind == "table":
            return self.parity_table[message_rank(u, self.q)]
        f = self.field
        out = [0] * self.r
        for x, row in zip(u, self.generator.parity_columns()):
            if x:
                for j, y in enumerate(row):
                    if y:
                        out[j] = f.add(out[j], f.mul(x, y))
        return tuple(out)

    def __repr__(self) -> str:
        return f"FccScheme({self.kind}, q={self.q}, k={self.k}, r={self.r})"


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of the pairwise distance-condition check."""

    ok: bool
    violating_pair: tuple[tuple[int, ...], tuple[int, ...]] | None
    distance: int | None
    pairs_checked: int


@dataclass(frozen=True)
class DecodeOutcome:
    """Function value recovered from a received vector."""

    label: int
    distance: int
    within_radius: bool


def fcc_encode(scheme: FccScheme, u: Sequence[int]) -> tuple[int, ...]:
    """Codeword (u, p(u)) of length k + r."""
    u = check_vector(u, scheme.q, scheme.k, "message")
    return u + scheme.parity(u)


def _all_parities(scheme: FccScheme) -> list[tuple[int, ...]]:
    if scheme.kind == "table":
        return list(scheme.parity_table)
    return [scheme.parity(u) for u in iter_messages(scheme.q, scheme.k)]


def _check_compatible(scheme: FccScheme, f: FunctionTable) -> None:
    if scheme.q != f.q or scheme.k != f.k:
        raise DimensionError(
            f"scheme is over (q={scheme.q}, k={scheme.k}) "
            f"but function over (q={f.q}, k={f.k})"
        )


def verify_fcc(
    scheme: FccScheme,
    f: FunctionTable,
    t: int,
    budget: int = defaults.ENUMERATION_BUDGET,
) -> VerificationResult:
    """Check d(c(u), c(v)) >= 2t+1 for every pair with f(u) != f(v).

    Scans unordered pairs in lexicographic (rank, rank) order and reports
    the first violation; pairs with equal labels are skipped unchecked.
    """
    _check_compatible(scheme, f)
    total = scheme.q**scheme.k
    if total > budget:
        raise BudgetExceeded(
            f"verification needs {total} messages, budget is {budget}",
            required=total,
            budget=budget,
        )
    msgs = list(iter_messages(scheme.q, scheme.k))
    labels = f.values
    parities = _all_parities(scheme)
    need = 2 * t + 1
    checked = 0
    for i in range(total):
        li = labels[i]
        mi = msgs[i]
        pi = parities[i]
        for j in range(i + 1, total):
            if labels[j] == li:
                continue
            checked += 1
            d = 0
            for a, b in zip(mi, msgs[j]):
                if a != b:
                    d += 1
            if d < need:
                for a, b in zip(pi, parities[j]):
                    if a != b:
                        d += 1
                        if d == need:
                            break
            if d < need:
                return VerificationResult(
                    ok=False,
                    violating_pair=(mi, msgs[j]),
                    distance=d,
                    pairs_checked=checked,
                )
    return VerificationResult(ok=True, violating_pair=None, distance=None, pairs_checked=checked)


def iter_scheme_codewords(scheme: FccScheme) -> Iterator[tuple[int, tuple[int, ...]]]:
    """(rank, codeword) pairs in message-rank order, cached when small."""
    if scheme._cw_cache is not None:
        yield from enumerate(scheme._cw_cache)
        return
    total = scheme.q**scheme.k
    cache: list[tuple[int, ...]] | None = [] if total <= 65536 else None
    for rank, u in enumerate(iter_messages(scheme.q, scheme.k)):
        cw = u + scheme.parity(u)
        if cache is not None:
            cache.append(cw)
        yield rank, cw
    if cache is not None:
        scheme._cw_cache = cache


def fcc_decode(
    scheme: FccScheme,
    f: FunctionTable,
    t: int,
    y: Sequence[int],
    strict: bool = True,
    budget: int = defaults.ENUMERATION_BUDGET,
) -> DecodeOutcome:
    """Label of the nearest codeword to y (ties to the lowest rank).

    For a scheme that passes verification and at most t symbol errors the
    label equals f at the transmitted message.  In strict mode a nearest
    distance beyond t raises BeyondRadius instead of guessing.
    """
    _check_compatible(scheme, f)
    y = check_vector(y, scheme.q, scheme.n, "received vector")
    total = scheme.q**scheme.k
    if total > budget:
        raise BudgetExceeded(
            f"decoding needs {total} codewords, budget is {budget}",
            required=total,
            budget=budget,
        )
    best_rank = 0
    best_d = scheme.n + 1
    for rank, cw in iter_scheme_codewords(scheme):
        d = 0
        for a, b in zip(cw, y):
            if a != b:
                d += 1
                if d >= best_d:
                    break
        if d < best_d:
            best_rank, best_d = rank, d
            if d == 0:
                break
    within = best_d <= t
    if strict and not within:
        raise BeyondRadius(
            f"nearest codeword at distance {best_d} > t = {t}", distance=best_d
        )
    return DecodeOutcome(label=f.values[best_rank], distance=best_d, within_radius=within)


def find_critical_pair(
    f: FunctionTable, budget: int = defaults.ENUMERATION_BUDGET
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First (weight, lex)-ordered pair at Hamming distance 1 with
    different labels, or None when f is constant.

    Scans the weight shells outward from the all-zero message; a hit is
    guaranteed for every non-constant f because the shells chain any two
    messages through single-coordinate steps.
    """
    total = f.q**f.k
    if total > budget:
        raise BudgetExceeded(
            f"critical-pair scan needs {total} messages, budget is {budget}",
            required=total,
            budget=budget,
        )
    seq = messages_by_weight(f.q, f.k)
    pos = {u: i for i, u in enumerate(seq)}
    for i, u in enumerate(seq):
        lu = f.values[message_rank(u, f.q)]
        best_j = None
        for coord in range(f.k):
            for val in range(f.q):
                if val == u[coord]:
                    continue
                v = u[:coord] + (val,) + u[coord + 1 :]
                j = pos[v]
                if j > i and f.values[message_rank(v, f.q)] != lu:
                    if best_j is None or j < best_j:
                        best_j = j
        if best_j is not None:
            return u, seq[best_j]
    return None


def identity_scheme(q: int, k: int) -> FccScheme:
    """The r = 0 scheme c(u) = u."""
    return FccScheme.tabular(q, k, [()] * q**k)
