"""Generic linear-code machinery over F_q.

A code is given by a full-rank k x n generator matrix; minimum distance
is found by enumerating all q^k codewords, which by linearity equals the
minimum nonzero codeword weight.  Enumeration refuses to start when q^k
exceeds the budget rather than falling back to sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import defaults
from .errors import BudgetExceeded, DimensionError, RankDeficient
from .gf import Field
from .vectors import check_vector, iter_messages


@dataclass(frozen=True)
class CodeSummary:
    """Shape [n, k, d]_q plus the systematic and MDS predicates."""

    n: int
    k: int
    q: int
    d: int
    is_systematic: bool
    is_mds: bool


class GeneratorMatrix:
    """k x n generator over a Field; rows checked for full rank."""

    __slots__ = ("field", "rows", "k", "n")

    def __init__(self, field: Field, rows: Sequence[Sequence[int]]):
        if not rows:
            raise DimensionError("generator matrix needs at least one row")
        k = len(rows)
        n = len(rows[0])
        if k > n:
            raise DimensionError(f"more rows ({k}) than columns ({n})")
        self.field = field
        self.rows = tuple(check_vector(row, field.q, n, "generator row") for row in rows)
        self.k = k
        self.n = n
        if _rank(field, [list(r) for r in self.rows]) < k:
            raise RankDeficient(f"generator rows are dependent (k={k}, n={n})")

    @property
    def q(self) -> int:
        return self.field.q

    def is_systematic(self) -> bool:
        """True iff the leading k x k block is the identity."""
        return all(
            self.rows[i][j] == (1 if i == j else 0)
            for i in range(self.k)
            for j in range(self.k)
        )

    def parity_columns(self) -> tuple[tuple[int, ...], ...]:
        """The rows of the trailing k x (n-k) block."""
        return tuple(row[self.k :] for row in self.rows)

    def __repr__(self) -> str:
        return f"GeneratorMatrix([{self.n},{self.k}]_{self.q})"


def _rank(field: Field, rows: list[list[int]]) -> int:
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                c = rows[r][col]
                rows[r] = [field.sub(x, field.mul(c, y)) for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def linear_encode(g: GeneratorMatrix, u: Sequence[int]) -> tuple[int, ...]:
    """Codeword u . G as a length-n tuple."""
    u = check_vector(u, g.q, g.k, "message")
    f = g.field
    out = [0] * g.n
    for x, row in zip(u, g.rows):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] = f.add(out[j], f.mul(x, y))
    return tuple(out)


def codewords(g: GeneratorMatrix) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(message, codeword) pairs for all q^k messages in rank order."""
    for u in iter_messages(g.q, g.k):
        yield u, linear_encode(g, u)


def min_distance(g: GeneratorMatrix, budget: int = defaults.ENUMERATION_BUDGET) -> int:
    """Minimum Hamming weight over the q^k - 1 nonzero codewords.

    Walks the messages in rank order, updating the running codeword only
    on the digits the base-q odometer changed.
    """
    q, k, n = g.q, g.k, g.n
    total = q**k
    if total > budget:
        raise BudgetExceeded(
            f"min_distance needs {total} codewords, budget is {budget}",
            required=total,
            budget=budget,
        )
    f = g.field
    add = f.add
    scaled = [
        {s: tuple(f.mul(s, x) for x in row) for s in range(q)} for row in g.rows
    ]
    wrap_delta = f.sub(0, q - 1)
    step_delta = [f.sub(d + 1, d) for d in range(q - 1)]
    digits = [0] * k
    cw = [0] * n
    best = n + 1
    for _ in range(total - 1):
        i = k - 1
        while digits[i] == q - 1:
            row = scaled[i][wrap_delta]
            for j in range(n):
                cw[j] = add(cw[j], row[j])
            digits[i] = 0
            i -= 1
        row = scaled[i][step_delta[digits[i]]]
        for j in range(n):
            cw[j] = add(cw[j], row[j])
        digits[i] += 1
        w = n - cw.count(0)
        if w < best:
            best = w
    return best


def summarize(g: GeneratorMatrix, budget: int = defaults.ENUMERATION_BUDGET) -> CodeSummary:
    """Full [n, k, d]_q summary with systematic and MDS predicates."""
    d = min_distance(g, budget)
    return CodeSummary(
        n=g.n,
        k=g.k,
        q=g.q,
        d=d,
        is_systematic=g.is_systematic(),
        is_mds=d == g.n - g.k + 1,
    )
