"""Message-vector helpers: Hamming metrics and lexicographic ranking.

Messages are tuples of canonical field-element indices.  The rank of a
message is its position in lexicographic order with the leftmost
coordinate most significant, i.e. ``rank = sum(u[i] * q**(k-1-i))``.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

from .errors import DimensionError


def hamming_weight(u: Sequence[int]) -> int:
    return sum(1 for x in u if x != 0)


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(1 for a, b in zip(u, v) if a != b)


def message_rank(u: Sequence[int], q: int) -> int:
    rank = 0
    for x in u:
        rank = rank * q + x
    return rank


def unrank_message(rank: int, q: int, k: int) -> tuple[int, ...]:
    out = [0] * k
    for i in range(k - 1, -1, -1):
        rank, out[i] = divmod(rank, q)
    return tuple(out)


def iter_messages(q: int, k: int) -> Iterator[tuple[int, ...]]:
    """All q^k messages in lexicographic (rank) order."""
    return product(range(q), repeat=k)


def messages_by_weight(q: int, k: int) -> list[tuple[int, ...]]:
    """All q^k messages sorted by (Hamming weight, lexicographic) order."""
    return sorted(iter_messages(q, k), key=lambda u: (hamming_weight(u), u))


def check_vector(u: Sequence[int], q: int, length: int, what: str = "vector") -> tuple[int, ...]:
    """Validate symbol range and length; return the vector as a tuple."""
    if len(u) != length:
        raise DimensionError(f"{what} has length {len(u)}, expected {length}")
    for x in u:
        if not (0 <= x < q):
            raise DimensionError(f"{what} symbol {x} outside [0, {q})")
    return tuple(u)
