"""Partitions, beta-sets, and 2-core/2-quotient machinery.

A partition is a tuple of weakly decreasing positive integers; a beta-set
is a tuple of strictly decreasing non-negative integers.  Both are kept as
plain tuples so values hash, compare, and print without ceremony.  All
functions are pure.
"""

from __future__ import annotations

import functools
from typing import NamedTuple


class Bipartition(NamedTuple):
    """An ordered pair of partitions."""

    top: tuple
    bottom: tuple

    @property
    def size(self):
        return sum(self.top) + sum(self.bottom)


def check_partition(la) -> tuple:
    """Validate and canonicalize a partition given as any iterable."""
    la = tuple(la)
    for i, part in enumerate(la):
        if part <= 0:
            raise ValueError(f"partition parts must be positive: {la}")
        if i > 0 and la[i - 1] < part:
            raise ValueError(f"partition parts must weakly decrease: {la}")
    return la


def check_beta(entries) -> tuple:
    """Validate and canonicalize a beta-set; entries are sorted descending."""
    entries = tuple(sorted(entries, reverse=True))
    for i, x in enumerate(entries):
        if x < 0:
            raise ValueError(f"beta-set entries must be non-negative: {entries}")
        if i > 0 and entries[i - 1] == x:
            raise ValueError(f"beta-set entries must be distinct: {entries}")
    return entries


def transpose_partition(la) -> tuple:
    """Transpose (conjugate) of a partition: column lengths of the diagram."""
    la = check_partition(la)
    if not la:
        return ()
    return tuple(sum(1 for part in la if part >= j) for j in range(1, la[0] + 1))


def shift_le(la, mu) -> bool:
    """The shifted containment relation: mu_i - 1 <= la_i <= mu_i for all i.

    Both sides are zero-padded to a common length, so a strictly longer
    left side fails unless its extra parts vanish.
    """
    la, mu = check_partition(la), check_partition(mu)
    n = max(len(la), len(mu))
    padded_la = la + (0,) * (n - len(la))
    padded_mu = mu + (0,) * (n - len(mu))
    return all(m - 1 <= l <= m for l, m in zip(padded_la, padded_mu))


def upsilon_beta(A) -> tuple:
    """Subtract the staircase from a beta-set, dropping trailing zeros."""
    A = check_beta(A)
    m = len(A)
    parts = [a - (m - 1 - i) for i, a in enumerate(A)]
    return tuple(p for p in parts if p > 0)


def beta_of_partition(la, m: int) -> tuple:
    """The beta-set of a partition with exactly m entries (staircase added)."""
    la = check_partition(la)
    if m < len(la):
        raise ValueError(f"need at least {len(la)} entries for {la}, got {m}")
    padded = la + (0,) * (m - len(la))
    return tuple(part + (m - 1 - i) for i, part in enumerate(padded))


def beta_shift(A, k: int) -> tuple:
    """Add k to every entry and adjoin the staircase k-1, ..., 1, 0."""
    A = check_beta(A)
    if k < 0:
        raise ValueError("shift amount must be non-negative")
    return tuple(sorted([a + k for a in A] + list(range(k)), reverse=True))


def beta_reduce(A) -> tuple:
    """The minimal beta-set with the same partition (inverse of beta_shift)."""
    la = upsilon_beta(A)
    return beta_of_partition(la, len(la))


def two_core(la) -> tuple:
    """The partition left after removing all 2-hooks; always a staircase.

    On the beta-set, removing a 2-hook replaces an entry x by x - 2 when
    x - 2 is absent.  The largest movable entry is taken first; the result
    is independent of the order (asserted by tests).
    """
    la = check_partition(la)
    X = set(beta_of_partition(la, len(la)))
    while True:
        movable = [x for x in X if x >= 2 and x - 2 not in X]
        if not movable:
            return upsilon_beta(tuple(X))
        x = max(movable)
        X.remove(x)
        X.add(x - 2)


def two_quotient_split(X):
    """Split a beta-set into halved even entries and halved odd entries."""
    X = check_beta(X)
    X0 = tuple(x // 2 for x in X if x % 2 == 0)
    X1 = tuple((x - 1) // 2 for x in X if x % 2 == 1)
    return X0, X1


def beta_shift_le(A, B) -> bool:
    """True iff transpose(upsilon(A)) is shift-contained in transpose(upsilon(B)).

    Decided by the interleaving criterion.  The criterion is stated for
    representatives whose sizes differ by 0 or 1, so the smaller side is
    beta-shifted first; shifting does not change the underlying partitions.
    With |B| = |A| = m the condition is

        b_1 >= a_1 > b_2 >= a_2 > ... > b_m >= a_m,

    and with |B| = |A| + 1 it is

        b_1 > a_1 >= b_2 > a_2 >= ... > a_m >= b_{m+1}.
    """
    A, B = check_beta(A), check_beta(B)
    diff = len(B) - len(A)
    if diff < 0:
        B = beta_shift(B, -diff)
        diff = 0
    elif diff > 1:
        A = beta_shift(A, diff - 1)
        diff = 1
    m = len(A)
    if diff == 0:
        return all(B[i] >= A[i] for i in range(m)) and all(
            A[i] > B[i + 1] for i in range(m - 1)
        )
    return all(B[i] > A[i] for i in range(m)) and all(
        A[i] >= B[i + 1] for i in range(m)
    )


@functools.cache
def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n with parts at most max_part, largest part first."""
    if n < 0:
        return ()
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


@functools.cache
def bipartitions_of(n: int) -> tuple:
    """All bipartitions of n, top size descending, each side reverse-lex."""
    result = []
    for a in range(n, -1, -1):
        for mu in partitions_of(a):
            for nu in partitions_of(n - a):
                result.append(Bipartition(mu, nu))
    return tuple(result)


def staircase(d: int) -> tuple:
    """The staircase partition [d, d-1, ..., 1]."""
    if d < 0:
        raise ValueError("staircase length must be non-negative")
    return tuple(range(d, 0, -1))


def format_partition(la) -> str:
    """Comma-joined parts, with "-" for the empty partition."""
    return ",".join(str(x) for x in la) if la else "-"


def parse_partition(text: str) -> tuple:
    """Inverse of format_partition."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    return check_partition(int(piece) for piece in text.split(","))
