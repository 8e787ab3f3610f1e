"""Symbols: ordered pairs of beta-sets with rank, defect, and family structure.

A symbol parametrizes a unipotent character of a finite symplectic or even
orthogonal group through its rank and its defect class mod 4.  This module
also provides the symbol attached to a single partition (the unitary case),
the special closure used by family/cell decompositions, and the a-invariant
of a special symbol.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .combinatorics import (
    Bipartition,
    beta_of_partition,
    bipartitions_of,
    check_beta,
    check_partition,
    two_core,
    two_quotient_split,
    upsilon_beta,
)


@dataclass(frozen=True)
class Symbol:
    """An ordered pair of beta-sets.  Equality is structural.

    Symbols are not reduced automatically; use reduce_symbol to pass to the
    canonical representative of the shift-equivalence class.
    """

    top: tuple
    bottom: tuple

    def __post_init__(self):
        object.__setattr__(self, "top", check_beta(self.top))
        object.__setattr__(self, "bottom", check_beta(self.bottom))

    def transpose(self) -> "Symbol":
        return Symbol(self.bottom, self.top)

    def __str__(self):
        return format_symbol(self)


class SymbolFamily(enum.Enum):
    SP = "Sp"
    O_PLUS = "OPlus"
    O_MINUS = "OMinus"
    UNITARY_CONTEXT = "UnitaryContext"


@dataclass(frozen=True)
class EntrySubset:
    """A row-tagged set of symbol entries (a subset of the singles of Z)."""

    top: frozenset
    bottom: frozenset

    def __post_init__(self):
        object.__setattr__(self, "top", frozenset(self.top))
        object.__setattr__(self, "bottom", frozenset(self.bottom))

    @property
    def size(self) -> int:
        return len(self.top) + len(self.bottom)

    def intersection_size(self, other: "EntrySubset") -> int:
        return len(self.top & other.top) + len(self.bottom & other.bottom)


EMPTY_SUBSET = EntrySubset(frozenset(), frozenset())


def format_symbol(L: Symbol) -> str:
    def row(entries):
        return ",".join(str(x) for x in entries) if entries else "-"

    return f"{row(L.top)}|{row(L.bottom)}"


def parse_symbol(text: str) -> Symbol:
    """Parse the row syntax "3,0|2"; "-" stands for an empty row."""
    parts = text.split("|")
    if len(parts) != 2:
        raise ValueError(f"symbol text needs exactly one '|': {text!r}")

    def row(s):
        s = s.strip()
        if s in ("-", ""):
            return ()
        return tuple(int(x) for x in s.split(","))

    return Symbol(row(parts[0]), row(parts[1]))


def rank(L: Symbol) -> int:
    """Sum of all entries minus the floor square of half the entry count less one."""
    k = len(L.top) + len(L.bottom) - 1
    return sum(L.top) + sum(L.bottom) - (k * k // 4 if k > 0 else 0)


def defect(L: Symbol) -> int:
    return len(L.top) - len(L.bottom)


def reduce_symbol(L: Symbol) -> Symbol:
    """Strip shared zeros: while both rows contain 0, drop it and decrement."""
    top, bottom = list(L.top), list(L.bottom)
    while top and bottom and top[-1] == 0 and bottom[-1] == 0:
        top = [x - 1 for x in top[:-1]]
        bottom = [x - 1 for x in bottom[:-1]]
    return Symbol(tuple(top), tuple(bottom))


def shift_symbol(L: Symbol, k: int) -> Symbol:
    """The equivalent symbol with k extra staircase steps on both rows."""
    from .combinatorics import beta_shift

    return Symbol(beta_shift(L.top, k), beta_shift(L.bottom, k))


def _delta_row(A) -> int:
    return A[0] - len(A) + 1 if A else 0


def delta_symbol(L: Symbol) -> int:
    """The distance-from-cuspidal statistic, summed over both rows.

    Invariant under transpose and under the shift equivalence.
    """
    return _delta_row(L.top) + _delta_row(L.bottom)


def is_cuspidal(L: Symbol) -> bool:
    """True iff the rank meets its lower bound for the defect.

    Two equivalent tests are run and must agree: rank == floor((def/2)^2),
    and delta of the reduced symbol == 0.
    """
    by_rank = rank(L) == defect(L) ** 2 // 4
    by_delta = delta_symbol(reduce_symbol(L)) == 0
    if by_rank != by_delta:
        raise AssertionError(f"cuspidality criteria disagree on {L}")
    return by_rank


def is_special(L: Symbol) -> bool:
    """True iff defect is 0 or 1 and the two rows interleave descending."""
    d = defect(L)
    if d not in (0, 1):
        return False
    a, b = L.top, L.bottom
    for i in range(len(b)):
        if a[i] < b[i]:
            return False
        if i + 1 < len(a) and b[i] < a[i + 1]:
            return False
    return True


def family_of(L: Symbol) -> SymbolFamily:
    r = defect(L) % 4
    if r == 1:
        return SymbolFamily.SP
    if r == 0:
        return SymbolFamily.O_PLUS
    if r == 2:
        return SymbolFamily.O_MINUS
    raise ValueError(f"defect 3 mod 4 has no symplectic/orthogonal family: {L}")


def symbol_of_partition(la) -> Symbol:
    """The symbol attached to one partition via its exact-length beta-set.

    The beta-set of la with len(la) entries splits into halved evens X(0)
    and halved odds X(1); the rows are (X(0) | X(1)) when len(la) is odd
    and swapped when even.  The result is always reduced.
    """
    la = check_partition(la)
    X = beta_of_partition(la, len(la))
    X0, X1 = two_quotient_split(X)
    if len(la) % 2 == 1:
        return Symbol(X0, X1)
    return Symbol(X1, X0)


def upsilon_symbol(L: Symbol) -> Bipartition:
    return Bipartition(upsilon_beta(L.top), upsilon_beta(L.bottom))


def partition_of_core_and_quotient(d: int, bip: Bipartition):
    """The unique partition with staircase 2-core of length d and the given
    row partitions of its symbol.  Inverse of
    la -> (len(two_core(la)), upsilon_symbol(symbol_of_partition(la))).
    """
    if d < 0:
        raise ValueError("core length must be non-negative")
    mu, nu = check_partition(bip.top), check_partition(bip.bottom)
    r, s = len(mu), len(nu)
    if d % 2 == 0:
        if r - s > d:
            X0, X1 = beta_of_partition(mu, r), beta_of_partition(nu, r - d - 1)
        else:
            X1, X0 = beta_of_partition(mu, s + d), beta_of_partition(nu, s)
    else:
        if r - s >= -d:
            X0, X1 = beta_of_partition(mu, r), beta_of_partition(nu, r + d)
        else:
            X1, X0 = beta_of_partition(mu, s - d - 1), beta_of_partition(nu, s)
    X = tuple(sorted([2 * x for x in X0] + [2 * x + 1 for x in X1], reverse=True))
    return upsilon_beta(X)


def defect_vs_core(la) -> int:
    """Defect of symbol_of_partition(la) from the parity table in terms of
    len(la) and the 2-core length; asserted against the direct computation.
    """
    la = check_partition(la)
    core_len = len(two_core(la))
    if core_len % 2 == 0:
        value = core_len if len(la) % 2 == 0 else core_len + 1
    else:
        value = -core_len if len(la) % 2 == 1 else -core_len - 1
    direct = defect(symbol_of_partition(la))
    if value != direct:
        raise AssertionError(f"defect table disagrees with construction on {la}")
    return value


def symbol_from_bipartition(bip: Bipartition, d: int) -> Symbol:
    """The reduced symbol of defect d whose rows carry the given partitions."""
    mu, nu = check_partition(bip.top), check_partition(bip.bottom)
    m2 = max(len(nu), len(mu) - d, 0)
    m1 = m2 + d
    return Symbol(beta_of_partition(mu, m1), beta_of_partition(nu, m2))


def enumerate_symbols(n: int, d: int):
    """All reduced symbols of rank n and defect d, via the bipartition
    bijection at offset floor((d/2)^2).  Empty when the offset exceeds n.
    """
    k = n - d * d // 4
    if k < 0:
        return ()
    return tuple(symbol_from_bipartition(bip, d) for bip in bipartitions_of(k))


def _family_defects(n: int, f: SymbolFamily):
    residue = {SymbolFamily.SP: 1, SymbolFamily.O_PLUS: 0, SymbolFamily.O_MINUS: 2}
    if f not in residue:
        raise ValueError(f"enumerable families are Sp, OPlus, OMinus: {f}")
    bound = 2 * math.isqrt(n + 1) + 4
    defects = [
        d for d in range(-bound, bound + 1) if d % 4 == residue[f] and d * d // 4 <= n
    ]
    return sorted(defects, key=lambda d: (abs(d), 0 if d >= 0 else 1))


def enumerate_family(n: int, f: SymbolFamily):
    """All symbols of rank n in the named family, defects by increasing
    absolute value with the positive sign first.
    """
    result = []
    for d in _family_defects(n, f):
        result.extend(enumerate_symbols(n, d))
    return tuple(result)


def special_closure(L: Symbol):
    """The unique special symbol Z with the same entry multiset, plus the
    entry subset M of singles with Lambda_M == L.

    The combined entries are dealt alternately top, bottom, top, ... in
    descending order, which forces the special interleaving; a value that
    appears in both rows lands once in each.  Defined for defects that are
    even or congruent to 1 mod 4.
    """
    d = defect(L)
    if d % 2 == 1 and d % 4 != 1:
        raise ValueError(f"defect 3 mod 4 symbols have no special closure: {L}")
    entries = sorted(L.top + L.bottom, reverse=True)
    Z = Symbol(tuple(entries[0::2]), tuple(entries[1::2]))
    doubled = frozenset(Z.top) & frozenset(Z.bottom)
    m_top = frozenset(Z.top) - frozenset(L.top)
    m_bottom = frozenset(Z.bottom) - frozenset(L.bottom)
    M = EntrySubset(m_top, m_bottom)
    rebuilt_top = (frozenset(Z.top) - m_top) | m_bottom
    rebuilt_bottom = (frozenset(Z.bottom) - m_bottom) | m_top
    if (
        m_top & doubled
        or m_bottom & doubled
        or rebuilt_top != frozenset(L.top)
        or rebuilt_bottom != frozenset(L.bottom)
    ):
        raise RuntimeError(f"no special closure decomposition found for {L}")
    return Z, M


def singles_of(Z: Symbol) -> EntrySubset:
    """The row-tagged unpaired entries of a special symbol."""
    doubled = frozenset(Z.top) & frozenset(Z.bottom)
    return EntrySubset(frozenset(Z.top) - doubled, frozenset(Z.bottom) - doubled)


def a_invariant(Z: Symbol) -> int:
    """The a-value of a special defect-1 symbol: pairwise minima within and
    across the rows, less a cubic correction in the bottom length.
    """
    if defect(Z) != 1 or not is_special(Z):
        raise ValueError(f"a-invariant needs a special symbol of defect 1: {Z}")
    a, b = Z.top, Z.bottom
    m = len(b)
    total = sum(min(a[i], a[j]) for i in range(len(a)) for j in range(i + 1, len(a)))
    total += sum(min(b[i], b[j]) for i in range(m) for j in range(i + 1, m))
    total += sum(min(x, y) for x in a for y in b)
    return total - m * (m - 1) * (4 * m + 1) // 6


def a_of_symbol(L: Symbol) -> int:
    """The a-value of any symbol whose special closure has defect 1."""
    Z, _ = special_closure(L)
    return a_invariant(Z)
