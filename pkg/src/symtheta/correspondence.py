"""Theta-correspondence relations on symbols and first-occurrence ranks.

The unipotent part of a Weil character pairs symbols through two cross-row
beta-set comparisons.  The comparisons are made at matching row lengths,
which confines the defect sum of a related pair to a band of width two;
combined with the family constraint this forces an exact defect law in the
symplectic/orthogonal case and a two-value defect window in the unitary
case.  First-occurrence ranks come from closed-form minimal partners.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .combinatorics import (
    beta_shift_le,
    check_partition,
    format_partition,
    partitions_of,
    staircase,
)
from .symbols import (
    Symbol,
    SymbolFamily,
    defect,
    delta_symbol,
    enumerate_family,
    family_of,
    format_symbol,
    rank,
    reduce_symbol,
    symbol_of_partition,
)


class PairKind(enum.Enum):
    """Which dual-pair family a correspondence table belongs to."""

    SP_O_PLUS = "SpOPlus"
    SP_O_MINUS = "SpOMinus"
    UNITARY_PLUS = "UnitaryPlus"
    UNITARY_MINUS = "UnitaryMinus"


class Tower(enum.Enum):
    """Witt-tower selector for first-occurrence ranks."""

    O_PLUS = "OPlus"
    O_MINUS = "OMinus"
    SP_FROM_O_EVEN = "SpFromOEven"


@dataclass(frozen=True)
class CorrespondencePair:
    """One related pair from a unipotent Weil decomposition.

    left/right are Symbols for the symplectic/orthogonal kinds and
    partitions (tuples) for the unitary kinds.
    """

    left: object
    right: object
    pair_kind: PairKind

    def texts(self) -> tuple:
        if self.pair_kind in (PairKind.SP_O_PLUS, PairKind.SP_O_MINUS):
            return (format_symbol(self.left), format_symbol(self.right))
        return (format_partition(self.left), format_partition(self.right))


def in_b_plus(L: Symbol, Lp: Symbol) -> bool:
    """Membership in the plus relation.

    Rows are compared at matching lengths: the bottom of each symbol
    against the top of the other, with the defect sum confined to {0,1,2}.
    The relation is symmetric in its two arguments.
    """
    if defect(L) + defect(Lp) not in (0, 1, 2):
        return False
    return beta_shift_le(L.bottom, Lp.top) and beta_shift_le(Lp.bottom, L.top)


def in_b_minus(L: Symbol, Lp: Symbol) -> bool:
    """Membership in the minus relation: top rows against bottom rows."""
    if defect(L) + defect(Lp) not in (-2, -1, 0):
        return False
    return beta_shift_le(L.top, Lp.bottom) and beta_shift_le(Lp.top, L.bottom)


def in_b_sp_o(L: Symbol, Lp: Symbol, eps: int) -> bool:
    """The symplectic/orthogonal refinement.

    True iff L has defect 1 mod 4, Lp lies in the O^eps family, and the
    pair is related by the sign-eps relation.  A true answer forces
    def(Lp) = -def(L) + eps.
    """
    try:
        left_family = family_of(L)
        right_family = family_of(Lp)
    except ValueError:
        return False
    wanted = SymbolFamily.O_PLUS if eps > 0 else SymbolFamily.O_MINUS
    if left_family != SymbolFamily.SP or right_family != wanted:
        return False
    return in_b_plus(L, Lp) if eps > 0 else in_b_minus(L, Lp)


def in_b_uu(la, lap):
    """The unitary-unitary refinement on a pair of partitions.

    Returns +1 or -1 when the attached symbols are related with the defect
    of the right symbol inside the corresponding two-value window, and None
    otherwise.  The two windows are disjoint, so the sign is unambiguous.
    """
    L = symbol_of_partition(la)
    Lp = symbol_of_partition(lap)
    d = defect(L)
    dp = defect(Lp)
    if d % 2 == 0:
        plus_window = (-d, -d + 1)
        minus_window = (-d - 2, -d - 1)
    else:
        plus_window = (-d + 1, -d + 2)
        minus_window = (-d - 1, -d)
    if dp in plus_window and in_b_plus(L, Lp):
        return 1
    if dp in minus_window and in_b_minus(L, Lp):
        return -1
    return None


def weil_unipotent_pairs(n: int, n_prime: int, kind) -> tuple:
    """All related pairs between the rank-n and rank-n' families of a kind.

    Output is sorted lexicographically on (left text, right text).
    """
    kind = PairKind(kind)
    pairs = []
    if kind in (PairKind.SP_O_PLUS, PairKind.SP_O_MINUS):
        eps = 1 if kind == PairKind.SP_O_PLUS else -1
        right_family = SymbolFamily.O_PLUS if eps > 0 else SymbolFamily.O_MINUS
        for L in enumerate_family(n, SymbolFamily.SP):
            for Lp in enumerate_family(n_prime, right_family):
                if in_b_sp_o(L, Lp, eps):
                    pairs.append(CorrespondencePair(L, Lp, kind))
    else:
        sign = 1 if kind == PairKind.UNITARY_PLUS else -1
        for la in partitions_of(n):
            for lap in partitions_of(n_prime):
                if in_b_uu(la, lap) == sign:
                    pairs.append(CorrespondencePair(la, lap, kind))
    return tuple(sorted(pairs, key=CorrespondencePair.texts))


def theta_of_sp(L: Symbol, eps: int, n_prime: int) -> tuple:
    """The rank-n' slice of the partner set of a defect-1-mod-4 symbol."""
    family = SymbolFamily.O_PLUS if eps > 0 else SymbolFamily.O_MINUS
    return tuple(
        Lp for Lp in enumerate_family(n_prime, family) if in_b_sp_o(L, Lp, eps)
    )


def theta_of_even_o(Lp: Symbol, n: int) -> tuple:
    """The rank-n slice of the partner set of an even-orthogonal symbol."""
    eps = 1 if family_of(Lp) == SymbolFamily.O_PLUS else -1
    return tuple(
        L for L in enumerate_family(n, SymbolFamily.SP) if in_b_sp_o(L, Lp, eps)
    )


def _theta0_cases(a: tuple, b: tuple, eps: int) -> Symbol:
    # Shared case analysis: drop the largest entry of one row and move it
    # across, or, when that row is empty, increment the other row and
    # adjoin 0.  Which row plays which role depends on the sign.
    if eps > 0:
        if a:
            return Symbol(b, a[1:])
        return Symbol(tuple(x + 1 for x in b) + (0,), ())
    if b:
        return Symbol(b[1:], a)
    return Symbol((), tuple(x + 1 for x in a) + (0,))


def theta0_sp(L: Symbol, eps: int) -> Symbol:
    """The minimal-rank partner of a defect-1-mod-4 symbol on a tower."""
    if family_of(L) != SymbolFamily.SP:
        raise ValueError(f"expected a symbol of defect 1 mod 4, got {L}")
    L = reduce_symbol(L)
    return _theta0_cases(L.top, L.bottom, eps)


def theta0_even_o(Lp: Symbol) -> Symbol:
    """The minimal-rank defect-1-mod-4 partner of an even-orthogonal symbol."""
    family = family_of(Lp)
    if family == SymbolFamily.O_PLUS:
        eps = 1
    elif family == SymbolFamily.O_MINUS:
        eps = -1
    else:
        raise ValueError(f"expected a symbol of even defect, got {Lp}")
    Lp = reduce_symbol(Lp)
    return _theta0_cases(Lp.top, Lp.bottom, eps)


def first_occurrence_unipotent(L: Symbol, tower) -> int:
    """Dimension parameter at which the character first meets a tower.

    For a defect-1-mod-4 symbol the tower is OPlus or OMinus and the answer
    is the orthogonal dimension halved; for an even-orthogonal symbol the
    tower is SpFromOEven and the answer is the symplectic rank.  Both equal
    twice the rank of the minimal partner.
    """
    tower = Tower(tower)
    if tower == Tower.SP_FROM_O_EVEN:
        return 2 * rank(theta0_even_o(L))
    eps = 1 if tower == Tower.O_PLUS else -1
    return 2 * rank(theta0_sp(L, eps))


class UnitaryOccurrence(NamedTuple):
    n_even: int
    n_odd: int


def unitary_first_occurrence(la) -> UnitaryOccurrence:
    """Minimal sizes of even- and odd-size partners of a partition.

    Brute force with increasing partner size; the preservation identity
    bounds the search, and the two minima sum to 2*size - 2*delta + 1.
    """
    la = check_partition(la)
    n = sum(la)
    bound = 2 * n - 2 * delta_symbol(symbol_of_partition(la)) + 1
    n_even = n_odd = None
    for t in range(bound + 1):
        if (n_even if t % 2 == 0 else n_odd) is not None:
            continue
        if any(in_b_uu(la, lap) is not None for lap in partitions_of(t)):
            if t % 2 == 0:
                n_even = t
            else:
                n_odd = t
        if n_even is not None and n_odd is not None:
            break
    if n_even is None or n_odd is None:
        raise RuntimeError(f"no partner within the preservation bound for {la}")
    return UnitaryOccurrence(n_even, n_odd)


def cuspidal_symbol(f: SymbolFamily, m: int) -> frozenset:
    """The cuspidal symbol(s) indexed by m in the given family.

    Sp: one symbol of rank m(m+1) and defect (2m+1) times the alternating
    sign.  O^eps: the two transposed one-row staircase symbols of rank m^2
    and defect +-2m when eps = (-1)^m, none otherwise (a single self-paired
    symbol at m = 0).  Unitary context: the symbol of the staircase
    partition of m(m+1)/2.
    """
    if m < 0:
        raise ValueError("cuspidal index must be non-negative")
    f = SymbolFamily(f)
    if f == SymbolFamily.SP:
        d = (2 * m + 1) * (-1) ** m
        if d > 0:
            return frozenset({Symbol(tuple(range(d - 1, -1, -1)), ())})
        return frozenset({Symbol((), tuple(range(-d - 1, -1, -1)))})
    if f in (SymbolFamily.O_PLUS, SymbolFamily.O_MINUS):
        wanted = SymbolFamily.O_PLUS if m % 2 == 0 else SymbolFamily.O_MINUS
        if f != wanted:
            return frozenset()
        if m == 0:
            return frozenset({Symbol((), ())})
        row = tuple(range(2 * m - 1, -1, -1))
        return frozenset({Symbol(row, ()), Symbol((), row)})
    if f == SymbolFamily.UNITARY_CONTEXT:
        return frozenset({symbol_of_partition(staircase(m))})
    raise ValueError(f"unknown family {f}")
