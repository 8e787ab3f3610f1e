"""Families of a special symbol, arrangements, cells, and uniform projection.

A special symbol Z of defect 1 or 0 splits its entries into doubled values
and singles.  Moving a subset of singles across the rows produces the
members of the families attached to Z; arrangements pair the singles across
rows, subsets of pairs cut the families into cells, and the F2 pairing on
subsets gives exact rational coefficients for the projection onto uniform
class functions.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .symbols import (
    EntrySubset,
    Symbol,
    defect,
    format_symbol,
    is_special,
    singles_of,
    special_closure,
)


@dataclass(frozen=True)
class SpecialSymbolData:
    """A special symbol of defect 0 or 1 with its singles and degree.

    singles holds the unpaired entries as a subsymbol of Z; the degree d
    counts its bottom row (defect 1, where the top has d+1 entries) or
    either row (defect 0).
    """

    Z: Symbol
    singles: Symbol
    degree: int

    @classmethod
    def from_symbol(cls, Z: Symbol) -> "SpecialSymbolData":
        if not is_special(Z):
            raise ValueError(f"not a special symbol: {Z}")
        sub = singles_of(Z)
        top = tuple(sorted(sub.top, reverse=True))
        bottom = tuple(sorted(sub.bottom, reverse=True))
        # Removing doubled values takes the same count from each row, so the
        # singles inherit the defect of Z.
        if len(top) - len(bottom) != defect(Z):
            raise AssertionError(f"singles do not inherit the defect of {Z}")
        return cls(Z=Z, singles=Symbol(top, bottom), degree=len(bottom))


def special_data(Z: Symbol) -> SpecialSymbolData:
    return SpecialSymbolData.from_symbol(Z)


@dataclass(frozen=True)
class Arrangement:
    """A pairing of the singles across rows.

    pairs holds (top entry, bottom entry) couples; for defect 1 exactly one
    top single stays isolated, for defect 0 isolated is None.
    """

    pairs: frozenset
    isolated: int | None

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))


@dataclass(frozen=True)
class Cell:
    members: frozenset


class FamilySelector(enum.Enum):
    S_Z = "S_Z"
    S_Z1 = "S_Z1"
    S_Z_PLUS = "S_Z_plus"
    S_Z_MINUS = "S_Z_minus"
    S_Z0 = "S_Z0"


def lambda_of_subset(Zd: SpecialSymbolData, M: EntrySubset) -> Symbol:
    """The symbol obtained by moving the entries of M to the other row."""
    sub = singles_of(Zd.Z)
    if not (M.top <= sub.top and M.bottom <= sub.bottom):
        raise ValueError(f"subset must consist of singles of {Zd.Z}")
    top = (frozenset(Zd.Z.top) - M.top) | M.bottom
    bottom = (frozenset(Zd.Z.bottom) - M.bottom) | M.top
    return Symbol(
        tuple(sorted(top, reverse=True)), tuple(sorted(bottom, reverse=True))
    )


def subsets_of_singles(Zd: SpecialSymbolData) -> tuple:
    """All row-tagged subsets of the singles, in a fixed order."""
    tagged = [(x, 0) for x in Zd.singles.top] + [(x, 1) for x in Zd.singles.bottom]
    out = []
    for mask in range(1 << len(tagged)):
        top = frozenset(x for i, (x, r) in enumerate(tagged) if r == 0 and mask >> i & 1)
        bottom = frozenset(
            x for i, (x, r) in enumerate(tagged) if r == 1 and mask >> i & 1
        )
        out.append(EntrySubset(top, bottom))
    return tuple(out)


def family(Zd: SpecialSymbolData, which) -> frozenset:
    """One of the parity-filtered families of symbols attached to Z.

    S_Z and S_Z1 need defect 1; the signed families and S_Z0 need defect 0.
    S_Z / S_Z_plus keep subsets with evenly differing row counts, S_Z_minus
    the odd ones, and S_Z1 / S_Z0 the balanced ones.
    """
    which = FamilySelector(which)
    d0 = defect(Zd.Z)
    needs = 1 if which in (FamilySelector.S_Z, FamilySelector.S_Z1) else 0
    if d0 != needs:
        raise ValueError(f"{which.value} needs a special symbol of defect {needs}")
    members = []
    for M in subsets_of_singles(Zd):
        diff = len(M.top) - len(M.bottom)
        if which in (FamilySelector.S_Z1, FamilySelector.S_Z0):
            keep = diff == 0
        elif which == FamilySelector.S_Z_MINUS:
            keep = diff % 2 == 1
        else:
            keep = diff % 2 == 0
        if keep:
            members.append(lambda_of_subset(Zd, M))
    return frozenset(members)


def arrangements(Zd: SpecialSymbolData) -> tuple:
    """All arrangements of the singles, in a fixed deterministic order."""
    tops = Zd.singles.top
    bottoms = Zd.singles.bottom
    result = []
    if defect(Zd.Z) == 1:
        for isolated in tops:
            rest = tuple(x for x in tops if x != isolated)
            for perm in itertools.permutations(bottoms):
                result.append(Arrangement(frozenset(zip(rest, perm)), isolated))
    else:
        for perm in itertools.permutations(bottoms):
            result.append(Arrangement(frozenset(zip(tops, perm)), None))
    return tuple(result)


def _quantified_membership(M: EntrySubset, phi: Arrangement, psi: frozenset) -> bool:
    # The all-subsets form: for every subset psi_prime of the arrangement's
    # pairs, the entries of M inside psi_prime must have the same parity as
    # the number of pairs shared by (phi minus psi) and psi_prime.
    pairs = sorted(phi.pairs)
    unpaired = phi.pairs - psi
    for k in range(len(pairs) + 1):
        for psi_prime in itertools.combinations(pairs, k):
            hits = sum(
                (s in M.top) + (t in M.bottom) for s, t in psi_prime
            )
            shared = sum(1 for pair in psi_prime if pair in unpaired)
            if hits % 2 != shared % 2:
                return False
    return True


def cell(Zd: SpecialSymbolData, phi: Arrangement, psi) -> Cell:
    """The cell cut out of the ambient family by (phi, psi).

    Members are built from the two constraints: none-or-both entries of
    each psi pair, exactly one entry of each remaining pair.  For defect 1
    the isolated entry's bit is forced by the ambient parity.  Each member
    is checked against the quantified all-subsets condition.
    """
    psi = frozenset(psi)
    if not psi <= phi.pairs:
        raise ValueError("psi must be a subset of the arrangement's pairs")
    unpaired = sorted(phi.pairs - psi)
    paired = sorted(psi)
    d0 = defect(Zd.Z)
    members = []
    for both_mask in range(1 << len(paired)):
        for side_mask in range(1 << len(unpaired)):
            top, bottom = set(), set()
            for i, (s, t) in enumerate(paired):
                if both_mask >> i & 1:
                    top.add(s)
                    bottom.add(t)
            for i, (s, t) in enumerate(unpaired):
                if side_mask >> i & 1:
                    top.add(s)
                else:
                    bottom.add(t)
            if d0 == 1 and (len(top) - len(bottom)) % 2 == 1:
                top.add(phi.isolated)
            M = EntrySubset(frozenset(top), frozenset(bottom))
            if not _quantified_membership(M, phi, psi):
                raise AssertionError(
                    f"cell membership routes disagree on {M} for {Zd.Z}"
                )
            members.append(lambda_of_subset(Zd, M))
    return Cell(frozenset(members))


def cyclic_shift_arrangements(Zd: SpecialSymbolData):
    """The two standard arrangements of a defect-0 singles set: entries
    paired in descending order, and the same with the top row rotated.
    """
    if defect(Zd.Z) != 0:
        raise ValueError("cyclic-shift arrangements need a defect-0 symbol")
    s = Zd.singles.top
    t = Zd.singles.bottom
    first = Arrangement(frozenset(zip(s, t)), None)
    second = Arrangement(frozenset(zip(s[1:] + s[:1], t)), None)
    return first, second


def pairing(Sigma: Symbol, L: Symbol, Zd: SpecialSymbolData) -> int:
    """The F2 pairing |N ∩ M| mod 2 of two members of the families of Z."""
    Z1, N = special_closure(Sigma)
    Z2, M = special_closure(L)
    if Z1 != Zd.Z or Z2 != Zd.Z:
        raise ValueError("both symbols must close up to the given special symbol")
    return N.intersection_size(M) % 2


def uniform_coefficient(Sigma: Symbol, L: Symbol) -> Fraction:
    """Multiplicity of the second character in the uniform projection of
    the first: a signed power of 2 on the family of the closure, 0 outside.

    Sigma must have defect 1 (balanced subset over a defect-1 closure) or
    defect 0 (balanced over a defect-0 closure); the degenerate degree-0
    defect-0 case has coefficient 1.
    """
    Z, N = special_closure(Sigma)
    d0 = defect(Z)
    if defect(Sigma) != d0:
        raise ValueError(
            f"first argument must be a balanced member of its family: {Sigma}"
        )
    try:
        ZL, M = special_closure(L)
    except ValueError:
        return Fraction(0)
    if ZL != Z:
        return Fraction(0)
    d = SpecialSymbolData.from_symbol(Z).degree
    sign = -1 if N.intersection_size(M) % 2 else 1
    if d0 == 1:
        return Fraction(sign, 2**d)
    if d == 0:
        return Fraction(1)
    return Fraction(sign, 2 ** (d - 1))


@dataclass(frozen=True)
class RationalMatrix:
    """Uniform-projection coefficients with exact rational entries.

    rows and cols are the indexing symbols.  row_gram computes the sign
    sums normalized by 4^degree, which for defect 1 coincides with the
    literal dot products of the rows.
    """

    rows: tuple
    cols: tuple
    entries: tuple
    gram_scale: Fraction

    def row_gram(self) -> tuple:
        return tuple(
            tuple(
                sum((x * y for x, y in zip(row_i, row_j)), Fraction(0))
                * self.gram_scale
                for row_j in self.entries
            )
            for row_i in self.entries
        )


def projection_matrix(Zd: SpecialSymbolData, eps: int = 1) -> RationalMatrix:
    """Coefficient matrix of the uniform projections over a family of Z.

    Defect 1: rows over the balanced family, columns over S_Z.  Defect 0:
    rows over a transversal of transposition in the balanced family (the
    representative has top row lexicographically >= bottom row), columns
    over the eps-signed family.
    """
    d0 = defect(Zd.Z)
    if d0 == 1:
        rows = sorted(family(Zd, FamilySelector.S_Z1), key=format_symbol)
        cols = sorted(family(Zd, FamilySelector.S_Z), key=format_symbol)
        scale = Fraction(1)
    else:
        balanced = family(Zd, FamilySelector.S_Z0)
        rows = sorted(
            (S for S in balanced if S.top >= S.bottom), key=format_symbol
        )
        which = FamilySelector.S_Z_PLUS if eps > 0 else FamilySelector.S_Z_MINUS
        cols = sorted(family(Zd, which), key=format_symbol)
        scale = Fraction(1) if Zd.degree == 0 else Fraction(1, 4)
    entries = tuple(
        tuple(uniform_coefficient(S, L) for L in cols) for S in rows
    )
    return RationalMatrix(tuple(rows), tuple(cols), entries, scale)
