"""Descriptor-level reduction of characters to unipotent data.

A character of a symplectic, orthogonal, or unitary group is modeled by the
semisimple descriptor of its series (an ambient dual group, eigenvalue-orbit
multiplicities, and the +-1 eigenvalue masses) together with unipotent
labels for every centralizer factor.  The reduction map sends such a
descriptor to its factor labels; occurrence of a pair under the oscillator
representation is then a finite check: matching orbit data, a matching
middle block, and symbols related by the unipotent correspondence.

Labels are stored by block ([1]-block and [-1]-block); which block plays
the second or third factor depends on the dual-pair flavor in play.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, replace
from typing import NamedTuple

from .combinatorics import (
    check_partition,
    format_partition,
    parse_partition,
    staircase,
    two_core,
)
from .symbols import (
    Symbol,
    SymbolFamily,
    delta_symbol,
    family_of,
    format_symbol,
    is_cuspidal,
    parse_symbol,
    rank,
    symbol_of_partition,
)
from .correspondence import (
    cuspidal_symbol,
    in_b_sp_o,
    in_b_uu,
    theta0_even_o,
    theta0_sp,
    unitary_first_occurrence,
)


class GroupKind(enum.Enum):
    SP = "Sp"
    SO_ODD = "SOOdd"
    O_EVEN = "OEven"
    SO_EVEN = "SOEven"
    UNITARY = "Unitary"
    GL = "GL"


class OrbitKind(enum.Enum):
    UNITARY_ORBIT = "UnitaryOrbit"
    SPLIT_PAIR_ORBIT = "SplitPairOrbit"


class DualPairFlavor(enum.Enum):
    EVEN_ORTHOGONAL = "EvenOrthogonalPair"
    ODD_ORTHOGONAL = "OddOrthogonalPair"
    UNITARY = "UnitaryPair"


@dataclass(frozen=True)
class GroupDescriptor:
    """A finite classical group named by kind, rank parameter, and type.

    parameter is the Witt-tower rank: Sp_{2p}, SO_{2p+1}, O^eps_{2p},
    U_p.  type_sign is required for OEven/SOEven and forbidden elsewhere;
    field_degree marks Unitary/GL factors living over an extension field.
    """

    kind: GroupKind
    parameter: int
    type_sign: int | None = None
    field_degree: int = 1

    def __post_init__(self):
        if self.parameter < 0:
            raise ValueError("group parameter must be non-negative")
        if self.field_degree < 1:
            raise ValueError("field degree must be positive")
        if self.kind in (GroupKind.O_EVEN, GroupKind.SO_EVEN):
            if self.type_sign not in (1, -1):
                raise ValueError(f"{self.kind.value} needs a type sign")
        elif self.type_sign is not None:
            raise ValueError(f"{self.kind.value} does not carry a type sign")

    @property
    def dimension(self) -> int:
        if self.kind == GroupKind.SP:
            return 2 * self.parameter
        if self.kind == GroupKind.SO_ODD:
            return 2 * self.parameter + 1
        if self.kind in (GroupKind.O_EVEN, GroupKind.SO_EVEN):
            return 2 * self.parameter
        return self.parameter


@dataclass(frozen=True)
class OrbitToken:
    """An abstract eigenvalue orbit: an identifier, the orbit size, and
    whether the orbit is self-dual (a unitary block) or a split dual pair
    (a general linear block).
    """

    id: str
    degree: int
    kind: OrbitKind

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("orbit degree must be positive")


@dataclass(frozen=True)
class SemisimpleDescriptor:
    """Eigenvalue data of a semisimple class in the ambient dual group.

    orbit_mults lists (token, multiplicity) pairs sorted by token id.  The
    masses obey sum(degree*mult) + nu_plus1 + nu_minus1 = ambient
    parameter.  minus1_type carries the type of the [-1] block when the
    ambient kind gives it an even-orthogonal block (SOOdd and OEven
    ambients); symplectic ambients have symplectic [-1] blocks and unitary
    ambients model -1 as an ordinary orbit.
    """

    ambient: GroupDescriptor
    orbit_mults: tuple
    nu_plus1: int
    nu_minus1: int
    minus1_type: int | None = None

    def __post_init__(self):
        object.__setattr__(
            self,
            "orbit_mults",
            tuple(sorted(self.orbit_mults, key=lambda pair: pair[0].id)),
        )
        if self.ambient.kind not in (
            GroupKind.SP,
            GroupKind.SO_ODD,
            GroupKind.O_EVEN,
            GroupKind.UNITARY,
        ):
            raise ValueError(f"unsupported ambient kind {self.ambient.kind}")
        ids = [token.id for token, _ in self.orbit_mults]
        if len(set(ids)) != len(ids):
            raise ValueError("orbit token ids must be distinct")
        mass = 0
        for token, mult in self.orbit_mults:
            if mult < 1:
                raise ValueError("orbit multiplicities must be positive")
            mass += token.degree * mult
        if mass + self.nu_plus1 + self.nu_minus1 != self.ambient.parameter:
            raise ValueError(
                "orbit masses and eigenvalue masses must fill the ambient rank"
            )
        if self.ambient.kind == GroupKind.UNITARY:
            if self.nu_minus1 != 0 or self.minus1_type is not None:
                raise ValueError(
                    "unitary ambients model -1 as an orbit: nu_minus1 must be 0"
                )
        elif self.ambient.kind == GroupKind.SP:
            if self.minus1_type is not None:
                raise ValueError("symplectic [-1] blocks carry no type sign")
        else:
            if self.nu_minus1 == 0:
                if self.minus1_type not in (None, 1):
                    raise ValueError("the rank-0 [-1] block is split")
                object.__setattr__(self, "minus1_type", 1)
            elif self.minus1_type not in (1, -1):
                raise ValueError("a positive [-1] block needs a type sign")

    @property
    def unitary_mass_sign(self) -> int:
        """(-1) to the total multiplicity over the self-dual orbits."""
        total = sum(
            mult
            for token, mult in self.orbit_mults
            if token.kind == OrbitKind.UNITARY_ORBIT
        )
        return -1 if total % 2 else 1

    @property
    def plus1_type(self) -> int:
        """Type of the [1] block for an even-orthogonal ambient."""
        if self.ambient.kind != GroupKind.O_EVEN:
            raise ValueError("only even-orthogonal ambients type their [1] block")
        return self.ambient.type_sign * self.unitary_mass_sign * self.minus1_type


_FAMILY_SIGN = {SymbolFamily.O_PLUS: 1, SymbolFamily.O_MINUS: -1}


def _check_symbol_label(label, family: SymbolFamily, size: int, what: str):
    if not isinstance(label, Symbol):
        raise ValueError(f"{what} must be a symbol")
    if family_of(label) != family:
        raise ValueError(f"{what} must lie in the {family.value} family: {label}")
    if rank(label) != size:
        raise ValueError(f"{what} must have rank {size}: {label}")


@dataclass(frozen=True)
class CharacterDescriptor:
    """A character in descriptor form: series data plus unipotent labels.

    labels1 pairs each orbit token with a partition of its multiplicity.
    label_plus1 and label_minus1 label the [1] and [-1] blocks; their
    families follow the ambient kind (symplectic-family symbols for dual
    blocks, orthogonal-family symbols for orthogonal blocks, a partition
    for a unitary [1] block).  odd_o_sign is the extra sign a character of
    an odd orthogonal group carries.
    """

    ss: SemisimpleDescriptor
    labels1: tuple
    label_plus1: object
    label_minus1: object = None
    odd_o_sign: int | None = None

    def __post_init__(self):
        object.__setattr__(
            self,
            "labels1",
            tuple(sorted(self.labels1, key=lambda pair: pair[0].id)),
        )
        tokens = [token for token, _ in self.ss.orbit_mults]
        if [token for token, _ in self.labels1] != tokens:
            raise ValueError("labels1 must cover exactly the orbit tokens")
        mults = dict(self.ss.orbit_mults)
        for token, label in self.labels1:
            label = check_partition(label)
            if sum(label) != mults[token]:
                raise ValueError(
                    f"orbit label must be a partition of {mults[token]}: {label}"
                )
        kind = self.ss.ambient.kind
        if kind == GroupKind.UNITARY:
            label = check_partition(self.label_plus1)
            object.__setattr__(self, "label_plus1", label)
            if sum(label) != self.ss.nu_plus1:
                raise ValueError("the [1] label must be a partition of nu_plus1")
            if self.label_minus1 is not None:
                raise ValueError("unitary descriptors carry no [-1] label")
            if self.odd_o_sign is not None:
                raise ValueError("only odd-orthogonal characters carry a sign bit")
            return
        if kind == GroupKind.SO_ODD:
            _check_symbol_label(
                self.label_plus1, SymbolFamily.SP, self.ss.nu_plus1, "[1] label"
            )
            minus_family = (
                SymbolFamily.O_PLUS if self.ss.minus1_type > 0 else SymbolFamily.O_MINUS
            )
            _check_symbol_label(
                self.label_minus1, minus_family, self.ss.nu_minus1, "[-1] label"
            )
            if self.odd_o_sign is not None:
                raise ValueError("only odd-orthogonal characters carry a sign bit")
        elif kind == GroupKind.SP:
            _check_symbol_label(
                self.label_plus1, SymbolFamily.SP, self.ss.nu_plus1, "[1] label"
            )
            _check_symbol_label(
                self.label_minus1, SymbolFamily.SP, self.ss.nu_minus1, "[-1] label"
            )
            if self.odd_o_sign not in (1, -1):
                raise ValueError("odd-orthogonal characters need a sign bit")
        elif kind == GroupKind.O_EVEN:
            plus_family = (
                SymbolFamily.O_PLUS if self.ss.plus1_type > 0 else SymbolFamily.O_MINUS
            )
            _check_symbol_label(
                self.label_plus1, plus_family, self.ss.nu_plus1, "[1] label"
            )
            minus_family = (
                SymbolFamily.O_PLUS if self.ss.minus1_type > 0 else SymbolFamily.O_MINUS
            )
            _check_symbol_label(
                self.label_minus1, minus_family, self.ss.nu_minus1, "[-1] label"
            )
            if self.odd_o_sign is not None:
                raise ValueError("only odd-orthogonal characters carry a sign bit")
        else:
            raise ValueError(f"unsupported ambient kind {kind}")


def group_of(chi: CharacterDescriptor) -> GroupDescriptor:
    """The group the described character lives on (dual of the ambient)."""
    ambient = chi.ss.ambient
    if ambient.kind == GroupKind.SO_ODD:
        return GroupDescriptor(GroupKind.SP, ambient.parameter)
    if ambient.kind == GroupKind.SP:
        return GroupDescriptor(GroupKind.SO_ODD, ambient.parameter)
    if ambient.kind == GroupKind.O_EVEN:
        return GroupDescriptor(
            GroupKind.O_EVEN, ambient.parameter, ambient.type_sign
        )
    return GroupDescriptor(GroupKind.UNITARY, ambient.parameter)


def dimension_of(chi: CharacterDescriptor) -> int:
    return group_of(chi).dimension


def centralizer_factors(ss: SemisimpleDescriptor) -> tuple:
    """Factors of the centralizer: one per orbit, then the [1] and [-1]
    blocks as the ambient kind dictates.  Rank-0 blocks are kept.
    """
    factors = []
    for token, mult in ss.orbit_mults:
        kind = (
            GroupKind.UNITARY
            if token.kind == OrbitKind.UNITARY_ORBIT
            else GroupKind.GL
        )
        factors.append(GroupDescriptor(kind, mult, field_degree=token.degree))
    ambient_kind = ss.ambient.kind
    if ambient_kind == GroupKind.SO_ODD:
        factors.append(GroupDescriptor(GroupKind.SO_ODD, ss.nu_plus1))
        factors.append(
            GroupDescriptor(GroupKind.O_EVEN, ss.nu_minus1, ss.minus1_type)
        )
    elif ambient_kind == GroupKind.SP:
        factors.append(GroupDescriptor(GroupKind.SP, ss.nu_plus1))
        factors.append(GroupDescriptor(GroupKind.SP, ss.nu_minus1))
    elif ambient_kind == GroupKind.O_EVEN:
        factors.append(
            GroupDescriptor(GroupKind.O_EVEN, ss.nu_plus1, ss.plus1_type)
        )
        factors.append(
            GroupDescriptor(GroupKind.O_EVEN, ss.nu_minus1, ss.minus1_type)
        )
    else:
        factors.append(GroupDescriptor(GroupKind.UNITARY, ss.nu_plus1))
    return tuple(factors)


def _orbit_factors(ss: SemisimpleDescriptor) -> tuple:
    return centralizer_factors(ss)[: len(ss.orbit_mults)]


def xi_factors(chi: CharacterDescriptor, flavor):
    """The factored form (first factors, second group, third group) of the
    reduction for a dual-pair flavor.

    The [1] and [-1] blocks swap roles with the flavor: for a symplectic-
    group character the even flavor puts the [-1] block second and the
    dual of the [1] block third, the odd flavor the reverse; for the
    orthogonal sides the correspondence-related block sits third; unitary
    descriptors have no third factor.
    """
    flavor = DualPairFlavor(flavor)
    ss = chi.ss
    kind = ss.ambient.kind
    parts = _orbit_factors(ss)
    minus_block = lambda: GroupDescriptor(
        GroupKind.O_EVEN, ss.nu_minus1, ss.minus1_type
    )
    if kind == GroupKind.SO_ODD:
        sp_block = GroupDescriptor(GroupKind.SP, ss.nu_plus1)
        if flavor == DualPairFlavor.EVEN_ORTHOGONAL:
            return parts, minus_block(), sp_block
        if flavor == DualPairFlavor.ODD_ORTHOGONAL:
            return parts, sp_block, minus_block()
    elif kind == GroupKind.SP and flavor == DualPairFlavor.ODD_ORTHOGONAL:
        return (
            parts,
            GroupDescriptor(GroupKind.SP, ss.nu_minus1),
            GroupDescriptor(GroupKind.SP, ss.nu_plus1),
        )
    elif kind == GroupKind.O_EVEN and flavor == DualPairFlavor.EVEN_ORTHOGONAL:
        return (
            parts,
            minus_block(),
            GroupDescriptor(GroupKind.O_EVEN, ss.nu_plus1, ss.plus1_type),
        )
    elif kind == GroupKind.UNITARY and flavor == DualPairFlavor.UNITARY:
        return parts, GroupDescriptor(GroupKind.UNITARY, ss.nu_plus1), None
    raise ValueError(f"{kind.value} ambient does not face the {flavor.value} flavor")


def label2_of(chi: CharacterDescriptor, flavor):
    """The unipotent label of the second factor for the given flavor."""
    flavor = DualPairFlavor(flavor)
    kind = chi.ss.ambient.kind
    if kind == GroupKind.SO_ODD and flavor == DualPairFlavor.ODD_ORTHOGONAL:
        return chi.label_plus1
    if kind == GroupKind.UNITARY:
        return chi.label_plus1
    xi_factors(chi, flavor)
    return chi.label_minus1


def label3_of(chi: CharacterDescriptor, flavor):
    """The unipotent label of the third factor for the given flavor."""
    flavor = DualPairFlavor(flavor)
    kind = chi.ss.ambient.kind
    if kind == GroupKind.UNITARY:
        raise ValueError("unitary descriptors have no third factor")
    if kind == GroupKind.SO_ODD and flavor == DualPairFlavor.ODD_ORTHOGONAL:
        return chi.label_minus1
    xi_factors(chi, flavor)
    return chi.label_plus1


def _orbit_key(chi: CharacterDescriptor):
    mults = dict(chi.ss.orbit_mults)
    data = sorted(
        (token.degree, token.kind.value, mults[token], label)
        for token, label in chi.labels1
    )
    return tuple(data)


def _normalize_pair(pair):
    """Accept a flavor or a correspondence pair kind; return the flavor and
    the required sign (None when the pair kind does not fix one).
    """
    from .correspondence import PairKind

    if isinstance(pair, DualPairFlavor):
        return pair, None
    if isinstance(pair, PairKind):
        kind = pair
    else:
        try:
            kind = PairKind(pair)
        except ValueError:
            return DualPairFlavor(pair), None
    if kind == PairKind.SP_O_PLUS:
        return DualPairFlavor.EVEN_ORTHOGONAL, 1
    if kind == PairKind.SP_O_MINUS:
        return DualPairFlavor.EVEN_ORTHOGONAL, -1
    if kind == PairKind.UNITARY_PLUS:
        return DualPairFlavor.UNITARY, 1
    return DualPairFlavor.UNITARY, -1


def howe_occurs(chi: CharacterDescriptor, chi_prime: CharacterDescriptor, pair) -> bool:
    """Whether the two described characters pair under the oscillator
    representation of the named dual-pair flavor.

    Three conditions: equal orbit data (degree, kind, multiplicity, label
    under some token bijection); matching middle blocks (equal up to a
    transposed label for the even flavor, exactly equal with matching sign
    data for the odd flavor); and third-factor labels related by the
    unipotent correspondence, allowing a transpose on the orthogonal side.
    The first argument is the symplectic-side (or left unitary) character.
    """
    flavor, required_sign = _normalize_pair(pair)
    left_kind = chi.ss.ambient.kind
    right_kind = chi_prime.ss.ambient.kind
    if flavor == DualPairFlavor.EVEN_ORTHOGONAL:
        if left_kind != GroupKind.SO_ODD or right_kind != GroupKind.O_EVEN:
            raise ValueError(
                "even flavor pairs a symplectic-group character with an "
                "even-orthogonal one"
            )
        if required_sign is not None and chi_prime.ss.ambient.type_sign != required_sign:
            return False
        if _orbit_key(chi) != _orbit_key(chi_prime):
            return False
        if (
            chi.ss.nu_minus1 != chi_prime.ss.nu_minus1
            or chi.ss.minus1_type != chi_prime.ss.minus1_type
        ):
            return False
        if chi.label_minus1 not in (
            chi_prime.label_minus1,
            chi_prime.label_minus1.transpose(),
        ):
            return False
        eps = _FAMILY_SIGN[family_of(chi_prime.label_plus1)]
        return any(
            in_b_sp_o(chi.label_plus1, Y, eps)
            for Y in (chi_prime.label_plus1, chi_prime.label_plus1.transpose())
        )
    if flavor == DualPairFlavor.ODD_ORTHOGONAL:
        if left_kind != GroupKind.SO_ODD or right_kind != GroupKind.SP:
            raise ValueError(
                "odd flavor pairs a symplectic-group character with an "
                "odd-orthogonal one"
            )
        if _orbit_key(chi) != _orbit_key(chi_prime):
            return False
        if chi.ss.nu_plus1 != chi_prime.ss.nu_minus1:
            return False
        if chi.label_plus1 != chi_prime.label_minus1:
            return False
        if chi_prime.odd_o_sign != chi.ss.minus1_type:
            return False
        return any(
            in_b_sp_o(chi_prime.label_plus1, X, chi.ss.minus1_type)
            for X in (chi.label_minus1, chi.label_minus1.transpose())
        )
    if left_kind != GroupKind.UNITARY or right_kind != GroupKind.UNITARY:
        raise ValueError("unitary flavor pairs two unitary-group characters")
    if _orbit_key(chi) != _orbit_key(chi_prime):
        return False
    sign = in_b_uu(chi.label_plus1, chi_prime.label_plus1)
    if sign is None:
        return False
    return required_sign is None or sign == required_sign


def natural_partner(chi: CharacterDescriptor) -> CharacterDescriptor:
    """The partner with the transposed even-orthogonal third label.

    Defined for symplectic-group characters (odd flavor); an involution
    that preserves the semisimple data and the delta statistic.
    """
    if chi.ss.ambient.kind != GroupKind.SO_ODD:
        raise ValueError(
            "the natural partner is defined for symplectic-group characters"
        )
    return replace(chi, label_minus1=chi.label_minus1.transpose())


def delta_of_character(chi: CharacterDescriptor, flavor=None) -> int:
    """delta of the designated unipotent label.

    The designated label is the [1]-block label (the third factor for the
    orthogonal flavors, the second for unitary); passing the odd flavor
    for a symplectic-group character designates the [-1]-block label
    instead.
    """
    kind = chi.ss.ambient.kind
    if kind == GroupKind.UNITARY:
        return delta_symbol(symbol_of_partition(chi.label_plus1))
    if (
        kind == GroupKind.SO_ODD
        and flavor is not None
        and DualPairFlavor(flavor) == DualPairFlavor.ODD_ORTHOGONAL
    ):
        return delta_symbol(chi.label_minus1)
    return delta_symbol(chi.label_plus1)


class FirstOccurrence(NamedTuple):
    n_plus: int
    n_minus: int
    total: int


def first_occurrence_general(chi: CharacterDescriptor, towers) -> FirstOccurrence:
    """First-occurrence dimensions of the described character on the two
    towers of a flavor, with their total.

    Even flavor, symplectic side: the two orthogonal-space dimensions, the
    plus-type tower first; the tower types follow the sign rule (the orbit
    part contributes (-1)^(unitary mass), the [-1] block its type, the
    minimal partner of the [1] label its own sign).  Odd flavor,
    symplectic side: the odd dimensions for the character and its natural
    partner.  Orthogonal sides: the symplectic dimensions for the
    character and its sign twist.  Unitary: the even-size tower first.
    Every total matches the closed form 2*dim - 2*delta + c.
    """
    towers = DualPairFlavor(towers)
    ss = chi.ss
    kind = ss.ambient.kind
    orbit_mass = sum(token.degree * mult for token, mult in ss.orbit_mults)
    if kind == GroupKind.UNITARY:
        if towers != DualPairFlavor.UNITARY:
            raise ValueError("unitary descriptors face only the unitary towers")
        occ = unitary_first_occurrence(chi.label_plus1)
        first = orbit_mass + occ.n_even
        second = orbit_mass + occ.n_odd
        even_total, odd_total = (first, second) if first % 2 == 0 else (second, first)
        result = FirstOccurrence(even_total, odd_total, first + second)
        expected = 2 * dimension_of(chi) - 2 * delta_of_character(chi) + 1
    elif kind == GroupKind.SO_ODD and towers == DualPairFlavor.EVEN_ORTHOGONAL:
        base = 2 * orbit_mass + 2 * ss.nu_minus1
        eps12 = ss.unitary_mass_sign * ss.minus1_type
        by_type = {}
        for eps3 in (1, -1):
            value = base + 2 * rank(theta0_sp(chi.label_plus1, eps3))
            by_type[eps12 * eps3] = value
        result = FirstOccurrence(by_type[1], by_type[-1], by_type[1] + by_type[-1])
        expected = 2 * dimension_of(chi) - 2 * delta_of_character(chi) + 2
    elif kind == GroupKind.SO_ODD and towers == DualPairFlavor.ODD_ORTHOGONAL:
        base = 2 * orbit_mass + 2 * ss.nu_plus1 + 1
        v_self = base + 2 * rank(theta0_even_o(chi.label_minus1))
        v_partner = base + 2 * rank(theta0_even_o(chi.label_minus1.transpose()))
        result = FirstOccurrence(v_self, v_partner, v_self + v_partner)
        expected = (
            2 * dimension_of(chi)
            - 2 * delta_of_character(chi, DualPairFlavor.ODD_ORTHOGONAL)
            + 2
        )
    elif kind == GroupKind.SP and towers == DualPairFlavor.ODD_ORTHOGONAL:
        base = 2 * orbit_mass + 2 * ss.nu_minus1
        v_self = base + 2 * rank(theta0_sp(chi.label_plus1, chi.odd_o_sign))
        v_twist = base + 2 * rank(theta0_sp(chi.label_plus1, -chi.odd_o_sign))
        result = FirstOccurrence(v_self, v_twist, v_self + v_twist)
        expected = 2 * dimension_of(chi) - 2 * delta_of_character(chi)
    elif kind == GroupKind.O_EVEN and towers == DualPairFlavor.EVEN_ORTHOGONAL:
        base = 2 * orbit_mass + 2 * ss.nu_minus1
        v_self = base + 2 * rank(theta0_even_o(chi.label_plus1))
        v_twist = base + 2 * rank(theta0_even_o(chi.label_plus1.transpose()))
        result = FirstOccurrence(v_self, v_twist, v_self + v_twist)
        expected = 2 * dimension_of(chi) - 2 * delta_of_character(chi)
    else:
        raise ValueError(
            f"{kind.value} ambient does not face the {DualPairFlavor(towers).value} towers"
        )
    if result.total != expected:
        raise AssertionError(
            f"first-occurrence total {result.total} misses the closed form "
            f"{expected} for {chi}"
        )
    return result


def _is_staircase(la) -> bool:
    return tuple(la) == staircase(len(la))


def is_cuspidal_descriptor(chi: CharacterDescriptor) -> bool:
    """Whether every factor label is cuspidal.

    Orbit labels must be their own 2-cores (staircases) on self-dual
    orbits and trivial rank-at-most-1 labels on split orbits; block labels
    must be cuspidal symbols (a staircase partition for a unitary [1]
    block).
    """
    mults = dict(chi.ss.orbit_mults)
    for token, label in chi.labels1:
        if token.kind == OrbitKind.UNITARY_ORBIT:
            if not _is_staircase(label):
                return False
        elif mults[token] > 1:
            return False
    if chi.ss.ambient.kind == GroupKind.UNITARY:
        return _is_staircase(chi.label_plus1)
    if not is_cuspidal(chi.label_plus1):
        return False
    return is_cuspidal(chi.label_minus1)


def pseudo_unipotent_cuspidal(n: int) -> frozenset:
    """The pseudo-unipotent cuspidal descriptors of rank n.

    Empty unless n is a square; two descriptors for n = m*m with m >= 1
    (all mass on the [-1] block of type (-1)^m, carrying either cuspidal
    symbol); the single trivial descriptor at n = 0.
    """
    if n < 0:
        raise ValueError("rank must be non-negative")
    m = 0
    while m * m < n:
        m += 1
    if m * m != n:
        return frozenset()
    trivial_sp = Symbol((0,), ())
    if n == 0:
        ss = SemisimpleDescriptor(
            ambient=GroupDescriptor(GroupKind.SO_ODD, 0),
            orbit_mults=(),
            nu_plus1=0,
            nu_minus1=0,
        )
        return frozenset(
            {CharacterDescriptor(ss, (), trivial_sp, Symbol((), ()))}
        )
    minus_type = -1 if m % 2 else 1
    family = SymbolFamily.O_PLUS if minus_type > 0 else SymbolFamily.O_MINUS
    ss = SemisimpleDescriptor(
        ambient=GroupDescriptor(GroupKind.SO_ODD, n),
        orbit_mults=(),
        nu_plus1=0,
        nu_minus1=n,
        minus1_type=minus_type,
    )
    return frozenset(
        CharacterDescriptor(ss, (), trivial_sp, label)
        for label in cuspidal_symbol(family, m)
    )


def cuspidal_chain_step(chi: CharacterDescriptor, direction: int, flavor=None):
    """The first-occurrence partner descriptor of a cuspidal character.

    direction picks between the two towers: for a symplectic-group
    character facing the even towers it is the orthogonal type; otherwise
    +1 builds the partner of the character itself and -1 the partner of
    its sign twist (natural partner).  flavor is required for
    symplectic-group characters, which face both orthogonal flavors.
    """
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    if not is_cuspidal_descriptor(chi):
        raise ValueError("chain steps are defined for cuspidal descriptors")
    ss = chi.ss
    kind = ss.ambient.kind
    orbit_mass = sum(token.degree * mult for token, mult in ss.orbit_mults)
    if kind == GroupKind.SO_ODD:
        if flavor is None:
            raise ValueError(
                "symplectic-group characters face both orthogonal flavors; "
                "pass one"
            )
        flavor = DualPairFlavor(flavor)
        if flavor == DualPairFlavor.EVEN_ORTHOGONAL:
            new_label = theta0_sp(chi.label_plus1, direction)
            nu1 = rank(new_label)
            ambient = GroupDescriptor(
                GroupKind.O_EVEN,
                orbit_mass + nu1 + ss.nu_minus1,
                ss.unitary_mass_sign * ss.minus1_type * direction,
            )
            new_ss = SemisimpleDescriptor(
                ambient, ss.orbit_mults, nu1, ss.nu_minus1, ss.minus1_type
            )
            return CharacterDescriptor(
                new_ss, chi.labels1, new_label, chi.label_minus1
            )
        if flavor == DualPairFlavor.ODD_ORTHOGONAL:
            X = chi.label_minus1 if direction > 0 else chi.label_minus1.transpose()
            new_label = theta0_even_o(X)
            nu1 = rank(new_label)
            ambient = GroupDescriptor(GroupKind.SP, orbit_mass + nu1 + ss.nu_plus1)
            new_ss = SemisimpleDescriptor(
                ambient, ss.orbit_mults, nu1, ss.nu_plus1
            )
            return CharacterDescriptor(
                new_ss,
                chi.labels1,
                new_label,
                chi.label_plus1,
                odd_o_sign=ss.minus1_type,
            )
        raise ValueError("symplectic-group characters face orthogonal flavors")
    if flavor is not None and DualPairFlavor(flavor) != (
        DualPairFlavor.ODD_ORTHOGONAL
        if kind == GroupKind.SP
        else DualPairFlavor.EVEN_ORTHOGONAL
    ):
        raise ValueError(f"{kind.value} ambient faces a single flavor")
    if kind == GroupKind.SP:
        eps = chi.odd_o_sign * direction
        new_label = theta0_sp(chi.label_plus1, eps)
        nu_minus1 = rank(new_label)
        ambient = GroupDescriptor(
            GroupKind.SO_ODD, orbit_mass + ss.nu_minus1 + nu_minus1
        )
        new_ss = SemisimpleDescriptor(
            ambient, ss.orbit_mults, ss.nu_minus1, nu_minus1, minus1_type=eps
        )
        return CharacterDescriptor(
            new_ss, chi.labels1, chi.label_minus1, new_label
        )
    if kind == GroupKind.O_EVEN:
        X = chi.label_plus1 if direction > 0 else chi.label_plus1.transpose()
        new_label = theta0_even_o(X)
        nu1 = rank(new_label)
        ambient = GroupDescriptor(
            GroupKind.SO_ODD, orbit_mass + nu1 + ss.nu_minus1
        )
        new_ss = SemisimpleDescriptor(
            ambient, ss.orbit_mults, nu1, ss.nu_minus1, ss.minus1_type
        )
        return CharacterDescriptor(
            new_ss, chi.labels1, new_label, chi.label_minus1
        )
    raise ValueError("chain steps cover symplectic and orthogonal descriptors")


_SCHEMA_VERSION = 1


def _sign_text(value):
    if value is None:
        return None
    return "+" if value > 0 else "-"


def _sign_value(text):
    if text is None:
        return None
    if text == "+":
        return 1
    if text == "-":
        return -1
    raise ValueError(f"signs serialize as '+' or '-': {text!r}")


def descriptor_to_dict(chi: CharacterDescriptor) -> dict:
    """Plain-data form of a descriptor (see descriptor_from_dict)."""
    ss = chi.ss
    labels = dict(chi.labels1)
    mults = dict(ss.orbit_mults)
    orbits = [
        {
            "id": token.id,
            "kind": token.kind.value,
            "degree": token.degree,
            "mult": mults[token],
            "label": format_partition(labels[token]),
        }
        for token, _ in ss.orbit_mults
    ]
    if ss.ambient.kind == GroupKind.UNITARY:
        plus1 = format_partition(chi.label_plus1)
        minus1 = None
    else:
        plus1 = format_symbol(chi.label_plus1)
        minus1 = format_symbol(chi.label_minus1)
    return {
        "version": _SCHEMA_VERSION,
        "ambient": {
            "kind": ss.ambient.kind.value,
            "parameter": ss.ambient.parameter,
            "type_sign": _sign_text(ss.ambient.type_sign),
        },
        "orbits": orbits,
        "nu1": ss.nu_plus1,
        "numinus1": ss.nu_minus1,
        "minus1_type": _sign_text(ss.minus1_type),
        "labels": {"plus1": plus1, "minus1": minus1},
        "odd_o_sign": _sign_text(chi.odd_o_sign),
    }


def descriptor_from_dict(data: dict) -> CharacterDescriptor:
    """Inverse of descriptor_to_dict; validates the schema version."""
    if data.get("version") != _SCHEMA_VERSION:
        raise ValueError(f"unsupported descriptor schema: {data.get('version')!r}")
    ambient = GroupDescriptor(
        GroupKind(data["ambient"]["kind"]),
        data["ambient"]["parameter"],
        _sign_value(data["ambient"].get("type_sign")),
    )
    orbit_mults = []
    labels1 = []
    for row in data["orbits"]:
        token = OrbitToken(row["id"], row["degree"], OrbitKind(row["kind"]))
        orbit_mults.append((token, row["mult"]))
        labels1.append((token, parse_partition(row["label"])))
    minus1_type = _sign_value(data.get("minus1_type"))
    if ambient.kind == GroupKind.SP and minus1_type == 1:
        minus1_type = None
    ss = SemisimpleDescriptor(
        ambient, tuple(orbit_mults), data["nu1"], data["numinus1"], minus1_type
    )
    if ambient.kind == GroupKind.UNITARY:
        plus1 = parse_partition(data["labels"]["plus1"])
        minus1 = None
    else:
        plus1 = parse_symbol(data["labels"]["plus1"])
        minus1 = parse_symbol(data["labels"]["minus1"])
    return CharacterDescriptor(
        ss,
        tuple(labels1),
        plus1,
        minus1,
        odd_o_sign=_sign_value(data.get("odd_o_sign")),
    )


def descriptor_to_json(chi: CharacterDescriptor) -> str:
    return json.dumps(descriptor_to_dict(chi), sort_keys=True)


def descriptor_from_json(text: str) -> CharacterDescriptor:
    return descriptor_from_dict(json.loads(text))
