"""Murnaghan-Nakayama type rules as exact formal expansions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional

from .characters import CharacterKind, character, symplectic_char, skew_schur
from .laurent import Coeff, LaurentPoly
from .partitions import (
    Partition,
    SkewShape,
    StaircaseDelta,
    border_strip_additions,
    border_strip_removals,
    horizontal_strip_additions,
    m_index,
    mu_q,
    subpartitions,
    vertical_strip_additions,
    vertical_strip_removals,
)

K = CharacterKind


def _norm(c) -> Coeff:
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class FormalExpansion:
    """Finite combination of basis-labelled partitions with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Iterable[tuple[tuple[CharacterKind, Partition], Coeff]]] = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (kind, lam), c in items:
                key = (CharacterKind(kind), Partition(lam))
                acc[key] = acc.get(key, 0) + c
        self._terms = {k: _norm(c) for k, c in acc.items() if c}

    @classmethod
    def single(cls, kind: CharacterKind, lam, coeff: Coeff = 1) -> "FormalExpansion":
        return cls([((kind, Partition(lam)), coeff)])

    def __add__(self, other: "FormalExpansion") -> "FormalExpansion":
        return FormalExpansion(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "FormalExpansion":
        return FormalExpansion((k, -c) for k, c in self._terms.items())

    def __sub__(self, other: "FormalExpansion") -> "FormalExpansion":
        return self + (-other)

    def scale(self, c: Coeff) -> "FormalExpansion":
        return FormalExpansion((k, c * v) for k, v in self._terms.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalExpansion):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def coeff(self, kind: CharacterKind, lam) -> Coeff:
        return self._terms.get((kind, Partition(lam)), 0)

    def items(self) -> list[tuple[tuple[CharacterKind, Partition], Coeff]]:
        """Terms in canonical order: by basis, then partition descending."""
        return sorted(self._terms.items(), key=lambda t: (t[0][0].label, _desc(t[0][1])))

    def partitions(self) -> list[Partition]:
        return [lam for (_, lam), _ in self.items()]

    def evaluate(self, n: int, m: int = 0) -> LaurentPoly:
        total = LaurentPoly.zero(n, m)
        for (kind, lam), c in self._terms.items():
            total = total + character(kind, lam, n, m) * c
        return total

    def __repr__(self) -> str:
        inner = ", ".join(f"{c} {k.label}{lam}" for (k, lam), c in self.items())
        return f"FormalExpansion({inner})"


def _desc(lam: Partition):
    # sorting key that puts larger partitions (lexicographically) first
    return tuple(-p for p in lam) + (1,)


@dataclass(frozen=True)
class MixedTerm:
    """coeff * sp_{sp_part}(X) * s_{outer'/inner'}(Y)."""

    sp_part: Partition
    skew_outer: Partition
    skew_inner: Partition
    coeff: Coeff

    def evaluate(self, n: int, m: int) -> LaurentPoly:
        sy = skew_schur(SkewShape(self.skew_outer.conjugate(), self.skew_inner.conjugate()), m)
        return symplectic_char(self.sp_part, n).lift(n, m) * sy.lift(n, m) * self.coeff


@dataclass(frozen=True)
class MixedExpansion:
    spo_terms: FormalExpansion
    mixed_terms: tuple[MixedTerm, ...] = ()
    # labels dropped from spo_terms because spo vanishes for them (lam_{n+1} > m)
    vanishing: FormalExpansion = field(default_factory=FormalExpansion)

    def evaluate(self, n: int, m: int) -> LaurentPoly:
        total = self.spo_terms.evaluate(n, m)
        for t in self.mixed_terms:
            total = total + t.evaluate(n, m)
        return total


class MNParts(NamedTuple):
    additions: FormalExpansion
    removals: FormalExpansion
    third: FormalExpansion

    def merged(self) -> FormalExpansion:
        return self.additions + self.removals + self.third


# ---------------------------------------------------------------------------
# classical rules


def classical_mn(mu, r: int, n: int) -> FormalExpansion:
    return FormalExpansion(
        ((K.SCHUR, eta), (-1) ** h) for eta, h in border_strip_additions(Partition(mu), r, n)
    )


def pieri_h(mu, r: int, n: int) -> FormalExpansion:
    return FormalExpansion(((K.SCHUR, eta), 1) for eta in horizontal_strip_additions(Partition(mu), r, n))


def pieri_e(mu, r: int, n: int) -> FormalExpansion:
    return FormalExpansion(((K.SCHUR, eta), 1) for eta in vertical_strip_additions(Partition(mu), r, n))


def p_perp(lam, r: int) -> FormalExpansion:
    return FormalExpansion(((K.SCHUR, xi), (-1) ** h) for xi, h in border_strip_removals(Partition(lam), r))


def e_perp(lam, s: int) -> FormalExpansion:
    return FormalExpansion(((K.SCHUR, pi), 1) for pi in vertical_strip_removals(Partition(lam), s))


def apply_schur_operator(op, expansion: FormalExpansion, *args) -> FormalExpansion:
    """Extend an operator on single Schur labels linearly to an expansion."""
    total = FormalExpansion()
    for (kind, lam), c in expansion.items():
        if kind is not K.SCHUR:
            raise ValueError("operator acts on Schur labels only")
        total = total + op(lam, *args).scale(c)
    return total


def hook_mn(lam, r: int, n: Optional[int] = None, m: Optional[int] = None) -> FormalExpansion:
    """Border strip additions with no row bound; hs_eta with eta_{n+1} > m
    are kept and vanish on evaluation."""
    return FormalExpansion(
        ((K.HOOK_SCHUR, eta), (-1) ** h) for eta, h in border_strip_additions(Partition(lam), r)
    )


# ---------------------------------------------------------------------------
# symplectic and orthogonal rules


_FAMILY_KIND = {
    "symplectic": K.SYMPLECTIC,
    "odd_orthogonal": K.ODD_ORTHOGONAL,
    "even_orthogonal": K.EVEN_ORTHOGONAL,
}


def third_sum_terms(mu: Partition, delta: StaircaseDelta, r: int) -> Iterator[tuple[int, Partition, int]]:
    """(q, mu^(q), p(q)) for q in m(mu)+1..n with mu^(q) a partition."""
    for q in range(m_index(mu, delta, r) + 1, delta.n + 1):
        res = mu_q(mu, delta, r, q)
        if res is not None:
            yield q, res[0], res[1]


def weyl_mn_parts(mu, r: int, n: int, family: str) -> MNParts:
    """The three sums of the rule for p_r(X, 1/X) times a Weyl-type character."""
    mu = Partition(mu)
    if len(mu) > n:
        raise ValueError(f"{mu} has more than n={n} parts")
    if r < 1:
        raise ValueError("r must be positive")
    kind = _FAMILY_KIND[family]
    delta = StaircaseDelta.for_family(family, n)

    if family == "even_orthogonal":
        denom = 2 if mu.part(n) == 0 else 1

        def weight(lam):
            return Fraction(2 if lam.part(n) == 0 else 1, denom)

        third_sign = 0
    else:
        def weight(lam):
            return 1

        third_sign = 1

    additions = FormalExpansion(
        ((kind, eta), (-1) ** h * weight(eta)) for eta, h in border_strip_additions(mu, r, n)
    )
    removals = FormalExpansion(
        ((kind, xi), (-1) ** h * weight(xi)) for xi, h in border_strip_removals(mu, r)
    )
    third = FormalExpansion(
        ((kind, nu), (-1) ** (p - q + third_sign) * weight(nu))
        for q, nu, p in third_sum_terms(mu, delta, r)
    )
    return MNParts(additions, removals, third)


def symplectic_mn(mu, r: int, n: int) -> FormalExpansion:
    return weyl_mn_parts(mu, r, n, "symplectic").merged()


def odd_orthogonal_mn(mu, r: int, n: int) -> FormalExpansion:
    return weyl_mn_parts(mu, r, n, "odd_orthogonal").merged()


def even_orthogonal_mn(mu, r: int, n: int) -> FormalExpansion:
    return weyl_mn_parts(mu, r, n, "even_orthogonal").merged()


# ---------------------------------------------------------------------------
# orthosymplectic rule


def _spo_vanishes(lam: Partition, n: int, m: int) -> bool:
    return lam.part(n + 1) > m


def orthosymplectic_mn(lam, r: int, n: int, m: int) -> MixedExpansion:
    lam = Partition(lam)
    if r < 1:
        raise ValueError("r must be positive")
    signed = [(eta, (-1) ** h) for eta, h in border_strip_additions(lam, r)]
    signed += [(xi, (-1) ** h) for xi, h in border_strip_removals(lam, r)]
    kept = FormalExpansion(((K.ORTHOSYMPLECTIC, p), c) for p, c in signed if not _spo_vanishes(p, n, m))
    dropped = FormalExpansion(((K.ORTHOSYMPLECTIC, p), c) for p, c in signed if _spo_vanishes(p, n, m))

    delta = StaircaseDelta.symplectic(n)
    mixed: dict = {}
    for mu in subpartitions(lam, max_len=n):
        if not mu.part(n) < r - 1:
            continue
        # s_{lam'/mu'}(y_1..y_m) is zero once a row of lam/mu exceeds m boxes
        if any(lam.part(i) - mu.part(i) > m for i in range(1, len(lam) + 1)):
            continue
        for q, nu, p in third_sum_terms(mu, delta, r):
            key = (nu, lam, mu)
            mixed[key] = mixed.get(key, 0) + (-1) ** (p - q + 1)
    terms = tuple(
        MixedTerm(nu, outer, inner, c)
        for (nu, outer, inner), c in sorted(mixed.items(), key=lambda t: (_desc(t[0][2]), _desc(t[0][0])))
        if c
    )
    return MixedExpansion(kept, terms, dropped)


# ---------------------------------------------------------------------------
# auxiliary identities of the orthosymplectic proof


def _spo_sum(pairs, n: int, m: int) -> LaurentPoly:
    total = LaurentPoly.zero(n, m)
    for lam, c in pairs:
        total = total + character(K.ORTHOSYMPLECTIC, lam, n, m) * c
    return total


def interchange_sides(lam, r: int, s: int, n: int, m: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Vertical strip then border strip removal, against the reverse order,
    both evaluated as spo in (n, m-1) variables."""
    if m < 1:
        raise ValueError("needs at least one y-variable")
    lam = Partition(lam)
    lhs_pairs = []
    for nu in vertical_strip_removals(lam, s):
        for zeta, h in border_strip_removals(nu, r):
            lhs_pairs.append((zeta, (-1) ** h))
    rhs_pairs = []
    for xi, h in border_strip_removals(lam, r):
        for omega in vertical_strip_removals(xi, s):
            rhs_pairs.append((omega, (-1) ** h))
    return _spo_sum(lhs_pairs, n, m - 1), _spo_sum(rhs_pairs, n, m - 1)


def strip_addition_sides(lam, r: int, n: int, m: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the border-strip addition identity used for spo."""
    if m < 1:
        raise ValueError("needs at least one y-variable")
    lam = Partition(lam)
    lhs = LaurentPoly.zero(n, m)
    sign_r = 1 if r % 2 else -1
    for s in range(len(lam) + 1):
        y_s = LaurentPoly.y(m, n, m, s)
        for nu in vertical_strip_removals(lam, s):
            inner = LaurentPoly.zero(n, m - 1)
            for sigma, h in border_strip_additions(nu, r):
                inner = inner + character(K.ORTHOSYMPLECTIC, sigma, n, m - 1) * (-1) ** h
            lhs = lhs + inner.lift(n, m) * y_s
            lhs = lhs + character(K.ORTHOSYMPLECTIC, nu, n, m - 1).lift(n, m) * (
                LaurentPoly.y(m, n, m, s + r) * sign_r
            )
    rhs = LaurentPoly.zero(n, m)
    for eta, h in border_strip_additions(lam, r):
        rhs = rhs + character(K.ORTHOSYMPLECTIC, eta, n, m) * (-1) ** h
    return lhs, rhs


def schur_perp_commutes(lam, r: int, s: int) -> tuple[FormalExpansion, FormalExpansion]:
    """p_r-perp after e_s-perp versus e_s-perp after p_r-perp, on Schur labels."""
    lam = Partition(lam)
    left = apply_schur_operator(p_perp, e_perp(lam, s), r)
    right = apply_schur_operator(e_perp, p_perp(lam, r), s)
    return left, right
