"""Brute-force evaluation of every character as an explicit Laurent polynomial.

Where two independent descriptions exist (determinant ratio and tableau
generating function) both are implemented, so each can check the other.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .laurent import LaurentPoly, determinant, exact_divide
from .partitions import (
    Partition,
    SkewShape,
    StaircaseDelta,
    subpartitions,
    vertical_strip_removals,
)


class CharacterKind(str, enum.Enum):
    SCHUR = "schur"
    SKEW_SCHUR = "skew_schur"
    SYMPLECTIC = "symplectic"
    ODD_ORTHOGONAL = "odd_orthogonal"
    EVEN_ORTHOGONAL = "even_orthogonal"
    HOOK_SCHUR = "hook_schur"
    ORTHOSYMPLECTIC = "orthosymplectic"

    @property
    def label(self) -> str:
        return _LABELS[self]

    @classmethod
    def from_name(cls, name: str) -> "CharacterKind":
        name = name.strip().lower().replace("-", "_")
        for kind in cls:
            if name in (kind.value, kind.label):
                return kind
        raise ValueError(f"unknown character kind {name!r}")

    @property
    def uses_y(self) -> bool:
        return self in (CharacterKind.HOOK_SCHUR, CharacterKind.ORTHOSYMPLECTIC)


_LABELS = {
    CharacterKind.SCHUR: "s",
    CharacterKind.SKEW_SCHUR: "skew",
    CharacterKind.SYMPLECTIC: "sp",
    CharacterKind.ODD_ORTHOGONAL: "oo",
    CharacterKind.EVEN_ORTHOGONAL: "oe",
    CharacterKind.HOOK_SCHUR: "hs",
    CharacterKind.ORTHOSYMPLECTIC: "spo",
}


class RouteMismatchError(AssertionError):
    """Two independent evaluations of the same character disagree."""


class IdentityViolation(AssertionError):
    pass


# ---------------------------------------------------------------------------
# power sums and the one-index units


def power_sum(r: int, n: int, ny: int = 0) -> LaurentPoly:
    if r == 0:
        return LaurentPoly.constant(1, n, ny)
    return sum((LaurentPoly.x(i, n, ny, r) for i in range(1, n + 1)), LaurentPoly.zero(n, ny))


def power_sum_bar(r: int, n: int, ny: int = 0) -> LaurentPoly:
    if r == 0:
        return LaurentPoly.constant(1, n, ny)
    p = power_sum(r, n, ny)
    return p + p.bar()


def _y_power_sum(r: int, n: int, m: int) -> LaurentPoly:
    total = LaurentPoly.zero(n, m)
    for j in range(1, m + 1):
        total = total + LaurentPoly.y(j, n, m, r)
    return total * (1 if r % 2 else -1)


def super_power_sum(r: int, n: int, m: int) -> LaurentPoly:
    """p_r(X) + (-1)^(r-1) p_r(Y)."""
    if r == 0:
        return LaurentPoly.constant(1, n, m)
    return power_sum(r, n, m) + _y_power_sum(r, n, m)


def spo_power_sum(r: int, n: int, m: int) -> LaurentPoly:
    """p_r(X, 1/X) + (-1)^(r-1) p_r(Y)."""
    if r == 0:
        return LaurentPoly.constant(1, n, m)
    return power_sum_bar(r, n, m) + _y_power_sum(r, n, m)


def complete_homogeneous(r: int, n: int) -> LaurentPoly:
    return schur(Partition([r]) if r else Partition(), n)


def elementary(r: int, n: int) -> LaurentPoly:
    if r > n:
        return LaurentPoly.zero(n)
    return schur(Partition([1] * r), n)


# ---------------------------------------------------------------------------
# tableau enumeration


def _fill(cells, candidates, fits) -> Iterator[dict]:
    """Depth-first fillings of ``cells`` (row-major) where ``fits(filling, cell, v)``."""
    filling: dict = {}

    def rec(k):
        if k == len(cells):
            yield dict(filling)
            return
        cell = cells[k]
        for v in candidates(cell):
            if fits(filling, cell, v):
                filling[cell] = v
                yield from rec(k + 1)
                del filling[cell]

    yield from rec(0)


def semistandard_fillings(shape: SkewShape, k: int) -> Iterator[dict]:
    def fits(f, cell, v):
        i, j = cell
        left = f.get((i, j - 1))
        above = f.get((i - 1, j))
        return (left is None or left <= v) and (above is None or above < v)

    return _fill(shape.cells(), lambda cell: range(1, k + 1), fits)


def _symbol_name(v: int, n: int) -> str:
    if v <= 2 * n:
        i = (v + 1) // 2
        return str(i) if v % 2 else f"{i}bar"
    return f"{v - 2 * n}'"


@dataclass(frozen=True)
class KingTableau:
    """Symplectic tableau. Symbols are coded 1 < 1bar < 2 < 2bar ... as 1, 2, 3, 4 ..."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    n: int

    def weight(self) -> tuple[int, ...]:
        w = [0] * self.n
        for row in self.rows:
            for v in row:
                i = (v + 1) // 2 - 1
                w[i] += 1 if v % 2 else -1
        return tuple(w)

    def is_valid(self) -> bool:
        return _king_ok(self.rows, self.n)

    def __str__(self) -> str:
        return "/".join(" ".join(_symbol_name(v, self.n) for v in row) for row in self.rows)


@dataclass(frozen=True)
class SpoTableau:
    """Orthosymplectic tableau; symbols above 2n stand for the primed letters 1' < 2' ..."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]
    n: int
    m: int

    def weight(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        wx = [0] * self.n
        wy = [0] * self.m
        for row in self.rows:
            for v in row:
                if v > 2 * self.n:
                    wy[v - 2 * self.n - 1] += 1
                else:
                    wx[(v + 1) // 2 - 1] += 1 if v % 2 else -1
        return tuple(wx), tuple(wy)

    def is_valid(self) -> bool:
        top = 2 * self.n
        prefixes = []
        for row in self.rows:
            k = sum(1 for v in row if v <= top)
            if any(v > top for v in row[:k]):
                return False
            prefixes.append(row[:k])
        lengths = [len(p) for p in prefixes]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            return False
        if not _king_ok(tuple(p for p in prefixes if p), self.n):
            return False
        cells = {(i, j): v for i, row in enumerate(self.rows, 1) for j, v in enumerate(row, 1)}
        for (i, j), v in cells.items():
            if v <= top:
                continue
            left = cells.get((i, j - 1), 0)
            above = cells.get((i - 1, j), 0)
            if (left > top and left >= v) or (above > top and above > v):
                return False
        return True

    def __str__(self) -> str:
        return "/".join(" ".join(_symbol_name(v, self.n) for v in row) for row in self.rows)


def _king_ok(rows, n) -> bool:
    for i, row in enumerate(rows, 1):
        if any(v < 2 * i - 1 or v > 2 * n for v in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if i > 1:
            above = rows[i - 2]
            if len(row) > len(above) or any(a >= b for a, b in zip(above, row)):
                return False
    return True


def _rows_of(shape: Partition, filling: dict) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(filling[(i, j)] for j in range(1, p + 1)) for i, p in enumerate(shape, 1))


def king_tableaux(lam: Partition, n: int) -> Iterator[KingTableau]:
    lam = Partition(lam)
    if len(lam) > n:
        return

    def fits(f, cell, v):
        i, j = cell
        left = f.get((i, j - 1))
        above = f.get((i - 1, j))
        return v >= 2 * i - 1 and (left is None or left <= v) and (above is None or above < v)

    for filling in _fill(lam.cells(), lambda cell: range(2 * cell[0] - 1, 2 * n + 1), fits):
        yield KingTableau(lam, _rows_of(lam, filling), n)


def spo_tableaux(lam: Partition, n: int, m: int) -> Iterator[SpoTableau]:
    lam = Partition(lam)
    top = 2 * n

    def fits(f, cell, v):
        i, j = cell
        left = f.get((i, j - 1))
        above = f.get((i - 1, j))
        if v <= top:
            return (
                v >= 2 * i - 1
                and (left is None or left <= v)
                and (above is None or above < v)
            )
        left_ok = left is None or left <= top or left < v
        above_ok = above is None or above <= top or above <= v
        return left_ok and above_ok

    for filling in _fill(lam.cells(), lambda cell: range(1, top + m + 1), fits):
        yield SpoTableau(lam, _rows_of(lam, filling), n, m)


# ---------------------------------------------------------------------------
# Schur and skew Schur


def skew_schur(shape: SkewShape, k: int, variables: str = "y") -> LaurentPoly:
    """Generating function of semistandard fillings of ``shape`` with 1..k.

    The result lives in k y-variables (default) or k x-variables.
    """
    return _skew_schur(shape.outer, shape.inner, k, variables)


@lru_cache(maxsize=None)
def _skew_schur(outer: Partition, inner: Partition, k: int, variables: str) -> LaurentPoly:
    shape = SkewShape(outer, inner)
    nx, ny = (0, k) if variables == "y" else (k, 0)
    step = 1 if variables == "y" else 2
    terms: dict = {}
    for filling in semistandard_fillings(shape, k):
        w = [0] * k
        for v in filling.values():
            w[v - 1] += step
        key = tuple(w)
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(nx, ny, terms)


def schur_tableaux(lam: Partition, n: int) -> LaurentPoly:
    return skew_schur(SkewShape(Partition(lam)), n, variables="x")


def vandermonde_type(exponents: Sequence[int], n: int) -> LaurentPoly:
    """det(x_i^(a_j)) with ordinary integer exponents a_j."""
    matrix = [[LaurentPoly.x(i, n, 0, a) for a in exponents] for i in range(1, n + 1)]
    return determinant(matrix)


@lru_cache(maxsize=None)
def schur_bialternant(lam: Partition, n: int) -> LaurentPoly:
    lam = Partition(lam)
    if len(lam) > n:
        return LaurentPoly.zero(n)
    if n == 0:
        return LaurentPoly.constant(1, 0)
    parts = lam.padded(n)
    num = vandermonde_type([parts[j] + n - 1 - j for j in range(n)], n)
    den = vandermonde_type([n - 1 - j for j in range(n)], n)
    return exact_divide(num, den)


def schur(lam: Partition, n: int, route: str = "bialternant") -> LaurentPoly:
    lam = Partition(lam)
    if route == "bialternant":
        return schur_bialternant(lam, n)
    if route == "tableaux":
        return schur_tableaux(lam, n)
    raise ValueError(f"unknown route {route!r}")


# ---------------------------------------------------------------------------
# Weyl-type determinants


def _odd_entry(i: int, n: int, doubled_exp: int) -> LaurentPoly:
    x = LaurentPoly(n, 0, {tuple(doubled_exp if k == i else 0 for k in range(n)): 1})
    return x - x.bar()


def _even_entry(i: int, n: int, doubled_exp: int) -> LaurentPoly:
    x = LaurentPoly(n, 0, {tuple(doubled_exp if k == i else 0 for k in range(n)): 1})
    return x + x.bar()


def alternant_minus(doubled: Sequence[int]) -> LaurentPoly:
    """A_alpha = det(x_i^(alpha_j) - 1/x_i^(alpha_j)), alpha given in doubled units."""
    n = len(doubled)
    if n == 0:
        return LaurentPoly.constant(1, 0)
    return determinant([[_odd_entry(i, n, a) for a in doubled] for i in range(n)])


def alternant_plus(doubled: Sequence[int]) -> LaurentPoly:
    """N_alpha = det(x_i^(alpha_j) + 1/x_i^(alpha_j)), alpha given in doubled units."""
    n = len(doubled)
    if n == 0:
        return LaurentPoly.constant(1, 0)
    return determinant([[_even_entry(i, n, a) for a in doubled] for i in range(n)])


@lru_cache(maxsize=None)
def _weyl_minus(lam: Partition, family: str, n: int) -> LaurentPoly:
    if len(lam) > n:
        return LaurentPoly.zero(n)
    if n == 0:
        return LaurentPoly.constant(1, 0)
    delta = StaircaseDelta.for_family(family, n)
    return exact_divide(alternant_minus(delta.shifted(lam)), alternant_minus(delta.doubled))


def symplectic_weyl(lam: Partition, n: int) -> LaurentPoly:
    return _weyl_minus(Partition(lam), "symplectic", n)


@lru_cache(maxsize=None)
def symplectic_king(lam: Partition, n: int) -> LaurentPoly:
    terms: dict = {}
    for t in king_tableaux(lam, n):
        key = tuple(2 * w for w in t.weight())
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(n, 0, terms)


def symplectic_char(lam: Partition, n: int, route: str = "weyl") -> LaurentPoly:
    lam = Partition(lam)
    if route == "weyl":
        return symplectic_weyl(lam, n)
    if route == "king":
        return symplectic_king(lam, n)
    raise ValueError(f"unknown route {route!r}")


def odd_orthogonal_char(lam: Partition, n: int) -> LaurentPoly:
    return _weyl_minus(Partition(lam), "odd_orthogonal", n)


@lru_cache(maxsize=None)
def _even_orthogonal(lam: Partition, n: int) -> LaurentPoly:
    if len(lam) > n:
        return LaurentPoly.zero(n)
    if n == 0:
        return LaurentPoly.constant(1, 0)
    delta = StaircaseDelta.even_orthogonal(n)
    ratio = exact_divide(alternant_plus(delta.shifted(lam)), alternant_plus(delta.doubled))
    scale = Fraction(2, 2 if lam.part(n) == 0 else 1)
    return ratio * scale


def even_orthogonal_char(lam: Partition, n: int) -> LaurentPoly:
    return _even_orthogonal(Partition(lam), n)


# ---------------------------------------------------------------------------
# hook Schur and orthosymplectic


@lru_cache(maxsize=None)
def hook_schur(lam: Partition, n: int, m: int) -> LaurentPoly:
    """Sum over mu inside lam of s_mu(X) s_{lam'/mu'}(Y)."""
    lam = Partition(lam)
    total = LaurentPoly.zero(n, m)
    conj = lam.conjugate()
    for mu in subpartitions(lam, max_len=n):
        sy = skew_schur(SkewShape(conj, mu.conjugate()), m)
        if sy:
            total = total + schur(mu, n).lift(n, m) * sy.lift(n, m)
    return total


@lru_cache(maxsize=None)
def spo_definition(lam: Partition, n: int, m: int) -> LaurentPoly:
    lam = Partition(lam)
    total = LaurentPoly.zero(n, m)
    conj = lam.conjugate()
    for mu in subpartitions(lam, max_len=n):
        sy = skew_schur(SkewShape(conj, mu.conjugate()), m)
        if sy:
            total = total + symplectic_char(mu, n).lift(n, m) * sy.lift(n, m)
    return total


@lru_cache(maxsize=None)
def spo_tableau_route(lam: Partition, n: int, m: int) -> LaurentPoly:
    terms: dict = {}
    for t in spo_tableaux(lam, n, m):
        wx, wy = t.weight()
        key = tuple(2 * w for w in wx) + wy
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(n, m, terms)


def orthosymplectic_char(lam: Partition, n: int, m: int, route: str = "definition") -> LaurentPoly:
    lam = Partition(lam)
    if route == "definition":
        return spo_definition(lam, n, m)
    if route == "tableaux":
        return spo_tableau_route(lam, n, m)
    raise ValueError(f"unknown route {route!r}")


def character(kind: CharacterKind, lam: Partition, n: int, m: int = 0) -> LaurentPoly:
    """Evaluate a basis element in the ring with n x-variables and m y-variables."""
    lam = Partition(lam)
    if kind is CharacterKind.SCHUR:
        p = schur(lam, n)
    elif kind is CharacterKind.SYMPLECTIC:
        p = symplectic_char(lam, n)
    elif kind is CharacterKind.ODD_ORTHOGONAL:
        p = odd_orthogonal_char(lam, n)
    elif kind is CharacterKind.EVEN_ORTHOGONAL:
        p = even_orthogonal_char(lam, n)
    elif kind is CharacterKind.HOOK_SCHUR:
        return hook_schur(lam, n, m)
    elif kind is CharacterKind.ORTHOSYMPLECTIC:
        return orthosymplectic_char(lam, n, m)
    else:
        raise ValueError(f"{kind} is not a partition-indexed basis")
    return p.lift(n, m) if m else p


def checked_character(kind: CharacterKind, lam: Partition, n: int, m: int = 0) -> LaurentPoly:
    """Like :func:`character`, but evaluates every available second route and
    raises :class:`RouteMismatchError` on disagreement."""
    lam = Partition(lam)
    value = character(kind, lam, n, m)
    other: Optional[LaurentPoly] = None
    if kind is CharacterKind.SCHUR:
        other = schur(lam, n, route="tableaux")
    elif kind is CharacterKind.SYMPLECTIC:
        other = symplectic_char(lam, n, route="king")
    elif kind is CharacterKind.ORTHOSYMPLECTIC:
        other = orthosymplectic_char(lam, n, m, route="tableaux")
    if other is not None:
        other = other.lift(value.nx, value.ny)
        if other != value:
            raise RouteMismatchError(f"{kind.label}{lam} with n={n}, m={m}: routes disagree")
    return value


def branch_last_y(kind: CharacterKind, lam: Partition, n: int, m: int) -> list[tuple[Partition, int]]:
    """Check f_lam(X/Y) = sum over vertical strips lam/pi of f_pi(X/Y-) y_m^|lam/pi|.

    Returns the (pi, exponent) pairs used; raises IdentityViolation on mismatch.
    """
    if kind not in (CharacterKind.HOOK_SCHUR, CharacterKind.ORTHOSYMPLECTIC):
        raise ValueError("branching is defined for hook_schur and orthosymplectic")
    if m < 1:
        raise ValueError("branching needs at least one y-variable")
    lam = Partition(lam)
    lhs = character(kind, lam, n, m)
    rhs = LaurentPoly.zero(n, m)
    used = []
    for s in range(0, len(lam) + 1):
        for pi in vertical_strip_removals(lam, s):
            used.append((pi, s))
            rhs = rhs + character(kind, pi, n, m - 1).lift(n, m) * LaurentPoly.y(m, n, m, s)
    if lhs != rhs:
        raise IdentityViolation(f"branching fails for {kind.label}{lam}, n={n}, m={m}")
    return used
