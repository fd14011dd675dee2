"""Sparse Laurent polynomials with exact rational coefficients.

Variables are x_1..x_n followed by y_1..y_m. Exponent vectors store the
x-part in doubled units (k means x^(k/2)) so half-integer powers need no
special handling; y-exponents are ordinary nonnegative integers.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

Coeff = Union[int, Fraction]
Exponent = tuple[int, ...]


class NotDivisibleError(ArithmeticError):
    pass


def _normalize(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _quotient(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _normalize(Fraction(a) / b)


def _double(e) -> int:
    d = Fraction(e) * 2
    if d.denominator != 1:
        raise ValueError(f"x-exponent {e} is not a multiple of 1/2")
    return int(d)


def format_coeff(c: Coeff) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    __slots__ = ("nx", "ny", "_terms", "_hash")

    def __init__(self, nx: int, ny: int = 0, terms: Optional[Mapping[Exponent, Coeff]] = None):
        self.nx = nx
        self.ny = ny
        clean = {}
        if terms:
            width = nx + ny
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != width:
                    raise ValueError(f"exponent {exp} does not have length {width}")
                if any(e < 0 for e in exp[nx:]):
                    raise ValueError(f"negative y-exponent in {exp}")
                if c:
                    clean[exp] = _normalize(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nx: int, ny: int, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.nx, p.ny, p._terms, p._hash = nx, ny, terms, None
        return p

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nx: int, ny: int = 0) -> "LaurentPoly":
        return cls._raw(nx, ny, {})

    @classmethod
    def constant(cls, c: Coeff, nx: int, ny: int = 0) -> "LaurentPoly":
        return cls(nx, ny, {(0,) * (nx + ny): c})

    @classmethod
    def monomial(cls, x_exps: Sequence = (), y_exps: Sequence[int] = (), coeff: Coeff = 1,
                 nx: Optional[int] = None, ny: Optional[int] = None) -> "LaurentPoly":
        """Monomial from ordinary exponents (x-exponents may be half-integers)."""
        nx = len(x_exps) if nx is None else nx
        ny = len(y_exps) if ny is None else ny
        xs = [_double(e) for e in x_exps] + [0] * (nx - len(x_exps))
        ys = [int(e) for e in y_exps] + [0] * (ny - len(y_exps))
        return cls(nx, ny, {tuple(xs + ys): coeff})

    @classmethod
    def x(cls, i: int, nx: int, ny: int = 0, power=1) -> "LaurentPoly":
        exps = [0] * nx
        exps[i - 1] = power
        return cls.monomial(exps, (), 1, nx, ny)

    @classmethod
    def y(cls, j: int, nx: int, ny: int, power: int = 1) -> "LaurentPoly":
        exps = [0] * ny
        exps[j - 1] = power
        return cls.monomial((), exps, 1, nx, ny)

    # -- basic protocol ----------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Coeff]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.nx, self.ny)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.nx, self.ny) == (other.nx, other.ny) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nx, self.ny, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nx}, {self.ny}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if (other.nx, other.ny) != (self.nx, self.ny):
                raise ValueError(
                    f"dimension mismatch: ({self.nx},{self.ny}) vs ({other.nx},{other.ny})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other, self.nx, self.ny)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _normalize(v)
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nx, self.ny, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.nx, self.ny, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly.zero(self.nx, self.ny)
            return LaurentPoly._raw(
                self.nx, self.ny, {e: _normalize(c * other) for e, c in self._terms.items()}
            )
        other = self._coerce(other)
        out: dict = {}
        get = out.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(
            self.nx, self.ny, {e: _normalize(c) for e, c in out.items() if c}
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly.constant(1, self.nx, self.ny)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- substitutions -----------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """x_i -> 1/x_i for every x-variable."""
        nx = self.nx
        return LaurentPoly._raw(
            nx, self.ny,
            {tuple(-a for a in e[:nx]) + e[nx:]: c for e, c in self._terms.items()},
        )

    def invert_x(self, i: int) -> "LaurentPoly":
        """x_i -> 1/x_i for a single variable."""
        k = i - 1
        return LaurentPoly._raw(
            self.nx, self.ny,
            {e[:k] + (-e[k],) + e[k + 1:]: c for e, c in self._terms.items()},
        )

    def permute_x(self, perm: Sequence[int]) -> "LaurentPoly":
        """Send x_i to x_{perm[i-1]} (perm is a 1-based permutation)."""
        return self._permute(perm, 0, self.nx)

    def permute_y(self, perm: Sequence[int]) -> "LaurentPoly":
        return self._permute(perm, self.nx, self.ny)

    def _permute(self, perm, offset, count):
        if sorted(perm) != list(range(1, count + 1)):
            raise ValueError(f"not a permutation of 1..{count}: {perm}")
        out = {}
        for e, c in self._terms.items():
            block = [0] * count
            for i, target in enumerate(perm):
                block[target - 1] = e[offset + i]
            out[e[:offset] + tuple(block) + e[offset + count:]] = c
        return LaurentPoly._raw(self.nx, self.ny, out)

    def lift(self, nx: int, ny: int) -> "LaurentPoly":
        """Embed into a ring with at least as many x- and y-variables."""
        if nx < self.nx or ny < self.ny:
            raise ValueError("lift can only add variables")
        pad_x = (0,) * (nx - self.nx)
        pad_y = (0,) * (ny - self.ny)
        k = self.nx
        return LaurentPoly._raw(
            nx, ny, {e[:k] + pad_x + e[k:] + pad_y: c for e, c in self._terms.items()}
        )

    # -- ordering and printing ----------------------------------------------

    def sort_key(self, exp: Exponent):
        """Graded lexicographic key, degree measured in halved x-units."""
        nx = self.nx
        doubled = exp[:nx] + tuple(2 * b for b in exp[nx:])
        return (sum(doubled), doubled)

    def sorted_terms(self) -> list[tuple[Exponent, Coeff]]:
        return sorted(self._terms.items(), key=lambda t: self.sort_key(t[0]), reverse=True)

    def _var_name(self, k: int) -> str:
        return f"x{k + 1}" if k < self.nx else f"y{k - self.nx + 1}"

    def _format_exp(self, k: int, e: int) -> str:
        if k < self.nx:
            if e % 2:
                return f"{e}/2"
            e //= 2
        return str(e)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            factors = []
            for k, e in enumerate(exp):
                if e == 0:
                    continue
                name = self._var_name(k)
                shown = self._format_exp(k, e)
                factors.append(name if shown == "1" else f"{name}^{shown}")
            mono = "*".join(factors)
            neg = c < 0
            mag = format_coeff(abs(c))
            if not mono:
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)

    def to_json(self) -> list[dict]:
        out = []
        for exp, c in self.sorted_terms():
            out.append({
                "x_exponents": [format_coeff(Fraction(e, 2)) for e in exp[: self.nx]],
                "y_exponents": [str(e) for e in exp[self.nx:]],
                "coeff": format_coeff(c),
            })
        return out

    @classmethod
    def from_json(cls, data: Iterable[dict], nx: int, ny: int) -> "LaurentPoly":
        terms = {}
        for t in data:
            xs = [_double(Fraction(v)) for v in t["x_exponents"]]
            ys = [int(v) for v in t["y_exponents"]]
            terms[tuple(xs + ys)] = _normalize(Fraction(t["coeff"]))
        return cls(nx, ny, terms)


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient q with q * den == num; raises NotDivisibleError otherwise.

    Both operands are shifted by monomials into the ordinary polynomial ring,
    then leading terms are cancelled in graded lexicographic order.
    """
    num_checked = den._coerce(num)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num_checked.is_zero():
        return LaurentPoly.zero(den.nx, den.ny)
    width = den.nx + den.ny
    lo_num = [min(e[k] for e in num_checked._terms) for k in range(width)]
    lo_den = [min(e[k] for e in den._terms) for k in range(width)]

    def shift(p, lo):
        return {tuple(a - b for a, b in zip(e, lo)): c for e, c in p._terms.items()}

    rem = shift(num_checked, lo_num)
    dterms = shift(den, lo_den)
    key = den.sort_key
    lead_exp = max(dterms, key=key)
    lead_c = dterms[lead_exp]
    others = [(e, c) for e, c in dterms.items() if e != lead_exp]

    heap = [tuple(-v for v in _flat(key(e))) + (e,) for e in rem]
    heapq.heapify(heap)
    quotient = {}
    leftover = False
    while heap:
        e = heapq.heappop(heap)[-1]
        c = rem.get(e)
        if not c:
            continue
        if any(a < b for a, b in zip(e, lead_exp)):
            leftover = True
            break
        qe = tuple(a - b for a, b in zip(e, lead_exp))
        qc = _quotient(c, lead_c)
        quotient[qe] = qc
        del rem[e]
        for de, dc in others:
            t = tuple(a + b for a, b in zip(qe, de))
            v = rem.get(t, 0) - qc * dc
            if v:
                if t not in rem:
                    heapq.heappush(heap, tuple(-x for x in _flat(key(t))) + (t,))
                rem[t] = v
            else:
                rem.pop(t, None)
    if leftover or rem:
        raise NotDivisibleError("polynomial division left a nonzero remainder")
    offset = [a - b for a, b in zip(lo_num, lo_den)]
    return LaurentPoly(
        den.nx, den.ny,
        {tuple(a + b for a, b in zip(e, offset)): c for e, c in quotient.items()},
    )


def _flat(key) -> tuple[int, ...]:
    deg, exps = key
    return (deg,) + exps


def determinant(matrix: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Cofactor expansion along rows, memoized on the set of remaining columns."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError("determinant needs a square matrix")
    if size == 0:
        raise ValueError("determinant of an empty matrix needs an explicit ring")
    nx, ny = matrix[0][0].nx, matrix[0][0].ny
    memo: dict[int, LaurentPoly] = {0: LaurentPoly.constant(1, nx, ny)}

    def minor(cols: int) -> LaurentPoly:
        if cols in memo:
            return memo[cols]
        row = size - bin(cols).count("1")
        total = LaurentPoly.zero(nx, ny)
        sign = 1
        for j in range(size):
            bit = 1 << j
            if cols & bit:
                entry = matrix[row][j]
                if entry:
                    term = entry * minor(cols & ~bit)
                    total = total + term if sign > 0 else total - term
                sign = -sign
        memo[cols] = total
        return total

    return minor((1 << size) - 1)
