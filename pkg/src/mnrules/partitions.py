"""Partitions, skew shapes and strip combinatorics.

Strip enumerators work on beta-sets (first-column hook lengths): adding a
border strip of size r is moving one bead r steps up, and its height is the
number of beads jumped over.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Optional


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, but ``part(i)`` is total and
    returns 0 beyond the length, so padded formulas read naturally.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"4,3,1"``; ``""`` and ``"0"`` give the empty partition."""
        text = text.strip()
        if text in ("", "0", "[]", "()"):
            return cls()
        try:
            return cls(int(tok) for tok in text.strip("[]()").split(","))
        except ValueError as exc:
            raise ValueError(f"invalid partition {text!r}: {exc}") from None

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part, 0 past the length."""
        if i < 1:
            raise IndexError(i)
        return self[i - 1] if i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p >= i) for i in range(1, self[0] + 1))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, p in enumerate(self, 1) for j in range(1, p + 1)]


def conjugate(lam: Partition) -> Partition:
    return Partition(lam).conjugate()


def partitions_of(size: int, max_part: Optional[int] = None, max_len: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``size`` in descending lexicographic order."""
    if max_part is None:
        max_part = size
    if max_len is None:
        max_len = size

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in rec(size, max_part, max_len):
        yield Partition(parts)


def partitions_up_to(max_size: int, max_len: Optional[int] = None) -> Iterator[Partition]:
    for k in range(max_size + 1):
        yield from partitions_of(k, max_len=max_len)


def subpartitions(lam: Partition, max_len: Optional[int] = None) -> Iterator[Partition]:
    """Every mu contained in lam (optionally with at most ``max_len`` parts)."""
    lam = Partition(lam)
    rows = len(lam) if max_len is None else min(len(lam), max_len)

    def rec(i, cap):
        if i == rows:
            yield ()
            return
        for v in range(min(cap, lam[i]), -1, -1):
            if v == 0:
                yield ()
            else:
                for rest in rec(i + 1, v):
                    yield (v,) + rest

    for parts in rec(0, lam[0] if lam else 0):
        yield Partition(parts)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i, p in enumerate(self.outer, 1)
            for j in range(self.inner.part(i) + 1, p + 1)
        ]

    def conjugate(self) -> "SkewShape":
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())


class StripKind(NamedTuple):
    is_horizontal: bool
    is_vertical: bool
    is_border: bool
    height: Optional[int]


def classify_strip(shape: SkewShape) -> StripKind:
    cells = shape.cells()
    cellset = set(cells)
    rows = {i for i, _ in cells}
    cols = [j for _, j in cells]
    horizontal = len(set(cols)) == len(cols)
    vertical = len(rows) == len(cells)

    border = False
    if cells:
        seen = {cells[0]}
        stack = [cells[0]]
        while stack:
            i, j = stack.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cellset and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        connected = len(seen) == len(cells)
        has_block = any(
            (i + 1, j) in cellset and (i, j + 1) in cellset and (i + 1, j + 1) in cellset
            for i, j in cells
        )
        border = connected and not has_block
    return StripKind(horizontal, vertical, border, len(rows) - 1 if border else None)


def _beta(lam: Partition, length: int) -> list[int]:
    return [lam.part(i) + length - i for i in range(1, length + 1)]


def _from_beta(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    return Partition(b - (k - i) for i, b in enumerate(beta, 1))


def border_strip_additions(mu: Partition, r: int, n: Optional[int] = None) -> list[tuple[Partition, int]]:
    """Pairs (eta, ht(eta/mu)) with eta/mu a border strip of size r and
    at most ``n`` rows (unbounded when ``n`` is None)."""
    if r < 1:
        raise ValueError("strip size must be positive")
    mu = Partition(mu)
    length = len(mu) + r
    beta = _beta(mu, length)
    beads = set(beta)
    out = []
    for b in beta:
        if b + r in beads:
            continue
        height = sum(1 for c in beta if b < c < b + r)
        eta = _from_beta([c for c in beta if c != b] + [b + r])
        if n is None or len(eta) <= n:
            out.append((eta, height))
    out.sort(key=lambda t: t[0], reverse=True)
    return out


def border_strip_removals(mu: Partition, r: int) -> list[tuple[Partition, int]]:
    """Pairs (xi, ht(mu/xi)) with mu/xi a border strip of size r."""
    if r < 1:
        raise ValueError("strip size must be positive")
    mu = Partition(mu)
    beta = _beta(mu, len(mu))
    beads = set(beta)
    out = []
    for b in beta:
        if b - r < 0 or b - r in beads:
            continue
        height = sum(1 for c in beta if b - r < c < b)
        xi = _from_beta([c for c in beta if c != b] + [b - r])
        out.append((xi, height))
    out.sort(key=lambda t: t[0], reverse=True)
    return out


def vertical_strip_removals(lam: Partition, s: int) -> list[Partition]:
    """All nu inside lam with lam/nu a vertical strip of size s."""
    lam = Partition(lam)
    out = []
    for rows in combinations(range(len(lam)), s):
        parts = list(lam)
        for i in rows:
            parts[i] -= 1
        if all(a >= b for a, b in zip(parts, parts[1:])):
            out.append(Partition(parts))
    out.sort(reverse=True)
    return out


def vertical_strip_additions(mu: Partition, s: int, n: Optional[int] = None) -> list[Partition]:
    mu = Partition(mu)
    rows = len(mu) + s if n is None else n
    out = []
    for chosen in combinations(range(rows), s):
        parts = list(mu.padded(max(rows, len(mu))))
        for i in chosen:
            parts[i] += 1
        if all(a >= b for a, b in zip(parts, parts[1:])):
            out.append(Partition(parts))
    out.sort(reverse=True)
    return out


def horizontal_strip_additions(mu: Partition, s: int, n: Optional[int] = None) -> list[Partition]:
    """All eta with eta/mu a horizontal strip of size s, at most n rows."""
    mu = Partition(mu)
    rows = len(mu) + 1 if n is None else n
    if len(mu) > rows:
        return []
    base = mu.padded(rows)
    out = []

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                out.append(Partition(acc))
            return
        cap = left if i == 0 else min(left, base[i - 1] - base[i])
        for k in range(cap, -1, -1):
            rec(i + 1, left - k, acc + [base[i] + k])

    rec(0, s, [])
    out.sort(reverse=True)
    return out


def horizontal_strip_removals(lam: Partition, s: int) -> list[Partition]:
    lam = Partition(lam)
    return sorted((nu.conjugate() for nu in vertical_strip_removals(lam.conjugate(), s)), reverse=True)


@dataclass(frozen=True)
class StaircaseDelta:
    """Staircase shift stored as twice its entries, so every entry is an integer."""

    doubled: tuple[int, ...]
    family: str

    @classmethod
    def symplectic(cls, n: int) -> "StaircaseDelta":
        return cls(tuple(2 * (n - i) for i in range(n)), "symplectic")

    @classmethod
    def odd_orthogonal(cls, n: int) -> "StaircaseDelta":
        return cls(tuple(2 * (n - i) - 1 for i in range(n)), "odd_orthogonal")

    @classmethod
    def even_orthogonal(cls, n: int) -> "StaircaseDelta":
        return cls(tuple(2 * (n - 1 - i) for i in range(n)), "even_orthogonal")

    @classmethod
    def for_family(cls, family: str, n: int) -> "StaircaseDelta":
        return getattr(cls, family)(n)

    @property
    def n(self) -> int:
        return len(self.doubled)

    def shifted(self, mu: Partition) -> list[int]:
        """2(mu + delta) as a list of length n."""
        return [2 * p + d for p, d in zip(Partition(mu).padded(self.n), self.doubled)]


def m_index(mu: Partition, delta: StaircaseDelta, r: int) -> int:
    """Largest i with mu_i + delta_i >= r, or 0 if there is none."""
    shifted = delta.shifted(mu)
    best = 0
    for i, a in enumerate(shifted, 1):
        if a >= 2 * r:
            best = i
    return best


def _check_third_sum_index(shifted: list[int], r: int, q: int) -> None:
    if not 1 <= q <= len(shifted):
        raise ValueError(f"q={q} out of range 1..{len(shifted)}")
    if shifted[q - 1] >= 2 * r:
        raise ValueError(f"q={q} requires mu_q + delta_q < r")


def mu_q(mu: Partition, delta: StaircaseDelta, r: int, q: int) -> Optional[tuple[Partition, int]]:
    """Reflect entry q of mu+delta to r-(mu_q+delta_q), re-sort, subtract delta.

    Returns ``(mu^(q), p(q))`` or None when the reflected entry collides with
    another entry (the corresponding character term is zero).
    """
    shifted = delta.shifted(mu)
    _check_third_sum_index(shifted, r, q)
    new = 2 * r - shifted[q - 1]
    rest = shifted[: q - 1] + shifted[q:]
    if new in rest:
        return None
    big_delta = sorted(rest + [new], reverse=True)
    p = big_delta.index(new) + 1
    return Partition((a - d) // 2 for a, d in zip(big_delta, delta.doubled)), p


def mu_q_combinatorial(mu: Partition, delta: StaircaseDelta, r: int, q: int) -> Optional[tuple[Partition, int]]:
    """Same result as :func:`mu_q`, built by moving rows of the diagram."""
    shifted = delta.shifted(mu)
    _check_third_sum_index(shifted, r, q)
    new = 2 * r - shifted[q - 1]
    if any(a == new for j, a in enumerate(shifted, 1) if j != q):
        return None
    p = 1 + sum(1 for j, a in enumerate(shifted, 1) if j != q and a > new)

    rows = list(Partition(mu).padded(delta.n))
    del rows[q - 1]
    if p < q:
        for i in range(p - 1, q - 1):
            rows[i] += 1
    elif p > q:
        for i in range(q - 1, p - 1):
            rows[i] -= 1
    rows.insert(p - 1, (new - delta.doubled[p - 1]) // 2)
    return Partition(rows), p
