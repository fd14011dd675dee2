"""Rule selection, left-hand products and rendered output for the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import characters as ch
from . import rules
from .characters import CharacterKind
from .laurent import LaurentPoly, format_coeff
from .partitions import Partition
from .rules import FormalExpansion, MixedExpansion, MixedTerm

RULES = ("classical", "hook", "sp", "oo", "oe", "spo", "pieri-h", "pieri-e")
SUPER_RULES = ("hook", "spo")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RuleSelector:
    rule: str
    mu: Partition
    r: int
    n: int
    m: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "mu", Partition(self.mu))
        if self.rule not in RULES:
            raise UsageError(f"unknown rule {self.rule!r}; choose from {', '.join(RULES)}")
        if self.n < 0:
            raise UsageError("n must be nonnegative")
        if self.rule in SUPER_RULES:
            if self.m is None or self.m < 0:
                raise UsageError(f"rule {self.rule} needs --m >= 0")
        elif self.m is not None:
            raise UsageError(f"--m is only meaningful for {' and '.join(SUPER_RULES)}")
        min_r = 0 if self.rule.startswith("pieri") else 1
        if self.r < min_r:
            raise UsageError(f"r must be at least {min_r} for rule {self.rule}")
        if self.rule != "hook" and len(self.mu) > self.n:
            raise UsageError(f"partition {self.mu} has more than n={self.n} parts")

    @property
    def ny(self) -> int:
        return self.m or 0


@dataclass(frozen=True)
class ExpansionRecord:
    selector: RuleSelector
    terms: FormalExpansion
    mixed_terms: tuple[MixedTerm, ...] = ()
    vanishing: FormalExpansion = field(default_factory=FormalExpansion)

    def evaluate(self) -> LaurentPoly:
        s = self.selector
        total = self.terms.evaluate(s.n, s.ny)
        for t in self.mixed_terms:
            total = total + t.evaluate(s.n, s.ny)
        return total


def expand(sel: RuleSelector) -> ExpansionRecord:
    mu, r, n = sel.mu, sel.r, sel.n
    if sel.rule == "spo":
        mixed: MixedExpansion = rules.orthosymplectic_mn(mu, r, n, sel.m)
        return ExpansionRecord(sel, mixed.spo_terms, mixed.mixed_terms, mixed.vanishing)
    build = {
        "classical": lambda: rules.classical_mn(mu, r, n),
        "hook": lambda: rules.hook_mn(mu, r, n, sel.m),
        "sp": lambda: rules.symplectic_mn(mu, r, n),
        "oo": lambda: rules.odd_orthogonal_mn(mu, r, n),
        "oe": lambda: rules.even_orthogonal_mn(mu, r, n),
        "pieri-h": lambda: rules.pieri_h(mu, r, n),
        "pieri-e": lambda: rules.pieri_e(mu, r, n),
    }[sel.rule]
    return ExpansionRecord(sel, build())


def expand_parts(sel: RuleSelector) -> Optional[rules.MNParts]:
    """Unmerged three-sum form for the Weyl-type rules (None for the others)."""
    family = {"sp": "symplectic", "oo": "odd_orthogonal", "oe": "even_orthogonal"}.get(sel.rule)
    if family is None:
        return None
    return rules.weyl_mn_parts(sel.mu, sel.r, sel.n, family)


def lhs_product(sel: RuleSelector) -> LaurentPoly:
    mu, r, n, m = sel.mu, sel.r, sel.n, sel.ny
    if sel.rule == "classical":
        return ch.power_sum(r, n) * ch.schur(mu, n)
    if sel.rule == "pieri-h":
        return ch.complete_homogeneous(r, n) * ch.schur(mu, n)
    if sel.rule == "pieri-e":
        return ch.elementary(r, n) * ch.schur(mu, n)
    if sel.rule == "hook":
        return ch.super_power_sum(r, n, m) * ch.hook_schur(mu, n, m)
    if sel.rule == "sp":
        return ch.power_sum_bar(r, n) * ch.symplectic_char(mu, n)
    if sel.rule == "oo":
        return ch.power_sum_bar(r, n) * ch.odd_orthogonal_char(mu, n)
    if sel.rule == "oe":
        return ch.power_sum_bar(r, n) * ch.even_orthogonal_char(mu, n)
    if sel.rule == "spo":
        return ch.spo_power_sum(r, n, m) * ch.orthosymplectic_char(mu, n, m)
    raise UsageError(sel.rule)


# ---------------------------------------------------------------------------
# rendering


def _partition_text(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


def _signed(pieces: list[tuple[Fraction, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for c, body in pieces:
        c = Fraction(c)
        mag = "" if abs(c) == 1 else format_coeff(abs(c)) + "*"
        if not out:
            out.append(("-" if c < 0 else "") + mag + body)
        else:
            out.append(("- " if c < 0 else "+ ") + mag + body)
    return " ".join(out)


def _mixed_text(t: MixedTerm) -> str:
    # the Y factor is s_{lam'/mu'}; it is 1 when mu = lam
    body = f"sp_{_partition_text(t.sp_part)}(X)"
    if t.skew_outer != t.skew_inner:
        outer, inner = t.skew_outer.conjugate(), t.skew_inner.conjugate()
        body += f"*s_{_partition_text(outer)}/{_partition_text(inner)}(Y)"
    return body


def expansion_text(terms: FormalExpansion, mixed: tuple[MixedTerm, ...] = ()) -> str:
    pieces = [(c, f"{kind.label}_{_partition_text(lam)}") for (kind, lam), c in terms.items()]
    pieces += [(t.coeff, _mixed_text(t)) for t in mixed]
    return _signed(pieces)


def _latex_coeff(c: Fraction, first: bool) -> str:
    c = Fraction(c)
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if mag == 1:
        body = ""
    elif mag.denominator == 1:
        body = str(mag.numerator)
    else:
        body = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}\,"
    return (f" {sign} " if not first else sign) + body


def _latex_part(lam: Partition) -> str:
    return r"\emptyset" if not lam else "(" + ",".join(map(str, lam)) + ")"


def expansion_latex(terms: FormalExpansion, mixed: tuple[MixedTerm, ...] = ()) -> str:
    names = {"s": "s", "hs": r"\mathrm{hs}", "sp": r"\mathrm{sp}", "oo": r"\mathrm{oo}",
             "oe": r"\mathrm{oe}", "spo": r"\mathrm{spo}"}
    parts = []
    for (kind, lam), c in terms.items():
        parts.append(_latex_coeff(c, not parts) + f"{names[kind.label]}_{{{_latex_part(lam)}}}")
    for t in mixed:
        body = rf"\mathrm{{sp}}_{{{_latex_part(t.sp_part)}}}(X)"
        if t.skew_outer != t.skew_inner:
            outer, inner = t.skew_outer.conjugate(), t.skew_inner.conjugate()
            body += rf"\,s_{{{_latex_part(outer)}/{_latex_part(inner)}}}(Y)"
        parts.append(_latex_coeff(t.coeff, not parts) + body)
    return "".join(parts) if parts else "0"


def record_to_json(rec: ExpansionRecord) -> dict:
    s = rec.selector
    return {
        "rule": s.rule,
        "n": s.n,
        "m": s.m,
        "r": s.r,
        "mu": list(s.mu),
        "terms": [
            {"basis": kind.label, "partition": list(lam), "coeff": format_coeff(c)}
            for (kind, lam), c in rec.terms.items()
        ],
        "mixed_terms": [
            {
                "sp": list(t.sp_part),
                "skew_outer": list(t.skew_outer),
                "skew_inner": list(t.skew_inner),
                "coeff": format_coeff(t.coeff),
            }
            for t in rec.mixed_terms
        ],
    }


def record_from_json(data: dict) -> ExpansionRecord:
    sel = RuleSelector(data["rule"], Partition(data["mu"]), data["r"], data["n"], data.get("m"))
    terms = FormalExpansion(
        ((CharacterKind.from_name(t["basis"]), Partition(t["partition"])), Fraction(t["coeff"]))
        for t in data["terms"]
    )
    mixed = tuple(
        MixedTerm(Partition(t["sp"]), Partition(t["skew_outer"]), Partition(t["skew_inner"]),
                  rules._norm(Fraction(t["coeff"])))
        for t in data.get("mixed_terms", [])
    )
    return ExpansionRecord(sel, terms, mixed)


def render_record(rec: ExpansionRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record_to_json(rec), indent=2, ensure_ascii=False)
    if fmt == "latex":
        return expansion_latex(rec.terms, rec.mixed_terms)
    if fmt == "text":
        return expansion_text(rec.terms, rec.mixed_terms)
    raise UsageError(f"unknown format {fmt!r}")


def render_poly(p: LaurentPoly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(p.to_json(), indent=2)
    if fmt == "text":
        return p.to_text()
    if fmt == "latex":
        return poly_latex(p)
    raise UsageError(f"unknown format {fmt!r}")


def poly_latex(p: LaurentPoly) -> str:
    pieces = []
    for exp, c in p.sorted_terms():
        factors = []
        for k, e in enumerate(exp):
            if not e:
                continue
            name = f"x_{{{k + 1}}}" if k < p.nx else f"y_{{{k - p.nx + 1}}}"
            val = Fraction(e, 2) if k < p.nx else Fraction(e)
            if val == 1:
                factors.append(name)
            elif val.denominator == 1:
                factors.append(f"{name}^{{{val.numerator}}}")
            else:
                factors.append(f"{name}^{{{val.numerator}/{val.denominator}}}")
        mono = "".join(factors)
        if mono:
            pieces.append(_latex_coeff(c, not pieces) + mono)
        else:
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            lead = ("-" if c < 0 else "") if not pieces else f" {sign} "
            pieces.append(lead + format_coeff(abs(c)))
    return "".join(pieces) if pieces else "0"
