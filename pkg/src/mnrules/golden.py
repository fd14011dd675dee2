"""Golden corpus of worked examples, serialized as flat JSON files."""
from __future__ import annotations

import difflib
import json
import os
from pathlib import Path
from typing import Optional

from .characters import orthosymplectic_char, symplectic_char
from .harness import RuleSelector, expand, expand_parts, record_to_json
from .laurent import format_coeff
from .partitions import Partition, StaircaseDelta, mu_q

ENV_VAR = "MNRULES_GOLDEN_DIR"


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(__file__).parent / "golden"


def _expansion_doc(rule, mu, r, n, m=None, title=""):
    sel = RuleSelector(rule, Partition(mu), r, n, m)
    doc = {"title": title, **record_to_json(expand(sel))}
    parts = expand_parts(sel)
    if parts is not None:
        doc["unmerged"] = {
            name: [
                {"basis": k.label, "partition": list(lam), "coeff": format_coeff(c)}
                for (k, lam), c in getattr(parts, name).items()
            ]
            for name in ("additions", "removals", "third")
        }
    return doc


def golden_documents() -> dict[str, dict]:
    mu_example = mu_q(Partition([3, 2, 1]), StaircaseDelta.symplectic(4), 9, 3)
    return {
        "classical_p4_s31.json": _expansion_doc(
            "classical", [3, 1], 4, 6, title="p_4 s_(3,1), border strip additions"),
        "sp_p6_sp431.json": _expansion_doc(
            "sp", [4, 3, 1], 6, 3, title="pbar_6 sp_(4,3,1)"),
        "oo_p2_oo21.json": _expansion_doc(
            "oo", [2, 1], 2, 3, title="pbar_2 oo_(2,1) (power r=2)"),
        "oe_p3_oe21.json": _expansion_doc(
            "oe", [2, 1], 3, 3, title="pbar_3 oe_(2,1); oe_(2,2,2) merges two -1/2 terms"),
        "mu_q_example.json": {
            "title": "reflected partition mu^(q) for mu=(3,2,1,0), n=4, r=9, q=3",
            "mu": [3, 2, 1],
            "family": "symplectic",
            "n": 4,
            "r": 9,
            "q": 3,
            "mu_q": list(mu_example[0]),
            "p_of_q": mu_example[1],
        },
        "spo_p3_spo22.json": _expansion_doc(
            "spo", [2, 2], 3, 2, 2, title="P_3(X,Xbar/Y) spo_(2,2), n=2, m=2"),
        "spo_p3_spo1.json": _expansion_doc(
            "spo", [1], 3, 2, 1, title="P_3(X,Xbar/Y) spo_(1), n=2, m=1"),
        "character_displays.json": {
            "title": "sp_(1,1)(x1,x2) and spo_(1,1) with n=2, m=1",
            "sp_11_n2": symplectic_char(Partition([1, 1]), 2).to_json(),
            "spo_11_n2_m1": orthosymplectic_char(Partition([1, 1]), 2, 1).to_json(),
        },
    }


def render(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def write(path: Optional[Path] = None) -> list[Path]:
    path = Path(path) if path else default_dir()
    path.mkdir(parents=True, exist_ok=True)
    written = []
    for name, doc in golden_documents().items():
        target = path / name
        target.write_text(render(doc), encoding="utf-8")
        written.append(target)
    return written


def check(path: Optional[Path] = None) -> list[str]:
    """Unified diffs for every drifted or missing file (empty list means clean)."""
    path = Path(path) if path else default_dir()
    problems = []
    for name, doc in golden_documents().items():
        target = path / name
        fresh = render(doc)
        if not target.exists():
            problems.append(f"missing golden file {target}")
            continue
        stored = target.read_text(encoding="utf-8")
        if stored != fresh:
            problems.append("".join(difflib.unified_diff(
                stored.splitlines(keepends=True), fresh.splitlines(keepends=True),
                fromfile=f"golden/{name}", tofile=f"computed/{name}",
            )))
    return problems
