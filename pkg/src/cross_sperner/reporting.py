"""Report envelopes shared by every command.

All machine-readable output uses one fixed-key JSON envelope so that
consumers can parse any command's report with the same schema. Keys
never come and go; fields that do not apply to a command are null.
Serialization is canonical (sorted keys, two-space indent, trailing
newline), which makes reports byte-comparable across runs and worker
counts once the elapsed_ms field is masked.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .audits import AuditFinding
from .families import Family
from .search import ExtremalWitness, SearchReport

ENVELOPE_KEYS = (
    "n",
    "command",
    "method",
    "m_value",
    "formula_value",
    "agrees",
    "witnesses",
    "findings",
    "candidates_examined",
    "seed",
    "elapsed_ms",
)


def family_lists(fam: Family) -> list[list[int]]:
    return [list(m.elements()) for m in fam.members]


def witness_obj(w: ExtremalWitness) -> dict:
    split = None
    if w.split is not None:
        split = {
            "X": list(w.split.x.elements()),
            "Y": list(w.split.y.elements()),
        }
    return {
        "F": family_lists(w.pair.f),
        "G": family_lists(w.pair.g),
        "split": split,
    }


def finding_obj(f: AuditFinding) -> dict:
    return {
        "claim": f.claim,
        "passed": f.passed,
        "instance": f.instance,
        "counterexample": f.counterexample,
    }


def envelope(
    n: int,
    command: str,
    elapsed_ms: int,
    method: Optional[str] = None,
    m_value: Optional[int] = None,
    formula_value: Optional[int] = None,
    agrees: Optional[bool] = None,
    witnesses: Optional[Sequence[dict]] = None,
    findings: Optional[Sequence[dict]] = None,
    candidates_examined: Optional[int] = None,
    seed: Optional[int] = None,
) -> dict:
    """The fixed-key report envelope; inapplicable fields stay null."""
    doc = {
        "n": n,
        "command": command,
        "method": method,
        "m_value": m_value,
        "formula_value": formula_value,
        "agrees": agrees,
        "witnesses": list(witnesses) if witnesses is not None else None,
        "findings": list(findings) if findings is not None else None,
        "candidates_examined": candidates_examined,
        "seed": seed,
        "elapsed_ms": elapsed_ms,
    }
    assert tuple(doc) == ENVELOPE_KEYS
    return doc


def search_envelope(report: SearchReport, command: str = "search") -> dict:
    return envelope(
        n=report.n,
        command=command,
        elapsed_ms=int(report.elapsed_s * 1000),
        method=report.pruning.value,
        m_value=report.m_value,
        formula_value=report.formula_value,
        agrees=report.agrees,
        witnesses=[witness_obj(w) for w in report.witnesses],
        candidates_examined=report.candidates_examined,
    )


def render_json(doc: dict) -> str:
    """Canonical JSON text: sorted keys, indent 2, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
