"""Deterministic, machine-readable verdicts for structure checks.

Every checker in this package returns a :class:`CheckReport`: a list of
per-axiom results with counterexample tuples, assembled in a fixed order so
that identical inputs produce byte-identical canonical JSON.  Timing lives in
an optional side channel and is excluded from the canonical form.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

# The documented axiom catalogue.  Reports may only use these identifiers.
AXIOM_CATALOGUE = (
    "cat",
    "mon-⋆",        # strict monoidal laws for the first tensor
    "mon-⋄",        # strict monoidal laws for the second tensor
    "sym",
    "lindist-nat",
    "coh-subset",
    "tri-1", "tri-2", "tri-3", "tri-4",
    "comonad",
    "moncom-⋆",
    "moncom-⋄",
    "L1", "L2",
    "nu-1", "nu-2",
    "Le", "Ln", "Le′", "Ln′",
    "star-iso",
    "SC-1", "SC-2", "SC-3", "SC-4",
    "BV-20", "BV-21", "BV-22", "BV-23",
)


@dataclass
class AxiomResult:
    """Outcome of one axiom check over a scope."""

    axiom: str
    passed: bool = True
    checked: int = 0
    counterexamples: list = field(default_factory=list)
    vacuous: bool = False
    detail: dict = field(default_factory=dict)
    elapsed: float | None = None

    def to_dict(self, canonical: bool = True) -> dict:
        d = {
            "axiom": self.axiom,
            "passed": self.passed,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "vacuous": self.vacuous,
        }
        if self.detail:
            d["detail"] = self.detail
        if not canonical and self.elapsed is not None:
            d["elapsed"] = self.elapsed
        return d


@dataclass
class CheckReport:
    """Aggregated verdict: one entry per axiom, deterministic order."""

    scope: dict = field(default_factory=dict)
    instance_digest: str = ""
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(r.passed for r in self.results)

    def add(self, result: AxiomResult) -> AxiomResult:
        self.results.append(result)
        return result

    def extend(self, other: "CheckReport") -> "CheckReport":
        self.results.extend(other.results)
        return self

    def result(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def failing(self) -> list[str]:
        return [r.axiom for r in self.results if not r.passed]

    def to_dict(self, canonical: bool = True) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "instance_digest": self.instance_digest,
            "scope": self.scope,
            "overall": self.overall,
            "results": [r.to_dict(canonical) for r in self.results],
        }

    def to_json(self, canonical: bool = True) -> str:
        return canonical_json(self.to_dict(canonical))

    def summary(self) -> str:
        """Human-readable table, one line per axiom."""
        lines = []
        width = max((len(r.axiom) for r in self.results), default=4)
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            if r.vacuous:
                status += " (vacuous)"
            extra = ""
            if r.counterexamples:
                extra = f"  first: {r.counterexamples[0]}"
            lines.append(f"{r.axiom:<{width}}  {status:<14} checked={r.checked}{extra}")
        lines.append(f"overall: {'pass' if self.overall else 'FAIL'}")
        return "\n".join(lines)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def digest(obj) -> str:
    """Stable content hash of a JSON-serializable object."""
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()
