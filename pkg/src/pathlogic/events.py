"""Event reports: the step-by-step trace a controller produces for one input.

Steps are plain dicts (JSON-ready) with a ``kind`` discriminator:

    entered          {index, formula, from, category}
    duplicate        {existing, formula}          rejected pre-invocation, no step
    step-consumed    {index, reason, formula, existing?}   a burned path step
    link             {op, link, source, target}
    node             {op, node, name}
    revision         {contradiction, culprits, chosen, retracted}
    removed          {indexes}                    statuses flipped outside DBR

The session driver appends choice-required/choice steps around suspensions.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class EventReport:
    steps: list[dict] = field(default_factory=list)

    def add(self, kind: str, **fields) -> dict:
        step = {"kind": kind, **fields}
        self.steps.append(step)
        return step

    def indexes_entered(self) -> list[int]:
        return [s["index"] for s in self.steps if s["kind"] == "entered"]
