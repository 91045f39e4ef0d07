"""Run reports: line-oriented ``key: value`` text, or JSON."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass
class Verdict:
    check: str
    holds: bool
    witness: list = field(default_factory=list)
    detail: str = ""


@dataclass
class RunReport:
    command: list
    input_digest: str | None = None
    verdicts: list = field(default_factory=list)
    results: dict = field(default_factory=dict)
    elapsed_s: float | None = None

    def add(self, check, holds, witness=(), detail=""):
        self.verdicts.append(Verdict(check, bool(holds), [str(w) for w in witness], detail))

    def to_text(self, timing: bool = True) -> str:
        lines = [f"command: {' '.join(self.command)}"]
        if self.input_digest:
            lines.append(f"input-sha256: {self.input_digest}")
        for key, value in self.results.items():
            if isinstance(value, (list, tuple)):
                value = " ".join(map(str, value))
            lines.append(f"{key}: {value}")
        for v in self.verdicts:
            line = f"check {v.check}: {'holds' if v.holds else 'violated'}"
            if v.witness:
                line += f" witness {' '.join(v.witness)}"
            if v.detail:
                line += f" ({v.detail})"
            lines.append(line)
        if timing and self.elapsed_s is not None:
            lines.append(f"elapsed-s: {self.elapsed_s:.6f}")
        return "\n".join(lines) + "\n"

    def to_json(self, timing: bool = True) -> str:
        data = asdict(self)
        if not timing:
            data.pop("elapsed_s")
        return json.dumps(data, indent=2, sort_keys=True, default=str) + "\n"
