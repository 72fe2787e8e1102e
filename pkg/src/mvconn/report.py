"""Verification reports: per-law verdicts with first counterexamples."""
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class Check:
    name: str
    anchor: str
    verdict: str
    witness: Optional[tuple] = None
    detail: str = ""

    @property
    def failed(self):
        return self.verdict == FAIL


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    def add(self, name, anchor, witness=None, detail="", verdict=None):
        """Append a check; the verdict defaults to fail iff a witness is given."""
        if verdict is None:
            verdict = FAIL if witness is not None else PASS
        check = Check(name, anchor, verdict, witness, detail)
        self.checks.append(check)
        return check

    def skip(self, name, anchor, reason):
        return self.add(name, anchor, detail=reason, verdict=SKIP)

    def extend(self, other, prefix=None):
        for c in other.checks:
            name = f"{prefix}.{c.name}" if prefix else c.name
            self.checks.append(Check(name, c.anchor, c.verdict, c.witness, c.detail))
        for k, v in other.params.items():
            self.params.setdefault(k, v)

    @property
    def passed(self):
        return not any(c.failed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self):
        return [c.name for c in self.checks]

    def failures(self):
        return [c for c in self.checks if c.failed]

    def to_dict(self, render: Callable[[Any], str] = str):
        return {
            "suite": self.suite,
            "checks": [
                {
                    "name": c.name,
                    "anchor": c.anchor,
                    "verdict": c.verdict,
                    "witness": None if c.witness is None else [render(w) for w in c.witness],
                    "detail": c.detail,
                }
                for c in self.checks
            ],
            "params": {k: _jsonable(v) for k, v in self.params.items()},
        }

    def to_json(self, render=str, indent=2):
        return json.dumps(self.to_dict(render), indent=indent)

    @classmethod
    def from_dict(cls, doc):
        report = cls(doc["suite"], params=dict(doc.get("params", {})))
        for c in doc["checks"]:
            witness = c.get("witness")
            report.checks.append(
                Check(c["name"], c["anchor"], c["verdict"],
                      None if witness is None else tuple(witness), c.get("detail", ""))
            )
        return report

    def to_text(self, render=str):
        lines = [f"suite: {self.suite}"]
        if self.params:
            lines.append("params: " + ", ".join(f"{k}={_jsonable(v)}" for k, v in self.params.items()))
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            line = f"  [{c.verdict.upper():4}] {c.name:<{width}}  {c.anchor}"
            if c.witness is not None:
                line += "  witness=(" + ", ".join(render(w) for w in c.witness) + ")"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        n_fail = len(self.failures())
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'} "
                     f"({len(self.checks)} checks, {n_fail} failed)")
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)


def first_failure(domain: Iterable, predicate: Callable[..., bool]):
    """Return the first tuple in ``domain`` where ``predicate`` is false, else None."""
    for args in domain:
        if not predicate(*args):
            return tuple(args)
    return None
