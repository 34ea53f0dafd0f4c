"""Run configuration, canonical serialization and report assembly.

Reports are byte-deterministic: identical RunConfig values produce
identical bytes.  For that reason no wall-clock timing ever enters a
report; timing, when wanted, goes to stderr logging only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    samples: int = 100
    primes: tuple = (5, 7, 11, 13)
    probe_budget: int = 10 ** 6
    long_run: bool = False

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        for q in self.primes:
            if not _is_prime(q):
                raise ValueError(f"{q} is not prime")

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "primes": list(self.primes),
            "probe_budget": self.probe_budget,
            "long_run": self.long_run,
        }


def jsonable(obj):
    """Recursively convert Fractions and tuples for canonical JSON."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def canonical_json(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":"))


@dataclass
class VerificationReport:
    cubic_hash: str
    p: int
    config: RunConfig
    checks: list = field(default_factory=list)

    def add(self, name: str, status: str, details: dict):
        assert status in ("pass", "fail", "inapplicable", "refused")
        self.checks.append({"name": name, "status": status, "details": details})

    @property
    def all_pass(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "schema": "cubicontact/verify-v1",
            "cubic": {"hash": self.cubic_hash, "p": self.p},
            "config": self.config.to_json(),
            "checks": self.checks,
        }

    def render(self, fmt: str = "json") -> str:
        if fmt == "json":
            return canonical_json(self.to_json())
        lines = [
            "# verification report",
            "",
            f"- cubic hash: `{self.cubic_hash}`",
            f"- p: {self.p}",
            f"- config: `{canonical_json(self.config.to_json())}`",
            "",
        ]
        for c in self.checks:
            lines.append(f"## {c['name']}: {c['status'].upper()}")
            lines.append("")
            lines.append("```json")
            lines.append(canonical_json(c["details"]))
            lines.append("```")
            lines.append("")
        return "\n".join(lines)
