"""Verification reports with a stable JSON shape."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verified claim.

    A failing report always carries a witness (the first counterexample
    found, in a claim-specific shape); ``stats`` records what was compared.
    Serializes as ``{claim, pass, witness?, stats}``.
    """

    claim: str
    passed: bool
    witness: dict | None = None
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("failing reports must carry a witness")

    def as_dict(self) -> dict:
        out: dict = {"claim": self.claim, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        out["stats"] = self.stats
        return out
