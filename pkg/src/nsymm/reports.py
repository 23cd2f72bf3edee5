"""Verification report containers shared by the check suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


def poly_witness(defect) -> dict:
    """First nonzero term of a nonzero polynomial defect, as a record."""
    word, coefficient = defect.items()[0]
    return {
        "word": list(word),
        "coeff": {"num": str(coefficient.numerator), "den": str(coefficient.denominator)},
    }


def tensor_witness(defect) -> dict:
    """First nonzero term of a nonzero tensor defect, as a record."""
    (left, right), coefficient = defect.items()[0]
    return {
        "left_word": list(left),
        "right_word": list(right),
        "coeff": {"num": str(coefficient.numerator), "den": str(coefficient.denominator)},
    }


@dataclass(frozen=True)
class Check:
    """One verified law: what was checked, at which degree, and the outcome."""

    law: str
    degree: int
    passed: bool
    witness: dict | None = None
    elapsed_us: int = 0

    def to_record(self) -> dict:
        record = {
            "degree": self.degree,
            "law": self.law,
            "pass": self.passed,
            "elapsed_us": self.elapsed_us,
        }
        if self.witness is not None:
            record["witness"] = self.witness
        return record


@dataclass
class Report:
    suite: str
    max_degree: int
    checks: list[Check] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, check: Check):
        self.checks.append(check)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [check for check in self.checks if not check.passed]

    def to_data(self) -> dict:
        data = {
            "suite": self.suite,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "checks": [check.to_record() for check in self.checks],
        }
        if self.meta:
            data["meta"] = dict(self.meta)
        return data

    def render(self) -> str:
        lines = []
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"[{status}] degree={check.degree} {check.law} ({check.elapsed_us} us)"
            if check.witness is not None:
                line += f" witness={check.witness}"
            lines.append(line)
        for key, value in self.meta.items():
            lines.append(f"# {key}: {value}")
        verdict = "all passed" if self.passed else f"{len(self.failures)} FAILED"
        lines.append(
            f"suite {self.suite}: {len(self.checks)} checks up to degree {self.max_degree}: {verdict}"
        )
        return "\n".join(lines)
