"""Hand-worked reference computations at n = 3.

Each entry is an equality ``A1 o A2 o ... = B1 o B2 o ...`` of composites of
generator automorphisms, together with the trajectory of K1, K2, K3 as the
factors are applied right to left (x, y, z stand for x1, x2, x3 and K, L, M
for K1, K2, K3 in the usual notation; here everything is written with
indices).  Checking a trajectory compares every intermediate value exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .aggmorph import apply_f2, equal
from .liftedartin import generator
from .modring import ModuleElt, parse_module_elt

N = 3

# factor names: S1, S2, R1, R2, T1, T2, T3, and S1' for the inverse of S1
GOLDEN = [
    {
        "name": "S1 S2 S1 = S2 S1 S2",
        "lhs": ["S1", "S2", "S1"],
        "rhs": ["S2", "S1", "S2"],
        "lhs_steps": {
            "K1": [
                "K1 + K2 - (x2^-1 > K1)",
                "K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)",
                "K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)",
            ],
            "K2": [
                "(x2^-1 > K1)",
                "(x3^-1 > K1)",
                "(x3^-1 > K1) + (x3^-1 > K2) - (x3^-1 x2^-1 > K1)",
            ],
            "K3": [
                "K3",
                "(x3^-1 > K2)",
                "(x3^-1 x2^-1 > K1)",
            ],
        },
        "rhs_steps": {
            "K1": [
                "K1",
                "K1 + K2 - (x2^-1 > K1)",
                "K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)",
            ],
            "K2": [
                "K2 + K3 - (x3^-1 > K2)",
                "(x2^-1 > K1) + K3 - (x3^-1 x2^-1 > K1)",
                "(x3^-1 > K1) + (x3^-1 > K2) - (x3^-1 x2^-1 > K1)",
            ],
            "K3": [
                "(x3^-1 > K2)",
                "(x3^-1 x2^-1 > K1)",
                "(x3^-1 x2^-1 > K1)",
            ],
        },
    },
    {
        "name": "R2 R1 S2 = S1 R2 R1",
        "lhs": ["R2", "R1", "S2"],
        "rhs": ["S1", "R2", "R1"],
        "lhs_steps": {
            "K1": ["K1", "K2", "K3"],
            "K2": ["K2 + K3 - (x3^-1 > K2)", "K1 + K3 - (x3^-1 > K1)", "K1 + K2 - (x2^-1 > K1)"],
            "K3": ["(x3^-1 > K2)", "(x3^-1 > K1)", "(x2^-1 > K1)"],
        },
        "rhs_steps": {
            "K1": ["K2", "K3", "K3"],
            "K2": ["K1", "K1", "K1 + K2 - (x2^-1 > K1)"],
            "K3": ["K3", "K2", "(x2^-1 > K1)"],
        },
    },
    {
        "name": "S2 S1 R2 = R1 S2 S1",
        "lhs": ["S2", "S1", "R2"],
        "rhs": ["R1", "S2", "S1"],
        "lhs_steps": {
            "K1": ["K1", "K1 + K2 - (x2^-1 > K1)", "K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)"],
            "K2": ["K3", "K3", "(x3^-1 > K2)"],
            "K3": ["K2", "(x2^-1 > K1)", "(x3^-1 > K1)"],
        },
        "rhs_steps": {
            "K1": [
                "K1 + K2 - (x2^-1 > K1)",
                "K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)",
                "K1 + K2 + K3 - (x3^-1 > K1) - (x3^-1 > K2)",
            ],
            "K2": ["(x2^-1 > K1)", "(x3^-1 > K1)", "(x3^-1 > K2)"],
            "K3": ["K3", "(x3^-1 > K2)", "(x3^-1 > K1)"],
        },
    },
    {
        "name": "T1 R1 = R1 T2",
        "lhs": ["T1", "R1"],
        "rhs": ["R1", "T2"],
        "lhs_steps": {"K1": ["K2", "K2"], "K2": ["K1", "K1"], "K3": ["K3", "K3"]},
        "rhs_steps": {"K1": ["K1", "K2"], "K2": ["K2", "K1"], "K3": ["K3", "K3"]},
    },
    {
        "name": "T1 S1 = S1 T2",
        "lhs": ["T1", "S1"],
        "rhs": ["S1", "T2"],
        "lhs_steps": {
            "K1": ["K1 + K2 - (x2^-1 > K1)", "K1 + K2 - (x2^-1 > K1)"],
            "K2": ["(x2^-1 > K1)", "(x2^-1 > K1)"],
            "K3": ["K3", "K3"],
        },
        "rhs_steps": {
            "K1": ["K1", "K1 + K2 - (x2^-1 > K1)"],
            "K2": ["K2", "(x2^-1 > K1)"],
            "K3": ["K3", "K3"],
        },
    },
    {
        "name": "T2 S1 = R1 S1^-1 R1 T1",
        "lhs": ["T2", "S1"],
        "rhs": ["R1", "S1'", "R1", "T1"],
        "lhs_steps": {
            "K1": ["K1 + K2 - (x2^-1 > K1)", "K1 + K2 - (x2 > K1)"],
            "K2": ["(x2^-1 > K1)", "(x2 > K1)"],
            "K3": ["K3", "K3"],
        },
        "rhs_steps": {
            "K1": ["K1", "K2", "K1 + K2 - (x1 > K2)", "K1 + K2 - (x2 > K1)"],
            "K2": ["K2", "K1", "(x1 > K2)", "(x2 > K1)"],
            "K3": ["K3", "K3", "K3", "K3"],
        },
    },
]

_KINDS = {"S": "sigma", "R": "rho", "T": "tau"}


def factor(name: str):
    inverse = name.endswith("'")
    name = name.rstrip("'")
    return generator(_KINDS[name[0]], int(name[1:]), N, inverse=inverse)


@dataclass
class GoldenResult:
    name: str
    passed: bool
    failures: list

    def line(self) -> str:
        if self.passed:
            return f"{self.name}: pass"
        return f"{self.name}: FAIL ({'; '.join(self.failures)})"


def _trajectory(factors: list[str], start: ModuleElt) -> list[ModuleElt]:
    steps = []
    m = start
    for name in reversed(factors):
        m = apply_f2(factor(name).forward, m)
        steps.append(m)
    return steps


def _composite(factors):
    from .aggmorph import compose_auto, identity

    acc = identity(N)
    for name in factors:
        acc = compose_auto(acc, factor(name))
    return acc


def check_entry(entry: dict) -> GoldenResult:
    failures = []
    for side in ("lhs", "rhs"):
        for label, expected in entry[f"{side}_steps"].items():
            start = parse_module_elt(label, N)
            got = _trajectory(entry[side], start)
            for k, (g, e) in enumerate(zip(got, expected), 1):
                if g != parse_module_elt(e, N):
                    failures.append(f"{side} {label} step {k}: got {g}, expected {e}")
            if len(got) != len(expected):
                failures.append(f"{side} {label}: {len(got)} steps, expected {len(expected)}")
    if not equal(_composite(entry["lhs"]).forward, _composite(entry["rhs"]).forward):
        failures.append("composites differ")
    return GoldenResult(entry["name"], not failures, failures)


def run_golden() -> list[GoldenResult]:
    return [check_entry(e) for e in GOLDEN]
