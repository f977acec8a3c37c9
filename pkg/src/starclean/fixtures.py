"""Named fixtures bundling a recipe with its expected verdicts.

Each fixture reproduces one of the worked examples end to end and reports a
checklist that can be rerun from the command line in one shot.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .elements import spsr_conditions, strongly_star_regular_witness
from .matrixops import DenseMatrix, is_spsr_matrix
from .properties import check_stable_range_pair, ring_property, stable_range_checks
from .specparse import build_star_ring


@dataclass(frozen=True)
class FixtureCheck:
    name: str
    ok: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "ok": bool(self.ok), "detail": self.detail}


def _fixture_boolean_swap() -> list[FixtureCheck]:
    S = build_star_ring("Z2xZ2", "swap")
    clean = ring_property(S, "clean").value
    star_clean = ring_property(S, "star-clean").value
    return [
        FixtureCheck("clean", clean is True),
        FixtureCheck("not star-clean", star_clean is False),
    ]


def _fixture_z4_identity() -> list[FixtureCheck]:
    S = build_star_ring("Z4", "id")
    spsr_ring = ring_property(S, "strongly-pi-star-regular").value
    two_ssr = strongly_star_regular_witness(S, 2)
    two_flags = spsr_conditions(S, 2).flags
    return [
        FixtureCheck("ring strongly pi-star-regular", spsr_ring is True),
        FixtureCheck("element 2 not strongly star-regular", two_ssr is None),
        FixtureCheck("element 2 meets all four conditions", all(two_flags)),
    ]


def _fixture_m2_z2() -> list[FixtureCheck]:
    S = build_star_ring("M2(Z2)", "tr(id)")
    R = S.ring
    expected_projections = {
        R.from_value([[0, 0], [0, 0]]),
        R.from_value([[1, 0], [0, 1]]),
        R.from_value([[1, 0], [0, 0]]),
        R.from_value([[0, 0], [0, 1]]),
    }
    sr = stable_range_checks(S)
    e11 = R.from_value([[1, 0], [0, 0]])
    e21 = R.from_value([[0, 0], [1, 0]])
    return [
        FixtureCheck("projections are the four diagonal ones",
                     set(S.projections()) == expected_projections),
        FixtureCheck("unit-regular", ring_property(S, "unit-regular").value is True),
        FixtureCheck("isr1", sr["isr1"].value is True),
        FixtureCheck("psr1 fails", sr["psr1"].value is False),
        FixtureCheck("canonical counterexample pair accepted",
                     check_stable_range_pair(S, "psr1", e11, e21)),
        FixtureCheck("star-clean", ring_property(S, "star-clean").value is True),
    ]


def _fixture_m2_z3() -> list[FixtureCheck]:
    S = build_star_ring("M2(Z3)", "tr(id)")
    R = S.ring
    expected_projections = {
        R.from_value([[0, 0], [0, 0]]),
        R.from_value([[1, 0], [0, 1]]),
        R.from_value([[1, 0], [0, 0]]),
        R.from_value([[0, 0], [0, 1]]),
        R.from_value([[2, 1], [1, 2]]),
        R.from_value([[2, 2], [2, 2]]),
    }
    return [
        FixtureCheck("projections are the six listed matrices",
                     set(S.projections()) == expected_projections),
        FixtureCheck("not strongly star-clean",
                     ring_property(S, "strongly-star-clean").value is False),
        FixtureCheck("psr1", stable_range_checks(S)["psr1"].value is True),
        FixtureCheck("idempotent count is 14", len(R.idempotents()) == 14),
    ]


def _fixture_symmetric_matrix() -> list[FixtureCheck]:
    cases = [
        ([[2, 1], [1, 2]], True),
        ([[1, 1], [0, 0]], False),
        ([[0, 1], [0, 0]], True),
    ]
    checks = []
    for rows, expected in cases:
        verdict, _ = is_spsr_matrix(DenseMatrix(np.array(rows, dtype=complex)))
        checks.append(FixtureCheck(f"matrix {rows} -> {expected}", verdict is expected))
    return checks


FIXTURES = {
    "boolean-swap": _fixture_boolean_swap,
    "z4-identity": _fixture_z4_identity,
    "m2-z2-transpose": _fixture_m2_z2,
    "m2-z3-transpose": _fixture_m2_z3,
    "symmetric-matrix": _fixture_symmetric_matrix,
}


def run_fixture(name: str) -> tuple[bool, list[FixtureCheck]]:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
    checks = FIXTURES[name]()
    return all(c.ok for c in checks), checks
