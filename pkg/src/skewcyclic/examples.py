"""Bundled worked examples and their replay.

Each fixture holds one or more jobs for :func:`skewcyclic.cli.execute` and
the values expected in the output.  Expected values are stored as text in
the same grammar the parsers accept, so they read like the printed
examples they were transcribed from; ``origin`` says whether a value was
transcribed or computed by an independent brute-force check.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from . import poly as P
from .cli import _context, execute
from .fzlinalg import PolyMatrix, module_equal
from .textio import parse_fz, parse_poly, parse_ring


def load_fixtures() -> list[dict]:
    text = resources.files("skewcyclic").joinpath("data/examples.json").read_text()
    return json.loads(text)


def fixture_ids() -> list[str]:
    return [f["id"] for f in load_fixtures()]


def get_fixture(fid: str) -> dict:
    for f in load_fixtures():
        if f["id"] == fid:
            return f
    raise KeyError(fid)


def _lookup(data, path: str):
    for part in path.split("."):
        data = data[int(part)] if isinstance(data, list) else data[part]
    return data


def _expected(check: dict, job: dict):
    kind, value = check["type"], check["value"]
    if kind in ("int", "bool", "json"):
        return value
    ctx_job = dict(job, sigma=check.get("sigma", job.get("sigma", "x")))
    ctx = _context(ctx_job)
    F = ctx.ring.field
    if kind == "skew":
        return [list(c) for c in parse_poly(value, ctx).coeffs]
    if kind == "skew_set":
        return sorted([list(c) for c in parse_poly(v, ctx).coeffs] for v in value)
    if kind == "ring_set":
        return sorted(list(parse_ring(v, ctx.ring)) for v in value)
    if kind == "xpoly":
        return list(parse_fz(value.replace("x", "z"), F))
    if kind == "module":
        rows = [[parse_fz(e, F) for e in row] for row in value]
        return PolyMatrix(F, rows)
    if kind in ("matrix", "matrix_rows"):
        rows = [[list(parse_fz(e, F)) for e in row] for row in value]
        return sorted(rows) if kind == "matrix_rows" else rows
    raise ValueError(f"unknown expectation type {kind!r}")


def _actual(check: dict, data):
    value = _lookup(data, check["key"])
    kind = check["type"]
    if kind == "skew_set":
        return sorted(v["coeffs"] for v in value if v["coeffs"])
    if kind == "ring_set":
        return sorted(value)
    if kind == "xpoly":
        return list(P.trim(value))
    if kind == "matrix_rows":
        return sorted(value)
    return value


@dataclass
class FixtureOutcome:
    fid: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def summary(self) -> str:
        lines = [f"{'PASS' if self.passed else 'FAIL'} {self.fid}"]
        for label, ok, detail in self.checks:
            lines.append(f"  {'ok  ' if ok else 'FAIL'} {label}" + ("" if ok else f": {detail}"))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "id": self.fid,
            "passed": self.passed,
            "checks": [{"label": l, "passed": ok} for l, ok, _ in self.checks],
        }


def run_fixture(fid: str) -> FixtureOutcome:
    fixture = get_fixture(fid)
    outcome = FixtureOutcome(fid)
    for case in fixture["cases"]:
        job = case["job"]
        data, _ = execute(job)
        for check in case["expect"]:
            label = check.get("label", check["key"])
            want = _expected(check, job)
            got = _actual(check, data)
            if check["type"] == "module":
                got = PolyMatrix(want.field, got, want.ncols)
                ok = module_equal(want, got)
            else:
                ok = want == got
            outcome.checks.append((label, ok, f"expected {want}, got {got}"))
    return outcome
