"""Acceptance criteria on the default verification grid.

Run with pytest (a summary line per criterion is printed at the end) or
directly: ``python3 tests/test_acceptance.py``.
"""
import time

import pytest

from hermilat.suite import CHECKS, SuiteContext, default_grid, run_check

SEED = 0
# wall-clock ceilings in seconds for the criteria that state one
TIME_LIMITS = {"AC01": 10, "AC02": 30, "AC07": 20}
TOTAL_LIMIT = 300

RESULTS = {}


@pytest.fixture(scope="module")
def ctx():
    return SuiteContext(default_grid(SEED), seed=SEED)


def _line(rec):
    return f"{rec.id} {rec.anchor}: {'PASS' if rec.status == 'pass' else 'FAIL'} ({rec.seconds:.2f}s)"


@pytest.mark.parametrize("check_id", [c[0] for c in CHECKS])
def test_criterion(check_id, ctx):
    rec = run_check(check_id, ctx)
    RESULTS[check_id] = rec
    print(_line(rec))
    assert rec.status == "pass", rec.witness
    if check_id in TIME_LIMITS:
        assert rec.seconds < TIME_LIMITS[check_id]


def test_grid_covers_required_universe(ctx):
    names = [e.name for e in ctx.grid]
    assert any(n.startswith("GF(2)^3") for n in names)
    assert any(n.startswith("GF(3)^2") for n in names)
    assert any(n.startswith("GF(4)^2") for n in names) and any(n.startswith("GF(4)*^2") for n in names)
    sampled = [e for e in ctx.grid if e.mode == "sampled"]
    assert {(e.space.field.q, e.space.n) for e in sampled} == {(2, 4), (3, 3)}


def test_arguesian_modes_match_sizes(ctx):
    for e in ctx.grid:
        L = ctx.lattice(e)
        r = ctx.arguesian(L)
        if L.size <= 16:
            assert r.mode == "exhaustive"
        else:
            assert r.mode == "sampled" and r.checked == 10**6 and r.seed == SEED


def test_total_runtime():
    assert len(RESULTS) == len(CHECKS)
    assert sum(r.seconds for r in RESULTS.values()) < TOTAL_LIMIT


def main():
    context = SuiteContext(default_grid(SEED), seed=SEED)
    t = time.perf_counter()
    failed = 0
    for cid, *_ in CHECKS:
        rec = run_check(cid, context)
        failed += rec.status != "pass"
        print(_line(rec))
    print(f"{len(CHECKS) - failed}/{len(CHECKS)} criteria passed in {time.perf_counter() - t:.1f}s (seed {SEED})")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
