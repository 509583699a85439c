"""One-shot verification suite producing JSON-lines / CSV reports.

Each claim is checked by a function returning ``None`` on success or a
JSON-serialisable witness on failure.  Enumeration-backed claims run
once per n over the small range; arithmetic claims run once over their
whole range.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .convexity import catalog, classify, enumerate_convex, frame_forcing_violation
from .fibonacci import fib, fib_square_sum, fib_square_sum_identity
from .graph_core import max_k, square_cycle, strip_graph, strip_with_tails
from .treecount import (
    PartitionFailure,
    count_formula,
    count_matrix_tree,
    count_strip,
    decompose,
)

SMALL_MAX = 12
LARGE_MAX = 1000
REPORT_FIELDS = ("claim_id", "n_lo", "n_hi", "status", "witness", "elapsed_ms")


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    n_lo: int
    n_hi: int
    status: str
    witness: Optional[dict]
    elapsed_ms: int

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {f: getattr(self, f) for f in REPORT_FIELDS}

    def to_jsonl(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


def check_cor_4_2(lo: int, hi: int) -> Optional[dict]:
    """Matrix-tree count, closed form and strip-sum chain agree on C_n^2."""
    for n in range(lo, hi + 1):
        mt = count_matrix_tree(square_cycle(n))
        formula = count_formula(n)
        chain = n * sum(count_strip(n - 2 * k) for k in range(max_k(n) + 1))
        if not mt == formula == chain:
            return {"n": n, "matrix_tree": str(mt), "formula": str(formula), "strip_sum": str(chain)}
    return None


def check_fib_recurrence(lo: int, hi: int) -> Optional[dict]:
    for i in range(lo, hi + 1):
        if fib(i + 2) != fib(i + 1) + fib(i):
            return {"i": i, "fib_i": str(fib(i)), "fib_i1": str(fib(i + 1)), "fib_i2": str(fib(i + 2))}
        if i >= 2 and not fib(i + 1) > fib(i):
            return {"i": i, "reason": "not strictly increasing"}
    return None


def check_lem_2_6(lo: int, hi: int) -> Optional[dict]:
    for m in range(lo, hi + 1):
        mt = count_matrix_tree(strip_graph(m))
        if mt != fib(2 * m - 2):
            return {"m": m, "matrix_tree": str(mt), "fib": str(fib(2 * m - 2))}
    return None


def check_lem_2_8(lo: int, hi: int) -> Optional[dict]:
    for n in range(lo, hi + 1):
        if not fib_square_sum_identity(n):
            return {"n": n, "fib_squared": str(fib(n) ** 2), "sum": str(fib_square_sum(n))}
    return None


def check_lem_2_9(n: int) -> Optional[dict]:
    for k in range(max_k(n) + 1):
        expected = count_strip(n - 2 * k)
        for j in range(n):
            mt = count_matrix_tree(strip_with_tails(n, k, j))
            if mt != expected:
                return {"n": n, "k": k, "j": j, "matrix_tree": str(mt), "expected": str(expected)}
    return None


def check_lem_3_1(n: int) -> Optional[dict]:
    for g in enumerate_convex(n):
        bad = frame_forcing_violation(g)
        if bad is not None:
            return {"graph": g.to_json(), "k": bad[0], "p": bad[1]}
    return None


def check_thm_3_4(n: int) -> Optional[dict]:
    found = list(enumerate_convex(n))
    expected = catalog(n)
    expected_sets = {g for _, g in expected}
    if len(expected_sets) != len(expected):
        return {"n": n, "reason": "catalog entries not pairwise distinct"}
    for g in found:
        if classify(g) is None:
            return {"n": n, "reason": "convex subgraph outside catalog", "graph": g.to_json()}
    missing = expected_sets - set(found)
    if missing:
        g = min(missing, key=lambda e: e.bits)
        return {"n": n, "reason": "catalog entry not found by search", "graph": g.to_json()}
    return None


def check_thm_4_1(n: int) -> Optional[dict]:
    try:
        table = decompose(n)
    except PartitionFailure as exc:
        return {"n": n, "reason": str(exc), **exc.witness}
    for (j, k), count in sorted(table.cells.items()):
        if count != count_strip(n - 2 * k):
            return {"n": n, "j": j, "k": k, "count": str(count), "expected": str(count_strip(n - 2 * k))}
    if table.total != count_formula(n):
        return {"n": n, "total": str(table.total), "formula": str(count_formula(n))}
    return None


RANGE_CLAIMS: dict[str, tuple[Callable[[int, int], Optional[dict]], str, int]] = {
    # claim id -> (check, which bound, lower end)
    "cor-4.2": (check_cor_4_2, "large", 5),
    "fib-rec": (check_fib_recurrence, "large", 0),
    "lem-2.6": (check_lem_2_6, "large", 2),
    "lem-2.8": (check_lem_2_8, "large", 2),
}
PER_N_CLAIMS: dict[str, Callable[[int], Optional[dict]]] = {
    "lem-2.9": check_lem_2_9,
    "lem-3.1": check_lem_3_1,
    "thm-3.4": check_thm_3_4,
    "thm-4.1": check_thm_4_1,
}


def plan(n_max_small: int, n_max_large: int) -> list[tuple[str, int, int]]:
    """The ordered list of ``(claim_id, n_lo, n_hi)`` jobs."""
    if not 5 <= n_max_small <= SMALL_MAX:
        raise ValueError(f"--small must lie in [5, {SMALL_MAX}], got {n_max_small}")
    if not 5 <= n_max_large <= LARGE_MAX:
        raise ValueError(f"--large must lie in [5, {LARGE_MAX}], got {n_max_large}")
    jobs = [(cid, lo, n_max_large) for cid, (_, _, lo) in RANGE_CLAIMS.items()]
    jobs += [(cid, n, n) for cid in PER_N_CLAIMS for n in range(5, n_max_small + 1)]
    return sorted(jobs)


def run_job(claim_id: str, n_lo: int, n_hi: int) -> VerificationReport:
    start = time.perf_counter()
    try:
        if claim_id in RANGE_CLAIMS:
            witness = RANGE_CLAIMS[claim_id][0](n_lo, n_hi)
        else:
            witness = PER_N_CLAIMS[claim_id](n_lo)
    except Exception as exc:  # a crash inside a check is a failed claim, not a dead run
        witness = {"error": f"{type(exc).__name__}: {exc}"}
    elapsed = int((time.perf_counter() - start) * 1000)
    status = "pass" if witness is None else "fail"
    return VerificationReport(claim_id, n_lo, n_hi, status, witness, elapsed)


def run_suite(n_max_small: int, n_max_large: int, jobs: int = 1) -> Iterator[VerificationReport]:
    """Yield reports in ``(claim_id, n_lo)`` order whatever the parallelism."""
    todo = plan(n_max_small, n_max_large)
    if jobs <= 1:
        for job in todo:
            yield run_job(*job)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order
        yield from pool.map(run_job, *zip(*todo))


def format_csv_row(report: VerificationReport, header: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(REPORT_FIELDS)
    row = report.to_json()
    row["witness"] = "" if report.witness is None else json.dumps(report.witness)
    writer.writerow([row[f] for f in REPORT_FIELDS])
    return buf.getvalue().rstrip("\n")
