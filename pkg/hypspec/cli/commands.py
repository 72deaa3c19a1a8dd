"""The ``classify`` and ``verify`` commands."""

from __future__ import annotations

from collections.abc import Iterable
from typing import Any

from .config import RunConfig
from .report import CheckRecord, Report
from .suites import SUITE_NAMES, run_suites
from ..core.eigen import Geometry, SpectralParam
from ..core.spectrum import classify_theorem1, classify_theorem2, discrete_ktype_set
from ..utils.io import to_serializable
from ..utils.parallel import process_cells

D_LAMBDA_HEAD = 4


def classify_cell(cell: tuple[int, Any]) -> dict[str, Any]:
    """One row of the discrete-series table."""
    n, lam = cell
    g = Geometry(n)
    s = SpectralParam(g, lam)
    verdict = classify_theorem1(g, s)
    in_range = classify_theorem2(g, s)
    if in_range is not None:
        verdict = in_range
    return to_serializable(
        {
            "n": n,
            "rho": g.rho,
            "lambda": s.lam,
            "offset": s.offset,
            "discrete_parity": verdict.discrete_parity,
            "even_discrete": verdict.even_discrete,
            "odd_discrete": verdict.odd_discrete,
            "even_in_L2": verdict.even_in_L2,
            "odd_in_L2": verdict.odd_in_L2,
            "even_tempered": verdict.even_tempered,
            "odd_tempered": verdict.odd_tempered,
            "d_lambda_head": discrete_ktype_set(s).head(D_LAMBDA_HEAD),
            "multiplicity_full": verdict.multiplicity_full,
            "multiplicity_temp": verdict.multiplicity_temp,
            "theorem2": in_range is not None,
        }
    )


def cmd_classify(config: RunConfig) -> Report:
    """Discrete-series table over the ``(n, λ)`` sweep.

    Cells that raise are reported as failed checks.
    """
    cells = config.cells()
    results, failed = process_cells(cells, classify_cell, max_workers=config.workers)
    report = Report("classify", to_serializable(config.to_dict()))
    report.rows = [row for row in results if row is not None]
    for (n, lam), message in failed:
        report.checks.append(CheckRecord.error("classify", {"n": n, "lambda": lam}, message))
    return report


def cmd_verify(config: RunConfig, suites: Iterable[str] | None = None) -> Report:
    """Run verification suites; all of them when ``suites`` is None."""
    suites = list(SUITE_NAMES) if suites is None else list(suites)
    checks = run_suites(config, suites)
    echo = dict(config.to_dict(), suites=[name for name in SUITE_NAMES if name in suites])
    return Report("verify", to_serializable(echo), checks=checks)
