"""Sampled radial profiles as xarray datasets and netCDF files."""

from __future__ import annotations

import os
from typing import TYPE_CHECKING, Any

import numpy as np
import xarray as xr

from ..core.eigen import Geometry, RadialSolution, SpectralParam, x_of_t
from ..core.spectrum import discrete_ktype_set
from ..utils.constants import DEFAULT_NETCDF_COMPLEVEL, REPORT_SCHEMA_VERSION
from ..utils.decorators import handle_file_errors
from ..utils.errors import DomainError
from ..utils.io import to_serializable
from ..utils.parallel import process_cells

if TYPE_CHECKING:
    from ..cli.config import RunConfig


def _sample_cell(cell: tuple[int, Any], j_max: int, ts: np.ndarray) -> list[dict[str, Any]]:
    n, lam = cell
    g = Geometry(n)
    s = SpectralParam(g, lam)
    if isinstance(s.lam, complex):
        raise DomainError(f"Profiles need a real λ, got {s.lam}")
    d_lambda = discrete_ktype_set(s)
    log_weight = 2 * float(g.rho) * np.log(np.cosh(ts))
    cases = []
    for j in range(j_max + 1):
        solution = RadialSolution(s, j)
        phi = solution.evaluate(ts).astype(float)
        cases.append(
            {
                "n": n,
                "lambda": str(to_serializable(s.lam)),
                "j": j,
                "in_discrete": j in d_lambda,
                "phi": phi,
                "phi_reflected": phi[::-1] if np.allclose(ts, -ts[::-1]) else solution.evaluate(-ts),
                "weight": np.exp(log_weight),
            }
        )
    return cases


def make_profile_dataset(config: RunConfig) -> xr.Dataset:
    """Sample φ_{λ,j}, its reflection and the weight ``cosh^{2ρ} t`` over a sweep.

    Parameters
    ----------
    config : RunConfig
        Provides the ``(n, λ)`` cells, ``j_max``, the t-grid and the workers.

    Returns
    -------
    xr.Dataset
        Variables ``phi``, ``phi_reflected`` and ``weight`` on ``(case, t)``,
        ``in_discrete`` on ``case``; case coordinates ``n``, ``lambda``
        (exact values as "p/q") and ``j``.
    """
    ts = config.t_grid
    results, failed = process_cells(
        config.cells(),
        _sample_cell,
        func_kwargs={"j_max": config.j_max, "ts": ts},
        max_workers=config.workers,
    )
    if failed:
        cell, message = failed[0]
        raise DomainError(f"Sampling failed for (n, λ) = {cell}: {message}")
    cases = [case for cell_cases in results for case in cell_cases]

    def column(name: str, dtype: Any) -> np.ndarray:
        return np.array([case[name] for case in cases], dtype=dtype)

    def block(name: str) -> np.ndarray:
        if not cases:
            return np.empty((0, ts.size))
        return np.stack([case[name] for case in cases])

    return xr.Dataset(
        data_vars={
            "phi": (("case", "t"), block("phi"), {"long_name": "radial eigenfunction phi_(lambda,j)"}),
            "phi_reflected": (("case", "t"), block("phi_reflected"), {"long_name": "phi_(lambda,j)(-t)"}),
            "weight": (("case", "t"), block("weight"), {"long_name": "cosh(t)^(2 rho)"}),
            "in_discrete": ("case", column("in_discrete", np.int8), {"long_name": "j in D_lambda"}),
        },
        coords={
            "t": ("t", ts, {"long_name": "geodesic parameter"}),
            "x": ("t", np.asarray(x_of_t(ts), dtype=float), {"long_name": "(1 + exp(2t))^-1"}),
            "case": ("case", np.arange(len(cases))),
            "n": ("case", column("n", np.int32)),
            "lambda": ("case", column("lambda", str)),
            "j": ("case", column("j", np.int32)),
        },
        attrs={"title": "hypspec radial profiles", "version": REPORT_SCHEMA_VERSION},
    )


def _create_encoding(
    dataset: xr.Dataset,
    compression: str | None = "zlib",
    complevel: int = DEFAULT_NETCDF_COMPLEVEL,
    shuffle: bool = True,
) -> dict:
    """Create encoding dictionary for netCDF output.

    Only compresses numeric variables larger than 1KB.
    """
    if compression is None:
        return {}
    if compression != "zlib":
        raise ValueError(f"Unsupported compression: {compression}. Valid options: ['zlib']")

    encoding = {}
    for var_name in dataset.data_vars:
        var = dataset[var_name]
        if var.dtype.kind in ("f", "i", "u") and var.nbytes > 1024:
            encoding[str(var_name)] = {"zlib": True, "complevel": complevel, "shuffle": shuffle}
    return encoding


@handle_file_errors("profile dataset")
def write_profile_nc(
    dataset: xr.Dataset,
    path: str,
    compression: str | None = "zlib",
    complevel: int = DEFAULT_NETCDF_COMPLEVEL,
) -> str:
    """Write a profile dataset to netCDF with zlib compression.

    Parameters
    ----------
    dataset : xr.Dataset
        Output of :func:`make_profile_dataset`.
    path : str
        Output file path.
    compression : str or None, default 'zlib'
        Pass None to disable compression.
    complevel : int, default 4
        Compression level (0-9).

    Returns
    -------
    str
        The path written.
    """
    output_dir = os.path.dirname(path)
    if output_dir:
        os.makedirs(output_dir, exist_ok=True)
    encoding = _create_encoding(dataset, compression, complevel)
    dataset.to_netcdf(path, mode="w", engine="netcdf4", encoding=encoding)
    return path


@handle_file_errors("profile dataset", mode="read")
def read_profile_nc(path: str) -> xr.Dataset:
    """Load a profile dataset written by :func:`write_profile_nc` into memory."""
    with xr.open_dataset(path, engine="netcdf4") as dataset:
        return dataset.load()
