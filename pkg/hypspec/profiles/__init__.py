"""Sampled radial profiles and their netCDF form."""

from .netcdf import make_profile_dataset, read_profile_nc, write_profile_nc

__all__ = [
    "make_profile_dataset",
    "read_profile_nc",
    "write_profile_nc",
]
