"""Macaulay growth bounds, Gorenstein h-vectors and graded Betti numbers in exact arithmetic."""

from .binomial_core import binom, grouped_rep, is_o_sequence, macaulay_bound, macaulay_rep
from .hvector import (
    HVector,
    certificate,
    enumerate_symmetric_osequences,
    extremal_hvector,
    extremal_multiplicity,
    forbidden_nu,
    growth_monotonic_scan,
    nu0,
    profile,
    pure_resolution_betti,
)

__version__ = "0.1.0"
