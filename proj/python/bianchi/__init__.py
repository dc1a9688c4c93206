"""Lefschetz numbers, Eisenstein traces and cuspidal lower bounds for Bianchi groups."""

from ._core import (
    ConformanceError,
    PreconditionError,
    QuadField,
    cusp_count,
    cusp_lower_bound,
    euler_phi,
    factorize,
    gl2_trace_sigma1,
    hilbert2,
    kronecker,
    lefschetz_level_one,
    lefschetz_sigma_prime_power,
    lefschetz_sigma_principal,
    legendre,
    make_field,
    run_cli,
    sczech_trace,
    sym_power_trace,
    trace_sigma_h1_eis,
    trace_sigma_h2_eis,
    trace_tau_h2_eis,
    two_torsion_count,
    verify,
)

__all__ = [
    "ConformanceError",
    "PreconditionError",
    "QuadField",
    "cusp_count",
    "cusp_lower_bound",
    "euler_phi",
    "factorize",
    "gl2_trace_sigma1",
    "hilbert2",
    "kronecker",
    "lefschetz_level_one",
    "lefschetz_sigma_prime_power",
    "lefschetz_sigma_principal",
    "legendre",
    "make_field",
    "run_cli",
    "sczech_trace",
    "sym_power_trace",
    "trace_sigma_h1_eis",
    "trace_sigma_h2_eis",
    "trace_tau_h2_eis",
    "two_torsion_count",
    "verify",
]
