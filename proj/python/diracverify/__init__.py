"""Exact and numeric audits of Dirac matrix sets."""

from ._core import (
    CanonicalizationError,
    MatrixSet,
    ParseError,
    SpinorError,
    catalog,
    catalog_names,
    char_poly,
    check_anticommutation,
    check_dispersion,
    check_trace_det,
    derive_report,
    eigenvalues,
    positive_energy_spinors,
    run_cli,
    solve,
    spectrum_csv,
    verify_report,
)

__all__ = [
    "CanonicalizationError",
    "MatrixSet",
    "ParseError",
    "SpinorError",
    "catalog",
    "catalog_names",
    "char_poly",
    "check_anticommutation",
    "check_dispersion",
    "check_trace_det",
    "derive_report",
    "eigenvalues",
    "positive_energy_spinors",
    "run_cli",
    "solve",
    "spectrum_csv",
    "verify_report",
]
