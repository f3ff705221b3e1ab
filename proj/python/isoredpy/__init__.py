"""Isospectral reduction of matrices with rational-function entries."""

try:
    from ._isored import (
        IsoredError,
        Matrix,
        boundary_force,
        char_function,
        frequency_response,
        gershgorin,
        inverse_spectrum,
        parse_ratfunc,
        path_stiffness,
        pseudoresonance,
        pseudospectrum,
        reduce,
        resolvent_norm,
        sequential_reduce,
        spectral_inverse,
        spectrum,
    )
except ImportError:  # development layout: extension built next to the library
    from _isored import (
        IsoredError,
        Matrix,
        boundary_force,
        char_function,
        frequency_response,
        gershgorin,
        inverse_spectrum,
        parse_ratfunc,
        path_stiffness,
        pseudoresonance,
        pseudospectrum,
        reduce,
        resolvent_norm,
        sequential_reduce,
        spectral_inverse,
        spectrum,
    )

__all__ = [
    "IsoredError",
    "Matrix",
    "boundary_force",
    "char_function",
    "frequency_response",
    "gershgorin",
    "inverse_spectrum",
    "parse_ratfunc",
    "path_stiffness",
    "pseudoresonance",
    "pseudospectrum",
    "reduce",
    "resolvent_norm",
    "sequential_reduce",
    "spectral_inverse",
    "spectrum",
]
