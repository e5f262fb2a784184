"""Hyperanalytic signals of complex-valued data: orthogonal signal, quaternion
Fourier transform, complex envelope and phase, properness."""

from ._core import (
    DegeneratePolarForm,
    ParseError,
    cdpolar,
    cdpolar_inverse,
    demodulate,
    generate,
    hilbert,
    hyperanalytic,
    hyperhilbert,
    orthogonal,
    properness,
    qft,
    selftest,
)

__all__ = [
    "DegeneratePolarForm",
    "ParseError",
    "cdpolar",
    "cdpolar_inverse",
    "demodulate",
    "generate",
    "hilbert",
    "hyperanalytic",
    "hyperhilbert",
    "orthogonal",
    "properness",
    "qft",
    "selftest",
]
