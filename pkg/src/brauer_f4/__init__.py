"""Brauer algebra of type F4, realized inside the E6 Brauer monoid.

Typical use::

    from brauer_f4 import normalize, multiply, op
    a = normalize("e2 r3 e2")      # delta * e2
    b = multiply(a, normalize("e3"))
"""
from __future__ import annotations

from .action import GenLetter, GenWord, phi, word
from .brauer import (
    BrauerF4,
    CertificationError,
    NormalFormF4,
    basis_nf,
    basis_size,
    brauer,
    generator_nf,
    identity_nf,
    leftmul,
    multiply,
    normalize,
    op,
)
from .enumeration import BACKEND, DeltaCollapse, EnumerationOverflow

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BrauerF4",
    "CertificationError",
    "DeltaCollapse",
    "EnumerationOverflow",
    "GenLetter",
    "GenWord",
    "NormalFormF4",
    "basis_nf",
    "basis_size",
    "brauer",
    "generator_nf",
    "identity_nf",
    "leftmul",
    "multiply",
    "normalize",
    "op",
    "phi",
    "word",
]
