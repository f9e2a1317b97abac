"""Exact workbench for Lefschetz fibrations ``f_H = tr(H x)`` on adjoint orbits of sl(n)."""

from .fibration import critical_values, hessian_form, hessian_nondegenerate, lefschetz_report, trace_form
from .lie_core import CartanElement, RootSystemA, WeylElement, root_system, weyl_orbit
from .polyalg import Ideal, PolyRing, Polynomial, buchberger

__version__ = "0.1.0"

__all__ = [
    "CartanElement",
    "Ideal",
    "PolyRing",
    "Polynomial",
    "RootSystemA",
    "WeylElement",
    "buchberger",
    "critical_values",
    "hessian_form",
    "hessian_nondegenerate",
    "lefschetz_report",
    "root_system",
    "trace_form",
    "weyl_orbit",
]
