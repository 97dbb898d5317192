"""Python access to the CGL entropy-stable solver."""

from ._cgl import (
    CglError,
    case_ids,
    cons_to_prim,
    ec_flux,
    entropy_vars,
    log_mean,
    physical_flux,
    prim_to_cons,
    run,
    scheme_names,
    verify,
)

PRIMITIVE_NAMES = ("rho", "ux", "uy", "uz", "p_par", "p_perp", "Bx", "By", "Bz")

__all__ = [
    "CglError",
    "PRIMITIVE_NAMES",
    "case_ids",
    "cons_to_prim",
    "ec_flux",
    "entropy_vars",
    "log_mean",
    "physical_flux",
    "prim_to_cons",
    "run",
    "scheme_names",
    "verify",
]
