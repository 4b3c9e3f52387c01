"""Exact moment and cumulant transforms, lattice-path sums and Hankel minors.

All numbers and polynomials are passed as canonical strings so nothing is
rounded on the way in or out.
"""

from ._momentlab import (
    MathError,
    catalog,
    count_paths,
    cumulants_from_moments,
    enumerate_paths,
    factorize,
    free_cumulant_motzkin,
    hankel_minor,
    identity_names,
    jacobi_from_moments,
    moments_from_cumulants,
    moments_from_jacobi,
    normalize,
    orthopolys,
    run_cli,
    symbolic_moments,
    valuate,
    verify,
)

# args are (kind, index, message)
MathError.kind = property(lambda self: self.args[0])
MathError.index = property(lambda self: self.args[1])

__all__ = [
    "MathError",
    "catalog",
    "count_paths",
    "cumulants_from_moments",
    "enumerate_paths",
    "factorize",
    "free_cumulant_motzkin",
    "hankel_minor",
    "identity_names",
    "jacobi_from_moments",
    "moments_from_cumulants",
    "moments_from_jacobi",
    "normalize",
    "orthopolys",
    "run_cli",
    "symbolic_moments",
    "valuate",
    "verify",
]
