"""Symmetric sequence-space norms, duality, K-functionals and s-number checks."""

try:
    from ._seqnorm import (  # noqa: F401
        DimensionMismatchError,
        InvalidDescriptorError,
        MissingAttestationError,
        approx_bounds,
        concavity_estimate,
        dual_norm,
        fundamental,
        identity_norm,
        k_functional,
        multiplier_norm,
        norm,
        report_all,
        simplify,
        weyl_check,
    )
except ImportError:  # extension built in-tree, next to the package on the path
    from _seqnorm import (  # noqa: F401
        DimensionMismatchError,
        InvalidDescriptorError,
        MissingAttestationError,
        approx_bounds,
        concavity_estimate,
        dual_norm,
        fundamental,
        identity_norm,
        k_functional,
        multiplier_norm,
        norm,
        report_all,
        simplify,
        weyl_check,
    )

__all__ = [
    "DimensionMismatchError",
    "InvalidDescriptorError",
    "MissingAttestationError",
    "approx_bounds",
    "concavity_estimate",
    "dual_norm",
    "fundamental",
    "identity_norm",
    "k_functional",
    "multiplier_norm",
    "norm",
    "report_all",
    "simplify",
    "weyl_check",
]
