"""Numerical tolerances and resource budgets.

All tolerances are overridable either by mutating :data:`TOL` (module-wide)
or by passing an explicit ``tol`` argument to the functions that accept one.
The defaults reflect double-precision spectral error scales.
"""

import os
from dataclasses import dataclass


@dataclass
class Tolerances:
    """Collection of absolute/relative tolerances used by validators.

    Attributes
    ----------
    herm : float
        Max allowed entrywise deviation from Hermiticity.
    psd : float
        Most negative eigenvalue tolerated in a PSD check.
    orth : float
        Max deviation from orthonormality / idempotency.
    trace : float
        Slack on trace normalisation checks.
    mass : float
        Slack on probability-mass sums (log-domain aggregates).
    zero_rel : float
        Relative cutoff for treating an eigenvalue as zero; scaled by
        the largest magnitude entry/eigenvalue of the operator at hand.
    """

    herm: float = 1e-9
    psd: float = 1e-9
    orth: float = 1e-9
    trace: float = 1e-8
    mass: float = 1e-8
    zero_rel: float = 1e-9


TOL = Tolerances()

# Dense Kronecker products are refused beyond this dimension.
MAX_KRON_DIM = 4096

# Default class-count budget for the i.i.d. type-class engine.
DEFAULT_MAX_CLASSES = 30_000_000

# Default seed for every randomised experiment (documented constant).
DEFAULT_SEED = 0x5CE0


def max_type_classes():
    """Type-class budget; the SCX_MAX_CLASSES env var overrides the default."""
    raw = os.environ.get("SCX_MAX_CLASSES")
    if raw is None:
        return DEFAULT_MAX_CLASSES
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"SCX_MAX_CLASSES must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError("SCX_MAX_CLASSES must be positive")
    return value
