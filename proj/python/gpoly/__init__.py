"""g-polynomials of uniform matroids: exact construction, recurrence checks,
interlacing certificates and asymptotic statistics."""

from ._core import (
    DomainError,
    InvariantViolation,
    SingularCoefficientError,
    check_lemmas,
    conjecture_probe,
    g_poly,
    interlaces,
    is_real_rooted,
    limit_gap,
    liu_wang,
    normality_report,
    r_sequence,
    real_roots,
    recurrence_ids,
    schemes,
    stats,
    verify,
    verify_family,
    via_recurrence,
)

__all__ = [
    "DomainError",
    "InvariantViolation",
    "SingularCoefficientError",
    "check_lemmas",
    "conjecture_probe",
    "g_poly",
    "interlaces",
    "is_real_rooted",
    "limit_gap",
    "liu_wang",
    "normality_report",
    "r_sequence",
    "real_roots",
    "recurrence_ids",
    "schemes",
    "stats",
    "verify",
    "verify_family",
    "via_recurrence",
]
