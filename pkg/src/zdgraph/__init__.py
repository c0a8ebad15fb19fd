"""Zero-divisor graphs of Z_p[x]/<x^4>: construction, spectra, energy,
degree-based indices and checks of published formulas."""

from .errors import (
    DomainError,
    NumericError,
    ParameterError,
    SizeError,
    TheoremViolation,
    ZdgError,
)
from .graph import ZeroDivisorGraph, build, degrees, edge_partition, export, summary
from .indices import hansen_vukicevic_check, named_indices, vdb_bruteforce, vdb_closed_form, zagreb
from .refute import prior_charpoly, prior_energy, prior_m2, refutation_report, sanity_facts
from .ring import RingElement, classify, enumerate_zero_divisors, is_zero_divisor, mul
from .spectra import (
    Spectrum,
    classify_energy,
    closed_form_spectrum,
    dense_spectrum,
    eigenvector_certificates,
    energy,
    energy_bounds,
    exact_charpoly,
    quotient_eigenvalues,
    same_multiset,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError", "NumericError", "ParameterError", "SizeError", "TheoremViolation", "ZdgError",
    "ZeroDivisorGraph", "build", "degrees", "edge_partition", "export", "summary",
    "hansen_vukicevic_check", "named_indices", "vdb_bruteforce", "vdb_closed_form", "zagreb",
    "prior_charpoly", "prior_energy", "prior_m2", "refutation_report", "sanity_facts",
    "RingElement", "classify", "enumerate_zero_divisors", "is_zero_divisor", "mul",
    "Spectrum", "classify_energy", "closed_form_spectrum", "dense_spectrum",
    "eigenvector_certificates", "energy", "energy_bounds", "exact_charpoly", "quotient_eigenvalues",
    "same_multiset",
]
