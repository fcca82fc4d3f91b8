"""Zumkeller and half-Zumkeller numbers: classification, partition
witnesses, constructive lifting, and range scanning."""

from .arith import (
    DivisorSet,
    Factorization,
    abundance_class,
    divisors,
    factorize,
    factorize_range,
    is_prime,
    prime_sieve,
    sigma,
)
from .classify import (
    ClassificationRecord,
    classify_number,
    is_half_zumkeller,
    is_practical,
    is_quasi_practical,
    is_zumkeller,
    odd_zumkeller_signature_filter,
    sigma_reachability_check,
)
from .construct import (
    double_to_half,
    factorial_witness,
    lift_coprime_prime_power,
    lift_same_prime,
)
from .errors import CapacityError, DomainError, SigmaRangeError
from .partition import (
    PartitionWitness,
    SearchConfig,
    SignedChain,
    chain_sign_partition,
    find_half_zumkeller_witness,
    find_zumkeller_witness,
    subset_with_sum,
    verify_witness,
)
from .scan import ScanReport, density_report, scan_range, survey_range, verify_conjecture2
from .theory import (
    CounterexampleCandidate,
    DigitBounds,
    digit_conditions_hold,
    digit_decompose,
    multiplyz_equivalence,
    practical_times_prime_power,
    znoth_prefilter,
)

__version__ = "1.0.0"

__all__ = [
    "CapacityError",
    "ClassificationRecord",
    "CounterexampleCandidate",
    "DigitBounds",
    "DivisorSet",
    "DomainError",
    "Factorization",
    "PartitionWitness",
    "ScanReport",
    "SearchConfig",
    "SigmaRangeError",
    "SignedChain",
    "abundance_class",
    "chain_sign_partition",
    "classify_number",
    "density_report",
    "digit_conditions_hold",
    "digit_decompose",
    "divisors",
    "double_to_half",
    "factorial_witness",
    "factorize",
    "factorize_range",
    "find_half_zumkeller_witness",
    "find_zumkeller_witness",
    "is_half_zumkeller",
    "is_practical",
    "is_prime",
    "is_quasi_practical",
    "is_zumkeller",
    "lift_coprime_prime_power",
    "lift_same_prime",
    "multiplyz_equivalence",
    "odd_zumkeller_signature_filter",
    "practical_times_prime_power",
    "prime_sieve",
    "scan_range",
    "sigma",
    "sigma_reachability_check",
    "subset_with_sum",
    "survey_range",
    "verify_conjecture2",
    "verify_witness",
    "znoth_prefilter",
]
