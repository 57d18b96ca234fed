"""Frobenius numbers, genus and Apéry sets of numerical semigroups and their quotients."""

from .core import (
    AperyTable,
    GeneratorList,
    InvariantPair,
    apery_set,
    frobenius_from_apery,
    genus_from_apery,
    invariants,
    is_member,
    sylvester_two,
    validate_generators,
)
from .errors import (
    ConstraintViolation,
    DivisorMismatch,
    GcdNotOne,
    InternalBoundError,
    MismatchFound,
    NonIntegerResult,
    SemiqError,
    TPrimeOdd,
)
from .families import (
    AAP,
    FamilySpec,
    GapAAP,
    OddAAP,
    PlusMinus,
    Scaled,
    aap_quotient,
    gap_aap_quotient,
    odd_aap_quotient_frobenius,
    plus_minus_quotient,
    scaled_quotient,
)
from .oracle import brute_invariants, brute_ob, brute_quotient_invariants, build_sieve
from .quotient import (
    OBTable,
    QuotientSpec,
    StructuredFamily,
    n_drp,
    n_drp_table,
    ob_solve,
    ob_witness,
    quotient_apery,
    quotient_invariants,
    quotient_member,
    structured_form,
    two_gen_quotient,
)

__version__ = "0.1.0"
