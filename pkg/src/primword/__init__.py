"""Primitive words p, q with |p| = 2|q| and pq non-primitive: classification,
constructive enumeration and exact counts."""

from .counting import (
    CountReport,
    NotEvaluableError,
    consistency_report,
    eps1,
    eps1_closed,
    eps1_combinatorial,
    eps1_combinatorial_corrected,
    eps1_divisor_sum,
    eps2,
    eps2_closed,
    eps2_combinatorial,
    eps2_divisor_sum,
    eps_closed,
    eps_total,
    example_forms,
)
from .numtheory import (
    count_primitive,
    divisors,
    gamma_sets,
    lambda_sets,
    mobius,
    primes_and_gaps,
)
from .pairs import (
    BudgetExceededError,
    PairWitness,
    PreconditionError,
    classify_pair,
    construct_e1,
    construct_e2,
    enumerate_primitive,
    oracle_enumerate_E,
    xq_nonprimitive_filter,
)
from .words import (
    RootDecomposition,
    Word,
    commute,
    conjugacy_witness,
    is_primitive,
    parse_word,
    power,
    primitive_root,
    word,
)

__version__ = "0.1.0"
