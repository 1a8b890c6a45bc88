"""Finite Wajsberg algebras (equivalently finite MV-algebras) as operation tables."""

from .constructors import Bijection, PreconditionError, chain, chain_product, product, product_of, transport, trivial
from .core import (
    AxiomViolation,
    MalformedTableError,
    MvView,
    OrderRelation,
    ValidationReport,
    Violation,
    WajsbergTable,
    complement,
    default_labels,
    distance,
    from_mv,
    natural_order,
    to_mv,
    validate,
    zero,
)
from .enumeration import CensusCapError, CensusReport, iso_classes, labeled_census, multiplicative_partitions, pi
from .ideals import (
    Decomposition,
    IdealSet,
    QuotientAlgebra,
    congruence,
    decompose,
    enumerate_ideals,
    is_ideal,
    is_prime_ideal,
    prime_ideals,
    quotient,
)
from .isomorphism import (
    ChainSignature,
    automorphisms,
    automorphisms_brute_force,
    find_isomorphism,
    is_homomorphism,
    isomorphic,
    poset_isomorphic,
    signature,
)

__version__ = "0.1.0"
