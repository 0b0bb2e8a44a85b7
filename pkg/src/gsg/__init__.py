"""Finite gamma-semigroup toolkit.

Represents a family of binary operations on one finite carrier as a stack of
Cayley tables, validates the mixed associativity law, computes Green's
relations and principal ideals, builds machine-checkable translation-map
certificates, and enumerates all families of small order up to isomorphism.
"""

from .census import (
    BoundsError,
    CanonicalKey,
    CensusBounds,
    CensusResult,
    IsoWitness,
    canonical_form,
    enumerate_semigroups,
    from_canonical_key,
    isomorphic,
    iter_semigroups,
)
from .core import (
    AssociativityViolation,
    ExtElement,
    GammaGroupoid,
    GammaSemigroup,
    TableError,
    Word,
    associativity_violations,
    build_tables,
    equations_to_check,
    eval_word,
    example_order3,
    from_single_op,
    validate,
)
from .fmt import GsgDocument, ParseError, parse_gsg, serialize_gsg
from .green import (
    CongruenceReport,
    EggBox,
    EggBoxBlock,
    Partition,
    congruence_check,
    eggbox,
    partition,
    principal_ideal,
    related,
    rol_intermediary,
    rol_symmetric,
)
from .maps import (
    LemmaCertificate,
    NotRelatedError,
    TheoremCertificate,
    Witness,
    WitnessError,
    find_witnesses,
    green_lemma,
    green_theorem,
)

__all__ = [
    "AssociativityViolation",
    "BoundsError",
    "CanonicalKey",
    "CensusBounds",
    "CensusResult",
    "CongruenceReport",
    "EggBox",
    "EggBoxBlock",
    "ExtElement",
    "GammaGroupoid",
    "GammaSemigroup",
    "GsgDocument",
    "IsoWitness",
    "LemmaCertificate",
    "NotRelatedError",
    "ParseError",
    "Partition",
    "TableError",
    "TheoremCertificate",
    "Witness",
    "WitnessError",
    "Word",
    "associativity_violations",
    "build_tables",
    "canonical_form",
    "congruence_check",
    "eggbox",
    "enumerate_semigroups",
    "equations_to_check",
    "eval_word",
    "example_order3",
    "find_witnesses",
    "from_canonical_key",
    "from_single_op",
    "green_lemma",
    "green_theorem",
    "isomorphic",
    "iter_semigroups",
    "parse_gsg",
    "partition",
    "principal_ideal",
    "related",
    "rol_intermediary",
    "rol_symmetric",
    "serialize_gsg",
    "validate",
]
