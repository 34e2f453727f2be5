"""Simple-minded systems over self-injective Nakayama algebras A_n^ell."""

from .algebra import (
    AlgebraParams,
    IndecModule,
    InvalidModuleError,
    ProjectiveModuleError,
    ar_translate,
    ar_translate_inverse,
    cosyzygy,
    dim_vector,
    from_symbol,
    nakayama,
    nu_orbit,
    parse_module,
    radical_power,
    syzygy,
    to_symbol,
)
from .families import (
    FamilyLabel,
    SmsCandidate,
    build_family,
    build_long,
    build_short,
    extract_partition,
    lift,
)
from .noncrossing import NonCrossingPartition, catalan, narayana, noncrossing_partitions, parse_partition
from .stable_hom import hom_dim, is_orthogonal_system, is_stable_brick, stable_hom_dim
from .verifier import classify_all, count_sms, count_sms_brauer_tree, enumerate_sms, is_sms

__version__ = "0.1.0"
