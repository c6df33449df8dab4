"""Permutation groups small enough to enumerate, with subgroup and homomorphism tools."""

from .group import (
    DEFAULT_ORDER_CAP,
    OrderCapExceeded,
    PermGroup,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    make_group,
    symmetric,
)
from .hom import (
    Hom,
    coset_action,
    find_isomorphism,
    fingerprint,
    is_isomorphic,
    monomorphisms,
)
from .perm import MAX_DEGREE, Perm, format_gens, parse_gens
from .structure import (
    center,
    centralizer,
    core_idx,
    derived_subgroup,
    is_normal,
    kernel,
    normalizer,
    prime_divisors,
    sylow,
    sylow_subgroups_idx,
)

__all__ = [
    "DEFAULT_ORDER_CAP", "MAX_DEGREE", "OrderCapExceeded", "Perm", "PermGroup", "Hom",
    "alternating", "cyclic", "dihedral", "direct_product", "make_group", "symmetric",
    "coset_action", "find_isomorphism", "fingerprint", "is_isomorphic", "monomorphisms",
    "format_gens", "parse_gens", "center", "centralizer", "core_idx", "derived_subgroup",
    "is_normal", "kernel", "normalizer", "prime_divisors", "sylow", "sylow_subgroups_idx",
]
