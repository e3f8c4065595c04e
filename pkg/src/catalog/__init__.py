from .small_groups import (
    MAX_CATALOG_ORDER, KNOWN_CLASS_COUNTS, groups_of_order, is_complete_order,
    build_group, histogram_digest, fingerprint, abelian_invariant_factors,
)
