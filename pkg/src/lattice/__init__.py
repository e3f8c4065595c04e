from .cyclic_poset import (
    cyclic_subgroups, hasse_cover_edges, cyclic_poset, edge_count_hasse,
    edge_count_formula, coprime_product_edge_count, sylow_product_edge_count,
    p_group_edge_identity,
)
