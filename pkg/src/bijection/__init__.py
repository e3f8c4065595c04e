from .order_matching import (
    order_histogram, cyclic_histogram, solve_class_flow, find_order_bijection,
    verify_order_bijection, odd_ratio_dominance, residue_order,
)
