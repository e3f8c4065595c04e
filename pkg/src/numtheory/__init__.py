from .arithmetic import (
    factorize, divisors, omega_phi, euler_phi, ratio, is_prime_power,
    cyclic_edge_count, compare_divisor_ratios, even_multiple_gap,
)
