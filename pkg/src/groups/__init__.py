from .finite_group import (
    FiniteGroup, from_cayley_table, group_from_trusted_table, element_order,
    sylow_subgroup_elements, is_nilpotent, restrict_to_subgroup,
)
from .permutations import from_permutation_generators
from .families import construct_family, direct_product
from .group_files import load_cayley_file, load_perm_file, parse_cayley_text, parse_perm_text
from .spec_parser import parse_group_spec
