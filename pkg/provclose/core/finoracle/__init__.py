from .catalog import DEFAULT_CATALOG_ENTRIES, Catalog, build_group, default_catalog, load_catalog
from .groups import (
    FiniteGroup,
    build_cyclic,
    build_permutation_group,
    build_unitriangular,
    parse_cycles,
)
from .homs import Homomorphism, apply_hom, enumerate_homs, hom_count, images
from .structure import StructureFlags, structure_flags

__all__ = [
    'DEFAULT_CATALOG_ENTRIES',
    'Catalog',
    'FiniteGroup',
    'Homomorphism',
    'StructureFlags',
    'apply_hom',
    'build_cyclic',
    'build_group',
    'build_permutation_group',
    'build_unitriangular',
    'default_catalog',
    'enumerate_homs',
    'hom_count',
    'images',
    'load_catalog',
    'parse_cycles',
    'structure_flags',
]
