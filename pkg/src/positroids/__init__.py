"""Sparse paving positroid toolkit.

A matroid kernel over explicit basis families, the three classic positroid
representations (Grassmann necklaces, decorated permutations, Le-diagrams),
conversions between them, sparse paving classifiers with witnesses, and the
Lucas-number census of sparse paving positroids.
"""

from .matroid import (
    CircuitHyperplaneSet,
    KSubset,
    Matroid,
    check_exchange_axiom,
    circuit_hyperplanes,
    circuits,
    dual,
    hyperplanes,
    is_paving,
    is_sparse_paving,
    k_subset_masks,
    mask_of,
    members_of,
    rank_of,
    relax,
    uniform,
)
from .necklace import (
    GrassmannNecklace,
    NonAdjacentSet,
    all_necklaces,
    bumped_interval,
    cyclic_interval,
    cyclic_le,
    gale_le,
    is_positroid,
    is_valid_necklace,
    mod1,
    necklace_from_nonadjacent,
    necklace_to_positroid,
    necklace_violation,
    nonadjacent_mask_ok,
    positroid_necklace,
    schubert_bases,
    sparse_paving_witness,
)
from .decorated import (
    DecoratedPermutation,
    apply_adjacent_swaps,
    decperm_to_necklace,
    necklace_to_decperm,
    perm_sparse_paving_witness,
    top_permutation,
)
from .le_diagram import (
    Boundary,
    LeDiagram,
    PathSystem,
    PlanarNetwork,
    boundary_labels,
    build_network,
    cell_numbering,
    find_path_system,
    is_le,
    is_realizable,
    le_from_removals,
    le_violation,
    realizable_sets,
    render_le,
)
from .enumeration import (
    SparsePavingPositroid,
    count_nonadjacent,
    count_sparse_paving,
    enumerate_sparse_paving,
    lucas,
    nearest_golden_power,
    nonadjacent_subsets,
    recurrence_case,
)

import types as _types

__all__ = [name for name in dir()
           if not name.startswith("_")
           and not isinstance(globals()[name], _types.ModuleType)]
