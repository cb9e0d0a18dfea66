"""Exact arithmetic for matroids of roots of unity, simplicial join
complexes, and their enumerative invariants."""

from .bipartite import (
    chromatic_from_egf,
    chromatic_polynomial,
    coboundary_polynomial,
    coloring_sum,
    corollary5_check,
    forest_enumerator,
    indep_gf_from_egf,
    kpq_matroid,
    restricted_forest_enumerator,
    verify_prop4,
    verify_prop6,
)
from .complexes import (
    HomologySummary,
    JoinComplex,
    adin_sum,
    bolker_bound,
    star_tree,
    tree_homology,
    tree_homology_kernel_route,
)
from .cyclo import (
    IntPoly,
    block_decomposition,
    cyclotomic_matroid,
    cyclotomic_polynomial,
    euler_phi,
    factorize,
    primitive_roots_subset,
    squarefree_part,
    verify_parallel_extension,
)
from .dual import (
    DualityDictionary,
    corollary2_bound,
    dual_side_matroid,
    duality_dictionary,
    qbasis_count,
    verify_theorem1,
)
from .linalg import (
    Matrix,
    SmithForm,
    determinant,
    integer_kernel_lattice,
    kernel_basis,
    rank,
    smith_normal_form,
)
from .matroids import (
    EnumerationLimitError,
    RepresentedMatroid,
    direct_sum,
    indices_from_mask,
    mask_from_indices,
)
from .polys import LPoly, MPoly, Series2, TuttePoly, format_terms
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "DualityDictionary",
    "EnumerationLimitError",
    "HomologySummary",
    "IntPoly",
    "JoinComplex",
    "LPoly",
    "MPoly",
    "Matrix",
    "RepresentedMatroid",
    "Series2",
    "SmithForm",
    "TuttePoly",
    "VerificationReport",
    "adin_sum",
    "block_decomposition",
    "bolker_bound",
    "chromatic_from_egf",
    "chromatic_polynomial",
    "coboundary_polynomial",
    "coloring_sum",
    "corollary2_bound",
    "corollary5_check",
    "cyclotomic_matroid",
    "cyclotomic_polynomial",
    "determinant",
    "direct_sum",
    "dual_side_matroid",
    "duality_dictionary",
    "euler_phi",
    "factorize",
    "forest_enumerator",
    "format_terms",
    "indep_gf_from_egf",
    "indices_from_mask",
    "integer_kernel_lattice",
    "kernel_basis",
    "kpq_matroid",
    "mask_from_indices",
    "primitive_roots_subset",
    "qbasis_count",
    "rank",
    "restricted_forest_enumerator",
    "smith_normal_form",
    "squarefree_part",
    "star_tree",
    "tree_homology",
    "tree_homology_kernel_route",
    "verify_parallel_extension",
    "verify_prop4",
    "verify_prop6",
    "verify_theorem1",
]
