"""Exact arithmetic for rank-metric codes over finite fields."""

from .anticode import (check_anticode, check_cover, criterion_optimal_anticode, is_anticode,
                       mrd_corpus, standard_anticode)
from .codefile import code_from_json, code_to_json, dumps_code, load_code, loads_code, save_code
from .codes import (DistanceDistribution, GeneralCode, LinearMatrixCode, VectorCode,
                    WeightDistribution, code_intersection, code_sum, distance_distribution,
                    dual_code, gamma_expand, min_distance, rank_distance, restrict_columnspace,
                    vector_dual, vector_rank, weight_distribution)
from .config import budget, get_budget, set_budget
from .errors import (BudgetExceeded, InconsistentInput, InvalidParameter, NotApplicable,
                     RankForgeError)
from .field import (ExtensionBasis, FieldElement, FieldSpec, dual_basis, extension_field,
                    galois_field, relative_trace)
from .linalg import MatrixFq, Subspace, enumerate_subspaces, q_binomial, rank
from .macwilliams import (CodeParams, RecursionInput, ZeroPattern, binomial_moment,
                          count_zero_diagonal, dual_moment, dual_weights_from_moments,
                          macwilliams_transform, weight_recursion)
from .mrd import (GabidulinSpec, gabidulin_code, gabidulin_matrix_code, is_mrd,
                  mrd_weight_distribution, quasi_mrd_weights, singleton_bound)

__all__ = [name for name in dir() if not name.startswith("_")]
