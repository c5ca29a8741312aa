"""Perfect play for chomp on graphs and simplicial complexes.

Pick a face, lose it and everything above it; the player with no move
loses.  The package pairs an exact grundy-value engine with closed
forms for Kneser, Johnson, multipartite, and threshold families, plus
involution-based reductions, a mirror strategy that plays them, a
verification layer replaying every formula against the engine, a CLI,
and an HTTP play service.
"""

from .closedforms import (ClosedFormResult, binom_mod, closed_form_for_spec,
                          complete_outcome, johnson_nim, johnson_skeleton_nim,
                          kneser_chomp_clique, kneser_nim, kneser_skeleton_nim,
                          multipartite_nim, multipartite_skeleton_reduction,
                          threshold_outcome)
from .core import (Complex, FaceTuple, GameState, Graph, Move, apply_move,
                   close_downward, complex_from_json, complex_to_json,
                   connected_components, disjoint_union, legal_moves,
                   load_complex)
from .engine import (Outcome, TranspositionTable, best_move, default_table,
                     grundy, grundy_canonicalized, grundy_with_stats, mex,
                     outcome, xor_sum)
from .errors import (ChompError, DisciplineBroken, FaceNotPresent,
                     InvalidSpec, NotApplicable, NotValidated,
                     ResourceExceeded, TooLarge, UnsupportedPrime)
from .families import (FamilySpec, JohnsonParams, KneserParams,
                       MultipartiteSpec, ThresholdSpec, clique_skeleton,
                       complete_graph, johnson_graph, join_graph,
                       kneser_graph, ksubsets_colex, multipartite_graph,
                       parse_family_spec, subset_label, threshold_graph)
from .symmetry import (GroundPermutation, Involution, InvolutionViolation,
                       MirrorStrategy, PosetInvolution, PosetViolation,
                       family_mirror_strategy, family_vertex_involution,
                       fixed_subgraph, johnson_involution, join_involution,
                       kneser_halving_chain, kneser_halving_fixed_graph,
                       kneser_multipartite_reduction,
                       lift_ground_permutation, lift_involution_to_faces,
                       mirror_reply, multipartite_pairing,
                       validate_involution, validate_poset_involution)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
