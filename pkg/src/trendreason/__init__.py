"""Qualitative trend reasoning over signs of values and time derivatives."""

from .analysis import (PathResult, TrendFilter, core, envelope, is_stable, path_query,
                       query, stabilisation_loops, steady_states)
from .correlation import (CorrelationMatrix, RemovalTrace, is_degenerate, matrix_to_model,
                          removal_heuristic)
from .model import (Relation, RelationKind, TrendModel, parse_model, relation_shape,
                    serialize_model, validate)
from .signs import MINUS, PLUS, ZERO, QSign, qmul, qneg, qsq, qsum
from .solver import ScenarioSet, Triplet, relation_allows, solve, solve_bruteforce, variable_groups
from .transitions import (ScenarioGraph, build_graph, scenario_transition_allowed,
                          triplet_successors)

__version__ = "0.1.0"
