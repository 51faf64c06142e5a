"""Independent support extraction for CNF formulas with projection sets."""

from .cdcl import Solver, SolveOutcome, Status
from .cnf import (CnfFormula, DimacsError, build_occurrence_list, compute_incidence,
                  parse_dimacs, read_dimacs, to_dimacs, write_support)
from .explicit import ExplicitResult, build_dependency_graph, explicit_search, greedy_ind_search
from .gates import GateDef, GateIndex, XorConstraint, find_and_gates_sweep, find_xor_gates
from .implicit import integrated_implicit, query_order, simple_search
from .padoa import PadoaInstance, build_padoa, definability_query_assumptions
from .pipeline import PipelineConfig, PipelineTimeout, SupportResult, run_pipeline

__version__ = "0.1.0"
