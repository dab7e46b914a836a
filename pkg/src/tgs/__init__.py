"""Workbench for finite ternary Gamma-semirings.

States and mediators are addressed by dense integer indices; names are for
display and for the text format.
"""
from .axioms import AxiomReport, Counterexample, check_all, check_t1, check_t3
from .core import FiniteTGS, Leaf, Node, evaluate, evaluate_term, flatten_index, unflatten_index
from .errors import (BadVersion, BudgetExceeded, DuplicateTuple, MissingTuple, ParseError,
                     PredicateError, PreconditionError, SizeError, StructuralError, TGSError,
                     UnknownName)
from .fixtures import (catalysis_toy, constant_model, field_toy, get_fixture,
                       modular_product_model, projection_model, thermo_toy)
from .homomorphisms import (StateMap, check_image_preservation, compose, enumerate_homomorphisms,
                            find_image_counterexample, image, is_homomorphism, map_pathway)
from .ideals import (IdealKind, Verdict, enumerate_ideals, generate_ideal, is_chemical_ideal,
                     is_gamma_ideal, is_ideal, is_prime, is_reaction_closed, is_semiprime)
from .model_finder import SearchSpec, count_models, enumerate_models, sample_model
from .pathways import (Pathway, PathwayStep, Slot, find_pathway, reachable, successors,
                       verify_trapping)
from .subsets import StateSubset
from .textformat import parse_map, parse_subset, parse_tgs, serialize_map, serialize_tgs

__version__ = "0.1.0"
