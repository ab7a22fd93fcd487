"""Exact computations for parameterized diagram monoids."""
from .diagrams import (BudgetExceeded, Diagram, DiagramError, EvaluationMap, Flavor, MismatchedFlavor,
                       MismatchedStrands, ProductOutcome, compose, enumerate_diagrams, evaluate, involute,
                       is_planar, tensor, validate_flavor)
from .monoid import (GENERIC, SYMBOLIC, FiniteMonoid, GramMatrix, GreenStructure, ParameterAssignment, Prime,
                     apexes, build_diagram_monoid, expected_apexes, gram, green, is_well_connected,
                     monoid_from_table, rank, repgap, simple_dimensions, truncate)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "Diagram", "DiagramError", "EvaluationMap", "Flavor", "MismatchedFlavor",
    "MismatchedStrands", "ProductOutcome", "compose", "enumerate_diagrams", "evaluate", "involute",
    "is_planar", "tensor", "validate_flavor", "GENERIC", "SYMBOLIC", "FiniteMonoid", "GramMatrix",
    "GreenStructure", "ParameterAssignment", "Prime", "apexes", "build_diagram_monoid", "expected_apexes",
    "gram", "green", "is_well_connected", "monoid_from_table", "rank", "repgap", "simple_dimensions",
    "truncate",
]
