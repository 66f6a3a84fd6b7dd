"""Size-Ramsey properties of paths: certificates, exact search, exponents and experiments."""

__version__ = "0.1.0"

from .colouring import Colouring
from .errors import BudgetError, DomainWarning, ParameterError
from .graphs import BipartiteGraph, Graph, RandomSpec, parse_graph

__all__ = ["BipartiteGraph", "BudgetError", "Colouring", "DomainWarning", "Graph",
           "ParameterError", "RandomSpec", "parse_graph", "__version__"]
