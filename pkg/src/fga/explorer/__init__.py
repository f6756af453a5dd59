"""Exhaustive enumeration and the law suite."""

from .enumerate import UniverseSpec, enumerate_flow_graphs, universe
from .factor import factorization_experiment
from .harness import LawReport, Verdict, check_law, find_counterexample, run_catalog
from .laws import CATALOG

__all__ = [
    "CATALOG", "LawReport", "UniverseSpec", "Verdict", "check_law", "enumerate_flow_graphs",
    "factorization_experiment", "find_counterexample", "run_catalog", "universe",
]
