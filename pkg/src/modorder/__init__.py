"""Natural partial orders on finite modules: Mitsch, minus, Jones,
direct-sum and space relations, with a claim lab over a built-in catalog."""

from .algebra import FiniteModule, FiniteRing, ScalarRing, direct_sum, regular_representation, ring_zn, zmodule
from .catalog import builtin, builtin_catalog, load_instance, save_instance
from .homs import end_ring, enumerate_hom
from .lab import implication_report, run_suite, search_counterexample
from .orders import RELATIONS, OrderContext, decide, replay

__all__ = [
    "FiniteModule",
    "FiniteRing",
    "OrderContext",
    "RELATIONS",
    "ScalarRing",
    "builtin",
    "builtin_catalog",
    "decide",
    "direct_sum",
    "end_ring",
    "enumerate_hom",
    "implication_report",
    "load_instance",
    "regular_representation",
    "replay",
    "ring_zn",
    "run_suite",
    "save_instance",
    "search_counterexample",
    "zmodule",
]
