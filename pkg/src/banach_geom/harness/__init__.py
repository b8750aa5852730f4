from .catalogue import BUILTIN_DESCRIPTORS, SpaceCatalogue, builtin_catalogue
from .repro import repro_example_5_5, repro_linf_counterexample
from .suite import run_check, run_suite

__all__ = [
    "BUILTIN_DESCRIPTORS",
    "SpaceCatalogue",
    "builtin_catalogue",
    "repro_example_5_5",
    "repro_linf_counterexample",
    "run_check",
    "run_suite",
]
