from .probe_config import ProbeConfig, default_delta_schedule
from .verdict import Verdict
from .probe_report import FunctionalTrace, ProbeReport
from .spectrum_report import SpectrumReport
from .suite_report import SuiteReport

__all__ = [
    "ProbeConfig",
    "default_delta_schedule",
    "Verdict",
    "FunctionalTrace",
    "ProbeReport",
    "SpectrumReport",
    "SuiteReport",
]
