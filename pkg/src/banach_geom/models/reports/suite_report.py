from typing import Any, Dict, List

from pydantic import Field

from ..bases.base_model import GeomBaseModel
from .verdict import Verdict


class SuiteReport(GeomBaseModel):
    """
    Verdict table of the acceptance suite plus the cross-check failures.

    Carries no timing, so equal seeds give byte-identical JSON.
    """
    seed: int = Field(..., alias="seed")
    config: Dict[str, Any] = Field(default_factory=dict, alias="config")
    table: Dict[str, Dict[str, str]] = Field(default_factory=dict, alias="table")
    verdicts: Dict[str, Dict[str, Verdict]] = Field(default_factory=dict, alias="verdicts")
    cross_check_failures: List[str] = Field(default_factory=list, alias="cross_check_failures")
    repro: Dict[str, Any] = Field(default_factory=dict, alias="repro")

    @property
    def passed(self) -> bool:
        return not self.cross_check_failures

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "config": self.config,
            "table": self.table,
            "verdicts": {
                label: {name: verdict.to_json_dict() for name, verdict in verdicts.items()}
                for label, verdicts in self.verdicts.items()
            },
            "cross_check_failures": list(self.cross_check_failures),
            "repro": self.repro,
        }
