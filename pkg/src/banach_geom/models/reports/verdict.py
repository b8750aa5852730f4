from typing import Any, Dict, Optional

from pydantic import Field, model_validator

from ..bases.base_model import GeomBaseModel
from ..enums.verdict_status_enum import VerdictStatusEnum


class Verdict(GeomBaseModel):
    """
    Outcome of a property check.

    A failing verdict always carries a certificate: the concrete witness
    (points, functionals, operator) that violates the defining inequality.

    Examples:
        >>> Verdict(property="rotund", status="holds-exact").exit_code
        0
    """
    property_name: str = Field(..., alias="property")
    status: VerdictStatusEnum = Field(..., alias="status")
    certificate: Optional[Dict[str, Any]] = Field(None, alias="certificate")
    stats: Dict[str, Any] = Field(default_factory=dict, alias="stats")
    note: Optional[str] = Field(None, alias="note")

    @model_validator(mode="after")
    def check_certificate(self):
        if self.status == VerdictStatusEnum.FAILS and not self.certificate:
            raise ValueError("a failing verdict needs a certificate")
        return self

    @property
    def holds(self) -> bool:
        return self.status.holds

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def to_json_dict(self) -> Dict[str, Any]:
        data = super().to_json_dict()
        data["property"] = data.pop("property_name")
        if data.get("note") is None:
            data.pop("note", None)
        return data
