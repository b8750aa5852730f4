from typing import List, Optional

from pydantic import Field

from ..bases.base_model import GeomBaseModel


class SpectrumReport(GeomBaseModel):
    """
    Operator norm, Daugavet residual and approximate-eigenvalue residual of T.

    ``eigen_residual_at_norm`` is inf over unit x of |Tx - |T| x|; it vanishes
    exactly when |T| is in the approximate point spectrum. ``lipschitz`` is
    |T| + lambda, the constant that turns the grid mesh into an error bound.
    """
    op_norm: float = Field(..., alias="op_norm", ge=0)
    op_norm_exact: bool = Field(..., alias="op_norm_exact")
    norm_identity_plus: float = Field(..., alias="norm_identity_plus", ge=0)
    daugavet_residual: float = Field(..., alias="daugavet_residual")
    eigen_residual_at_norm: float = Field(..., alias="eigen_residual_at_norm", ge=0)
    witness: Optional[List[float]] = Field(None, alias="witness")
    lipschitz: float = Field(..., alias="lipschitz", ge=0)
    grid_points: int = Field(..., alias="grid_points")
    spectral_gap: Optional[float] = Field(None, alias="spectral_gap")
