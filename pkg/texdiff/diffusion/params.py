from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict

from marshmallow import EXCLUDE, Schema
from marshmallow_dataclass import class_schema

from texdiff.errors import ParameterError


class EdgeStopping(str, Enum):
    """Edge-stopping function g used by Perona-Malik style diffusivities"""

    RATIONAL = "rational"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class DiffusionParams:
    # edge threshold
    kappa: float = 1.0
    # weight of the forward-backward regularization term
    delta: float = 0.1
    # growth exponent of the regularization term
    p: float = 1.1
    # fractional order of the nonlocal edge detector
    epsilon: float = 0.1
    # explicit time step
    dt: float = 0.25
    # Gaussian sigma increment per scale
    sigma_step: float = 0.5
    # lower clamp for |grad I| in the singular |grad I|^(p-2) term
    grad_floor: float = 1e-6
    edge_stopping: EdgeStopping = field(
        default=EdgeStopping.RATIONAL, metadata={"by_value": True}
    )

    def __post_init__(self) -> None:
        try:
            edge_stopping = EdgeStopping(self.edge_stopping)
        except ValueError:
            raise ParameterError(
                f"Unknown edge-stopping function : {self.edge_stopping!r}"
            ) from None
        object.__setattr__(self, "edge_stopping", edge_stopping)
        if not 0 < self.dt <= 0.25:
            raise ParameterError(
                f"dt must be in (0, 0.25] for the explicit scheme to be stable, "
                f"got {self.dt}"
            )
        if not self.p > 1:
            raise ParameterError(f"p must be greater than 1, got {self.p}")
        if not 0 < self.epsilon < 1:
            raise ParameterError(f"epsilon must be in (0, 1), got {self.epsilon}")
        if not self.kappa > 0:
            raise ParameterError(f"kappa must be positive, got {self.kappa}")
        if not self.grad_floor > 0:
            raise ParameterError(f"grad_floor must be positive, got {self.grad_floor}")
        if not self.delta >= 0:
            raise ParameterError(f"delta can't be negative, got {self.delta}")
        if not self.sigma_step > 0:
            raise ParameterError(f"sigma_step must be positive, got {self.sigma_step}")

    @property
    def max_diffusivity(self) -> float:
        """Largest diffusivity for which one explicit 4-neighbour step stays a
        convex combination of the pixel and its neighbours"""
        return 1 / (4 * self.dt)

    def dump(self) -> Dict[str, Any]:
        dumped: Dict[str, Any] = PARAMS_SCHEMA.dump(self)
        return dumped

    @classmethod
    def load(cls, raw: Dict[str, Any]) -> "DiffusionParams":
        params: DiffusionParams = PARAMS_SCHEMA.load(raw)
        return params


class BaseSchema(Schema):
    class Meta:
        ordered = True
        unknown = EXCLUDE


PARAMS_SCHEMA = class_schema(DiffusionParams, base_schema=BaseSchema)()

DEFAULT_PARAMS = DiffusionParams()
