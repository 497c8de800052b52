"""Disruption trajectory schemas"""
from typing import List, Optional
from pydantic import BaseModel, Field
from src.schemas.strategy import Strategy


class Baseline(BaseModel):
    """Integrity metrics of the intact graph"""
    cc: int = Field(..., ge=0)
    lcc: int = Field(..., ge=0)
    efficiency: float = Field(..., ge=0.0)


class TrajectoryRecord(BaseModel):
    """Normalized integrity metrics after one removal"""
    step: int = Field(..., ge=1)
    removed: int
    cc_norm: float = Field(..., ge=0.0)
    lcc_norm: float = Field(..., ge=0.0, le=1.0)
    eff_norm: float = Field(..., ge=0.0)


class Trajectory(BaseModel):
    """All records of one disruption run"""
    strategy: Strategy
    network_id: str
    replication: int = 0
    baseline: Baseline
    records: List[TrajectoryRecord] = Field(default_factory=list)

    @property
    def removed_nodes(self) -> List[int]:
        return [r.removed for r in self.records]

    def metric(self, name: str) -> List[float]:
        """Series of one normalized metric (cc_norm, lcc_norm or eff_norm)"""
        return [getattr(r, name) for r in self.records]


class MeanRecord(BaseModel):
    """Pointwise mean of the normalized metrics at one step"""
    step: int = Field(..., ge=1)
    cc_norm: float
    lcc_norm: float
    eff_norm: float


class MeanTrajectory(BaseModel):
    """Mean of several trajectories of equal length"""
    network_id: str
    strategy_name: str
    replications: int = Field(..., ge=1)
    records: List[MeanRecord] = Field(default_factory=list)

    def metric(self, name: str) -> List[float]:
        return [getattr(r, name) for r in self.records]


class EnsembleResult(BaseModel):
    """Replicated random disruption"""
    trajectories: List[Trajectory]
    mean: MeanTrajectory
    base_seed: Optional[int] = None
