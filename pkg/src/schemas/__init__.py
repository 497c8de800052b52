"""Pydantic schemas for domain types and results"""
from src.schemas.roles import Role, RoleKind, AssociateSubtype
from src.schemas.strategy import Strategy, StrategyKind, STRATEGY_NAMES
from src.schemas.trajectory import (
    Baseline,
    TrajectoryRecord,
    Trajectory,
    MeanRecord,
    MeanTrajectory,
    EnsembleResult,
)
from src.schemas.generator import BAParams, RankProfile
from src.schemas.dataset import DatasetName, DatasetDescriptor, ValidationReport
from src.schemas.experiment import (
    NetworkSpec,
    ExperimentConfig,
    ResultRow,
    ResultTable,
    SummaryRow,
)

__all__ = [
    # Roles
    "Role",
    "RoleKind",
    "AssociateSubtype",
    # Strategies and trajectories
    "Strategy",
    "StrategyKind",
    "STRATEGY_NAMES",
    "Baseline",
    "TrajectoryRecord",
    "Trajectory",
    "MeanRecord",
    "MeanTrajectory",
    "EnsembleResult",
    # Generators
    "BAParams",
    "RankProfile",
    # Datasets
    "DatasetName",
    "DatasetDescriptor",
    "ValidationReport",
    # Experiments
    "NetworkSpec",
    "ExperimentConfig",
    "ResultRow",
    "ResultTable",
    "SummaryRow",
]
