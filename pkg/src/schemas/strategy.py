"""Disruption strategy schemas"""
import enum
from typing import Dict, List, Optional
from pydantic import BaseModel, model_validator
from src.schemas.roles import CAPOREGIME, ENTREPRENEUR, SOLDIER, Role


class StrategyKind(str, enum.Enum):
    """Targeting policy"""
    DEGREE_ATTACK = "degree_attack"
    BETWEENNESS_ATTACK = "betweenness_attack"
    CLOSENESS_ATTACK = "closeness_attack"
    RANDOM = "random"
    ROLE_ATTACK = "role_attack"


# Roles a human-capital attack may target
ROLE_TARGETS: Dict[str, Role] = {
    "caporegime": CAPOREGIME,
    "soldier": SOLDIER,
    "entrepreneur": ENTREPRENEUR,
}

_SOCIAL_NAMES: Dict[str, StrategyKind] = {
    "degree": StrategyKind.DEGREE_ATTACK,
    "betweenness": StrategyKind.BETWEENNESS_ATTACK,
    "closeness": StrategyKind.CLOSENESS_ATTACK,
}

STRATEGY_NAMES: List[str] = [
    "degree", "betweenness", "closeness", "random", "caporegime", "soldier", "entrepreneur",
]


class Strategy(BaseModel):
    """One of the seven targeting policies"""
    kind: StrategyKind
    role_target: Optional[Role] = None
    seed: Optional[int] = None
    # False ranks the intact graph once instead of recomputing every step
    adaptive: bool = True

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_fields(self) -> "Strategy":
        if (self.kind == StrategyKind.ROLE_ATTACK) != (self.role_target is not None):
            raise ValueError("role_target is required for, and only for, role attacks")
        if self.role_target is not None and self.role_target not in ROLE_TARGETS.values():
            raise ValueError(f"role attacks target caporegime, soldier or entrepreneur, not {self.role_target}")
        if (self.kind == StrategyKind.RANDOM) != (self.seed is not None):
            raise ValueError("seed is required for, and only for, the random strategy")
        return self

    @property
    def name(self) -> str:
        """CLI / CSV name of the strategy"""
        if self.kind == StrategyKind.RANDOM:
            return "random"
        if self.kind == StrategyKind.ROLE_ATTACK:
            return next(k for k, v in ROLE_TARGETS.items() if v == self.role_target)
        return next(k for k, v in _SOCIAL_NAMES.items() if v == self.kind)

    def with_seed(self, seed: int) -> "Strategy":
        """Copy of a random strategy bound to another seed"""
        return self.model_copy(update={"seed": seed})

    @classmethod
    def from_name(cls, name: str, seed: Optional[int] = None, adaptive: bool = True) -> "Strategy":
        """Parse a CLI / CSV strategy name; `seed` is only used for 'random'."""
        key = name.strip().lower()
        if key in _SOCIAL_NAMES:
            return cls(kind=_SOCIAL_NAMES[key], adaptive=adaptive)
        if key == "random":
            return cls(kind=StrategyKind.RANDOM, seed=0 if seed is None else seed)
        if key in ROLE_TARGETS:
            return cls(kind=StrategyKind.ROLE_ATTACK, role_target=ROLE_TARGETS[key], adaptive=adaptive)
        raise ValueError(f"Unknown strategy '{name}'; expected one of {', '.join(STRATEGY_NAMES)}")
