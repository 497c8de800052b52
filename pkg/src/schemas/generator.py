"""Synthetic network schemas"""
from typing import List
from pydantic import BaseModel, Field, field_validator, model_validator


class BAParams(BaseModel):
    """Barabási–Albert growth parameters"""
    n: int = Field(default=100, ge=1)
    m: int = Field(default=2, ge=1)
    seed: int = 0

    @model_validator(mode="after")
    def _m_below_n(self) -> "BAParams":
        if self.m >= self.n:
            raise ValueError(f"m must be smaller than n (got m={self.m}, n={self.n})")
        return self

    @property
    def network_id(self) -> str:
        return f"ba_{self.n}_{self.m}"


class RankProfile(BaseModel):
    """1-based degree-rank positions held by role-labeled nodes"""
    ranks: List[int] = Field(default_factory=list)

    @field_validator("ranks")
    @classmethod
    def _sorted_distinct_positive(cls, ranks: List[int]) -> List[int]:
        if any(r < 1 for r in ranks):
            raise ValueError("ranks are 1-based")
        if len(set(ranks)) != len(ranks):
            raise ValueError("ranks must be distinct")
        return sorted(ranks)

    def __len__(self) -> int:
        return len(self.ranks)
