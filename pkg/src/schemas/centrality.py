"""Centrality score schemas"""
import enum
from typing import Dict
from pydantic import BaseModel


class CentralityMeasure(str, enum.Enum):
    """Social-capital measures"""
    DEGREE = "degree"
    BETWEENNESS = "betweenness"
    CLOSENESS = "closeness"


class CentralityScores(BaseModel):
    """One score per node of the evaluated graph"""
    measure: CentralityMeasure
    scores: Dict[int, float]

    def __getitem__(self, node: int) -> float:
        return self.scores[node]

    def __len__(self) -> int:
        return len(self.scores)
