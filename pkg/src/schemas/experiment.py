"""Experiment configuration and result schemas"""
import re
from pathlib import Path
from typing import List, Optional
from pydantic import BaseModel, Field, model_validator
from src.schemas.dataset import DatasetName
from src.schemas.generator import BAParams
from src.schemas.strategy import Strategy
from src.schemas.trajectory import MeanTrajectory

RESULT_COLUMNS = [
    "network", "strategy", "replication", "step", "removed_node", "cc_norm", "lcc_norm", "eff_norm",
]
SUMMARY_COLUMNS = [
    "network", "strategy", "replications", "steps", "metric", "threshold",
    "dismantling_step", "mean_dismantling_step",
]
MEAN_COLUMNS = ["network", "strategy", "step", "cc_norm", "lcc_norm", "eff_norm"]
METRICS = ("cc_norm", "lcc_norm", "eff_norm")

_BA_PATTERN = re.compile(r"^ba:(\d+),(\d+)$")


class NetworkSpec(BaseModel):
    """A real dataset or a Barabási–Albert configuration"""
    dataset: Optional[DatasetName] = None
    ba: Optional[BAParams] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "NetworkSpec":
        if (self.dataset is None) == (self.ba is None):
            raise ValueError("a network is either a dataset or a BA configuration")
        return self

    @property
    def network_id(self) -> str:
        if self.dataset is not None:
            return self.dataset.value
        return self.ba.network_id

    @property
    def is_synthetic(self) -> bool:
        return self.ba is not None

    @classmethod
    def parse(cls, text: str) -> "NetworkSpec":
        """'meetings', 'phone_calls' or 'ba:<n>,<m>'"""
        token = text.strip().lower().replace(" ", "")
        match = _BA_PATTERN.match(token)
        if match:
            return cls(ba=BAParams(n=int(match.group(1)), m=int(match.group(2))))
        return cls(dataset=DatasetName(token))


class ExperimentConfig(BaseModel):
    """Networks x strategies x replications"""
    networks: List[NetworkSpec] = Field(..., min_length=1)
    strategies: List[Strategy] = Field(..., min_length=1)
    replications: int = Field(default=30, ge=1)
    base_seed: int = Field(default=42, ge=0)
    output_dir: Path = Path("./results")
    data_dir: Path = Path("./data")
    reference: DatasetName = DatasetName.MEETINGS
    allow_isolated: bool = False
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _unique_cells(self) -> "ExperimentConfig":
        ids = [n.network_id for n in self.networks]
        if len(set(ids)) != len(ids):
            raise ValueError(f"networks listed more than once: {ids}")
        names = [s.name for s in self.strategies]
        if len(set(names)) != len(names):
            raise ValueError(f"strategies listed more than once: {names}")
        return self


class ResultRow(BaseModel):
    """One (trajectory, step) row of the result table"""
    network: str
    strategy: str
    replication: int = Field(..., ge=0)
    step: int = Field(..., ge=1)
    removed_node: int
    cc_norm: float
    lcc_norm: float
    eff_norm: float


class ResultTable(BaseModel):
    """Rows in canonical (network, strategy, replication, step) order"""
    rows: List[ResultRow] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def networks(self) -> List[str]:
        return list(dict.fromkeys(row.network for row in self.rows))

    def for_network(self, network: str) -> "ResultTable":
        return ResultTable(rows=[row for row in self.rows if row.network == network])


class SummaryRow(BaseModel):
    """Per (network, strategy) summary of a result table"""
    network: str
    strategy: str
    replications: int
    steps: int
    metric: str
    threshold: float
    dismantling_step: Optional[int] = None
    mean_dismantling_step: Optional[float] = None


class Summary(BaseModel):
    """Summary rows with the mean trajectory behind each"""
    rows: List[SummaryRow] = Field(default_factory=list)
    means: List[MeanTrajectory] = Field(default_factory=list)
