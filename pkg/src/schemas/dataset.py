"""Dataset descriptor and validation schemas"""
import enum
from pathlib import Path
from typing import Dict, List, Tuple
from pydantic import BaseModel, Field


class DatasetName(str, enum.Enum):
    """Montagna operation networks"""
    MEETINGS = "meetings"
    PHONE_CALLS = "phone_calls"


# Attribute census per network (label -> number of nodes); rows sum to the node count
MEETINGS_ROLE_CENSUS: Dict[str, int] = {
    "boss": 4,
    "messaggero": 1,
    "caporegime": 12,
    "deputy_caporegime": 2,
    "soldier": 18,
    "associate/entrepreneur": 26,
    "associate/pharmacist": 2,
    "associate/lawyer": 1,
    "associate/electrician": 1,
    "associate/cooperating_witness": 1,
    "associate/breeder": 2,
    "associate/construction_worker": 1,
    "associate/external_partnership": 5,
    "relative": 6,
    "fugitive": 1,
    "in_jail": 2,
    "unclear": 16,
}

PHONE_CALLS_ROLE_CENSUS: Dict[str, int] = {
    "messaggero": 1,
    "caporegime": 7,
    "deputy_caporegime": 2,
    "soldier": 18,
    "associate/entrepreneur": 25,
    "associate/pharmacist": 2,
    "associate/lawyer": 1,
    "associate/city_employee": 1,
    "associate/transporter": 2,
    "associate/landowner": 1,
    "associate/bar_owner": 1,
    "associate/fishmonger": 1,
    "associate/accountant": 1,
    "associate/breeder": 1,
    "associate/external_partnership": 8,
    "relative": 3,
    "cohabitee": 2,
    "charged": 2,
    "in_jail": 3,
    "figurehead": 2,
    "unclear": 16,
}

# Nodes present in both networks
SHARED_NODE_COUNT = 47


class DatasetDescriptor(BaseModel):
    """Where a network lives on disk and what it should contain"""
    name: DatasetName
    edge_path: Path
    attr_path: Path
    expected_nodes: int = Field(..., ge=0)
    expected_edges: int = Field(..., ge=0)
    expected_roles: Dict[str, int] = Field(default_factory=dict)

    @property
    def expected(self) -> Tuple[int, int]:
        return self.expected_nodes, self.expected_edges


class ValidationReport(BaseModel):
    """Outcome of comparing a loaded network with its descriptor"""
    dataset: DatasetName
    node_count_ok: bool
    edge_count_ok: bool
    role_counts: Dict[str, Tuple[int, int]] = Field(default_factory=dict)
    mismatches: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.node_count_ok
            and self.edge_count_ok
            and all(found == expected for found, expected in self.role_counts.values())
        )
