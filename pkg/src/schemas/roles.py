"""Actor role taxonomy of the Montagna networks"""
import enum
import re
from typing import Optional
from pydantic import BaseModel, model_validator


class RoleKind(str, enum.Enum):
    """Position of an actor in the family hierarchy"""
    BOSS = "boss"
    MESSAGGERO = "messaggero"
    CAPOREGIME = "caporegime"
    DEPUTY_CAPOREGIME = "deputy_caporegime"
    SOLDIER = "soldier"
    ASSOCIATE = "associate"
    RELATIVE = "relative"
    COHABITEE = "cohabitee"
    FUGITIVE = "fugitive"
    CHARGED = "charged"
    IN_JAIL = "in_jail"
    FIGUREHEAD = "figurehead"
    UNCLEAR = "unclear"


class AssociateSubtype(str, enum.Enum):
    """Occupation of a non-member associate"""
    ENTREPRENEUR = "entrepreneur"
    PHARMACIST = "pharmacist"
    LAWYER = "lawyer"
    ELECTRICIAN = "electrician"
    CITY_EMPLOYEE = "city_employee"
    TRANSPORTER = "transporter"
    COOPERATING_WITNESS = "cooperating_witness"
    LANDOWNER = "landowner"
    BAR_OWNER = "bar_owner"
    FISHMONGER = "fishmonger"
    ACCOUNTANT = "accountant"
    BREEDER = "breeder"
    CONSTRUCTION_WORKER = "construction_worker"
    EXTERNAL_PARTNERSHIP = "external_partnership"


def normalize_token(raw: str) -> str:
    """'Deputy Caporegime' / 'deputy-caporegime' -> 'deputy_caporegime'"""
    return re.sub(r"[\s\-]+", "_", raw.strip().lower())


class Role(BaseModel):
    """Role label; subtype is set exactly for associates"""
    kind: RoleKind
    subtype: Optional[AssociateSubtype] = None

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _subtype_iff_associate(self) -> "Role":
        if (self.kind == RoleKind.ASSOCIATE) != (self.subtype is not None):
            raise ValueError("subtype must be present if and only if kind is associate")
        return self

    @property
    def label(self) -> str:
        """Stable text form, e.g. 'caporegime' or 'associate/entrepreneur'"""
        if self.subtype is None:
            return self.kind.value
        return f"{self.kind.value}/{self.subtype.value}"

    @classmethod
    def parse(cls, kind: str, subtype: Optional[str] = None) -> "Role":
        """Build a role from free text; raises ValueError on unknown names."""
        kind_enum = RoleKind(normalize_token(kind))
        sub = normalize_token(subtype) if subtype else ""
        return cls(kind=kind_enum, subtype=AssociateSubtype(sub) if sub else None)

    @classmethod
    def from_label(cls, label: str) -> "Role":
        """Inverse of `label`; also accepts a bare subtype such as 'entrepreneur'."""
        token = label.strip()
        if "/" in token:
            kind, subtype = token.split("/", 1)
            return cls.parse(kind, subtype)
        normalized = normalize_token(token)
        if normalized in AssociateSubtype._value2member_map_:
            return cls(kind=RoleKind.ASSOCIATE, subtype=AssociateSubtype(normalized))
        return cls.parse(token)

    def __str__(self) -> str:
        return self.label


CAPOREGIME = Role(kind=RoleKind.CAPOREGIME)
SOLDIER = Role(kind=RoleKind.SOLDIER)
ENTREPRENEUR = Role(kind=RoleKind.ASSOCIATE, subtype=AssociateSubtype.ENTREPRENEUR)
UNCLEAR = Role(kind=RoleKind.UNCLEAR)
