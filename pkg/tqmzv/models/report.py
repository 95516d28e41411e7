from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

TPolyJson = list[tuple[int, str]]


class FirstDiff(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    q_power: int = Field(alias="qPower", ge=0)
    lhs: TPolyJson
    rhs: TPolyJson


class VerificationReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    relation: str
    params: dict[str, Any] = Field(default_factory=dict)
    status: Literal["pass", "fail"]
    first_diff: Optional[FirstDiff] = Field(default=None, alias="firstDiff")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_line(self) -> str:
        return self.model_dump_json(by_alias=True)

    @classmethod
    def from_json_line(cls, line: str) -> "VerificationReport":
        return cls.model_validate_json(line)
