from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class CliConfig(BaseModel):
    """Settings shared by the subcommands, validated once per invocation"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    order: Optional[int] = Field(default=None, ge=0)
    output_format: Literal["text", "json"] = "text"
    t_value: Optional[Fraction] = None
    q_value: Optional[float] = None
    eps: Optional[float] = Field(default=None, gt=0)
    cache_dir: Optional[str] = None
    seed: int = 0
    workers: int = Field(default=1, ge=1)
    letters: bool = False

    @field_validator("t_value", mode="before")
    @classmethod
    def exact_t(cls, value):
        if value is None or isinstance(value, Fraction):
            return value
        if isinstance(value, float):
            raise ValueError("t must be an exact rational such as 1/2")
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError) as error:
            raise ValueError(f"not a rational number: {value!r}") from error

    @field_validator("q_value")
    @classmethod
    def q_in_unit_interval(cls, value):
        if value is not None and not 0.0 < value < 1.0:
            raise ValueError("q must lie strictly between 0 and 1")
        return value

    def order_for(self, weight: int, margin: int) -> int:
        return self.order if self.order is not None else weight + margin
