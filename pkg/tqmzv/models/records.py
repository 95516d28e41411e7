"""JSON record shapes for the algebra and series payloads"""

from pydantic import BaseModel, Field, field_validator

CoeffTriple = tuple[int, int, str]
TPolyPair = tuple[int, str]


def _check_word(value: str) -> str:
    if not set(value) <= {"x", "y"}:
        raise ValueError(f"not a word over {{x, y}}: {value!r}")
    return value


class NcPolyTerm(BaseModel):
    word: str
    coeff: list[CoeffTriple]

    @field_validator("word")
    @classmethod
    def word_letters(cls, value: str) -> str:
        return _check_word(value)


class TensorTerm(BaseModel):
    slots: list[str] = Field(min_length=2)
    coeff: list[CoeffTriple]

    @field_validator("slots")
    @classmethod
    def slots_are_words(cls, value: list[str]) -> list[str]:
        return [_check_word(slot) for slot in value]


class SeriesRecord(BaseModel):
    N: int = Field(ge=0)
    coeffs: list[list[TPolyPair]]

    @field_validator("coeffs")
    @classmethod
    def one_coefficient_per_power(cls, value, info):
        order = info.data.get("N")
        if order is not None and len(value) != order + 1:
            raise ValueError(
                f"expected {order + 1} coefficients, got {len(value)}"
            )
        return value
