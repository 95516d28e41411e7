from .cli_config import CliConfig
from .records import NcPolyTerm, SeriesRecord, TensorTerm
from .report import FirstDiff, VerificationReport

__all__ = [
    "CliConfig",
    "FirstDiff",
    "NcPolyTerm",
    "SeriesRecord",
    "TensorTerm",
    "VerificationReport",
]
