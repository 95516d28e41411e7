from .tpoly import TPoly
from .qseries import QSeries

__all__ = ["TPoly", "QSeries"]
