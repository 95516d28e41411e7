"""loads config files from environment and env file"""

from decouple import config
from dotenv import load_dotenv

load_dotenv()

TQMZV_CACHE_DIR = config("TQMZV_CACHE_DIR", default="")

ORDER_MARGIN = config("ORDER_MARGIN", cast=int, default=12)
VERIFY_WORKERS = config("VERIFY_WORKERS", cast=int, default=1)
CHECK_INVERSE = config("CHECK_INVERSE", cast=bool, default=False)
DEFAULT_SEED = config("DEFAULT_SEED", cast=int, default=0)
NUMERIC_EPS = config("NUMERIC_EPS", cast=float, default=1e-15)
MEMO_SIZE = config("MEMO_SIZE", cast=int, default=65536)
SERIES_CACHE_SIZE = config("SERIES_CACHE_SIZE", cast=int, default=4096)

DEBUG = config("DEBUG", cast=bool, default=False)
