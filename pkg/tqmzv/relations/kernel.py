from tqmzv.algebra.cyclic import rho_map
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.words import require
from tqmzv.models import VerificationReport
from tqmzv.relations._compare import compare_zero
from tqmzv.series.evaluation import z_eval


def verify_kernel(word: str, n: int, order: int) -> VerificationReport:
    """rho_n(w) is annihilated by Z for w in H^1 outside the powers of y."""
    require(word, "H1check")
    image = rho_map(n, NcPoly.word(word))
    return compare_zero("kernel", {"word": word, "n": n, "N": order}, z_eval(image, order))
