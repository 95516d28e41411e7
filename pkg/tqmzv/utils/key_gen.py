"""Used to derive content addressed names for cached series"""

import xxhash


def series_key(kind: str, index: str, order: int) -> str:
    """
    the canonical text key of a cached series
    :param kind: ``zeta`` or ``star``
    :param index: the index in ``2,1`` form
    :param order: the truncation order N
    """
    return f"{kind}:{index}:{order}"


def series_digest(kind: str, index: str, order: int) -> str:
    """
    generates a hex string based on the series key
    :return: a 32 characters long hex string
    """
    return xxhash.xxh128(series_key(kind, index, order).encode()).hexdigest()
