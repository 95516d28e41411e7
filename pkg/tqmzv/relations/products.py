"""Seeded random checks of the algebraic laws of the products and maps"""

from __future__ import annotations

import logging
import random
from typing import Callable, Iterator

from tqmzv.algebra.coefficients import CoefPoly
from tqmzv.algebra.maps import (
    d1_derivation,
    gamma_inverse,
    gamma_map,
    phi_map,
    s_inverse,
    s_map,
)
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.algebra.products import (
    circledast,
    harmonic_star,
    harmonic_star_plus,
    t_circledast,
    t_harmonic,
)
from tqmzv.models import VerificationReport
from tqmzv.relations._compare import aggregate
from tqmzv.utils.enumerate import enumerate_words

logger = logging.getLogger(__name__)

Check = tuple[dict, NcPoly, NcPoly]


def random_element(rng: random.Random, words: list[str], terms: int = 3) -> NcPoly:
    """A random combination of ``words`` with small coefficients in Q[h, t]."""
    acc: dict[str, CoefPoly] = {}
    for _ in range(rng.randint(1, terms)):
        coefficient = CoefPoly.monomial(
            rng.choice((-2, -1, 1, 2, 3)), rng.randint(0, 1), rng.randint(0, 1)
        )
        word = rng.choice(words)
        acc[word] = acc.get(word, CoefPoly()) + coefficient
    return NcPoly(acc)


class _Sampler:
    def __init__(self, seed: int, max_weight: int):
        self.rng = random.Random(seed)
        self.h1 = list(enumerate_words(max_weight, "H1"))
        self.hy = list(enumerate_words(max_weight, "Hy"))
        small = min(max_weight, 3)
        self.h1_small = list(enumerate_words(small, "H1"))
        self.any_small = list(enumerate_words(small))

    def draw(self, pool: list[str], count: int) -> list[NcPoly]:
        return [random_element(self.rng, pool) for _ in range(count)]


def _witness(i: int, *elements: NcPoly) -> dict:
    names = ("u", "v", "w")
    return {"case": i, **{n: e.render(letters=True) for n, e in zip(names, elements)}}


def _commutative(product) -> Callable[[_Sampler, int], Iterator[Check]]:
    def checks(sampler: _Sampler, count: int) -> Iterator[Check]:
        for i in range(count):
            u, v = sampler.draw(sampler.h1, 2)
            yield _witness(i, u, v), product(u, v), product(v, u)

    return checks


def _associative(product) -> Callable[[_Sampler, int], Iterator[Check]]:
    def checks(sampler: _Sampler, count: int) -> Iterator[Check]:
        for i in range(count):
            u, v, w = sampler.draw(sampler.h1_small, 3)
            yield _witness(i, u, v, w), product(product(u, v), w), product(u, product(v, w))

    return checks


def t_harmonic_at_t0(sampler: _Sampler, count: int) -> Iterator[Check]:
    for i in range(count):
        u, v = sampler.draw(sampler.h1, 2)
        u0, v0 = u.subs_t(0), v.subs_t(0)
        yield _witness(i, u0, v0), t_harmonic(u0, v0).subs_t(0), harmonic_star_plus(u0, v0)


def star_plus_at_h0(sampler: _Sampler, count: int) -> Iterator[Check]:
    for i in range(count):
        u, v = (e.subs_hbar(0) for e in sampler.draw(sampler.h1, 2))
        yield _witness(i, u, v), harmonic_star_plus(u, v).subs_hbar(0), harmonic_star(u, v)


def t_circledast_at_t0(sampler: _Sampler, count: int) -> Iterator[Check]:
    for i in range(count):
        u, v = (e.subs_t(0) for e in sampler.draw(sampler.hy, 2))
        yield _witness(i, u, v), t_circledast(u, v).subs_t(0), circledast(u, v)


def phi_involution(sampler: _Sampler, count: int) -> Iterator[Check]:
    for i in range(count):
        (u,) = sampler.draw(sampler.any_small, 1)
        yield _witness(i, u), phi_map(phi_map(u)), u


def gamma_roundtrip(sampler: _Sampler, count: int) -> Iterator[Check]:
    for i in range(count):
        (u,) = sampler.draw(sampler.any_small, 1)
        yield _witness(i, u), gamma_inverse(gamma_map(u)), u


def _multiplicative(fn) -> Callable[[_Sampler, int], Iterator[Check]]:
    def checks(sampler: _Sampler, count: int) -> Iterator[Check]:
        for i in range(count):
            u, v = sampler.draw(sampler.any_small, 2)
            yield _witness(i, u, v), fn(u * v), fn(u) * fn(v)

    return checks


def d1_leibniz(sampler: _Sampler, count: int) -> Iterator[Check]:
    for i in range(count):
        u, v = sampler.draw(sampler.any_small, 2)
        yield (
            _witness(i, u, v),
            d1_derivation(u * v),
            d1_derivation(u) * v + u * d1_derivation(v),
        )


def s_roundtrip(sampler: _Sampler, count: int) -> Iterator[Check]:
    for i in range(count):
        (u,) = sampler.draw(sampler.h1, 1)
        yield _witness(i, u), s_inverse(s_map(u), check=True), u


LAWS: dict[str, Callable[[_Sampler, int], Iterator[Check]]] = {
    "star-commutative": _commutative(harmonic_star),
    "star-associative": _associative(harmonic_star),
    "star-plus-commutative": _commutative(harmonic_star_plus),
    "star-plus-associative": _associative(harmonic_star_plus),
    "t-harmonic-commutative": _commutative(t_harmonic),
    "t-harmonic-associative": _associative(t_harmonic),
    "t-harmonic-at-t0": t_harmonic_at_t0,
    "star-plus-at-h0": star_plus_at_h0,
    "t-circledast-at-t0": t_circledast_at_t0,
    "phi-involution": phi_involution,
    "phi-multiplicative": _multiplicative(phi_map),
    "gamma-multiplicative": _multiplicative(gamma_map),
    "gamma-roundtrip": gamma_roundtrip,
    "d1-leibniz": d1_leibniz,
    "s-roundtrip": s_roundtrip,
}


def verify_product_law(
    name: str, seed: int, count: int, max_weight: int
) -> VerificationReport:
    sampler = _Sampler(seed, max_weight)
    params = {"seed": seed, "count": count, "max_weight": max_weight}
    return aggregate(name, params, LAWS[name](sampler, count))


def verify_product_laws(
    seed: int, count: int = 50, max_weight: int = 4
) -> list[VerificationReport]:
    return [verify_product_law(name, seed, count, max_weight) for name in LAWS]
