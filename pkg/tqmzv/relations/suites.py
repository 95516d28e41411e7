"""Verification suites: enumerated instance grids and the task runner.

A suite is expanded into a list of picklable ``Task`` objects in a fixed
enumeration order; ``run_task`` executes one of them (possibly in a worker
process) and always returns a list of reports.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable

from tqmzv import config
from tqmzv.algebra.ncpoly import NcPoly
from tqmzv.models import VerificationReport
from tqmzv.relations import definition, lemmas, products
from tqmzv.relations.cyclic_sum import verify_cyclic_sum, verify_cyclic_sum_symbolic
from tqmzv.relations.hoffman import verify_hoffman, verify_hoffman_display
from tqmzv.relations.kawashima import verify_kawashima, verify_kawashima_t0
from tqmzv.relations.kernel import verify_kernel
from tqmzv.storage import configure_default_cache
from tqmzv.utils.enumerate import enumerate_indices, enumerate_words

logger = logging.getLogger(__name__)

DEFAULT_MAX_WEIGHT = {
    "kawashima": 3,
    "csf": 6,
    "hoffman": 6,
    "kernel": 4,
    "lemmas": 5,
    "definition": 6,
    "products": 4,
}
DEFAULT_MAX_DEPTH = {"csf": 4}
ORACLE_MAX_WEIGHT = 5
PRODUCT_LAW_COUNT = 50
KERNEL_N = (1, 2)
SUITES = (*DEFAULT_MAX_WEIGHT, "all")


@dataclass(frozen=True)
class Task:
    name: str
    args: tuple


@dataclass
class SuiteOptions:
    max_weight: int | None = None
    max_depth: int | None = None
    m: int | None = None
    order: int | None = None
    seed: int = 0

    def weight_for(self, suite: str) -> int:
        return self.max_weight if self.max_weight is not None else DEFAULT_MAX_WEIGHT[suite]

    def depth_for(self, suite: str) -> int | None:
        """``None`` enumerates every depth."""
        if self.max_depth is not None:
            return self.max_depth
        return DEFAULT_MAX_DEPTH.get(suite)

    def order_for(self, weight: int) -> int:
        return self.order if self.order is not None else weight + config.ORDER_MARGIN


def _kawashima(options: SuiteOptions) -> list[Task]:
    words = list(enumerate_words(options.weight_for("kawashima"), "Hy"))
    ms = (options.m,) if options.m is not None else (1, 2, 3)
    tasks = []
    for m in ms:
        for v, w in combinations_with_replacement(words, 2):
            order = options.order_for(len(v) + len(w) + m)
            tasks.append(Task("kawashima", (m, v, w, order)))
            tasks.append(Task("kawashima-t0", (m, v, w, order)))
    return tasks


def _csf(options: SuiteOptions) -> list[Task]:
    tasks = []
    for index in enumerate_indices(
        options.weight_for("csf"),
        options.depth_for("csf"),
        admissible=False,
        exclude_all_ones=True,
    ):
        order = options.order_for(index.weight + 1)
        tasks.append(Task("csf", (index, order)))
        tasks.append(Task("csf-kernel", (index, order)))
    return tasks


def _hoffman(options: SuiteOptions) -> list[Task]:
    tasks = []
    weight = options.weight_for("hoffman")
    for index in enumerate_indices(weight, options.depth_for("hoffman")):
        order = options.order_for(index.weight + 1)
        tasks.append(Task("hoffman", (index, order)))
        tasks.append(Task("hoffman-display", (index, order)))
    return tasks


def _kernel(options: SuiteOptions) -> list[Task]:
    ns = (options.m,) if options.m is not None else KERNEL_N
    return [
        Task("kernel", (word, n, options.order_for(len(word) + n)))
        for n in ns
        for word in enumerate_words(options.weight_for("kernel"), "H1check")
    ]


def _lemmas(options: SuiteOptions) -> list[Task]:
    weight = options.weight_for("lemmas")
    return [Task("lemma", (name, weight)) for name in lemmas.FAMILIES]


def _definition(options: SuiteOptions) -> list[Task]:
    weight = options.weight_for("definition")
    indices = list(enumerate_indices(weight, options.depth_for("definition")))
    tasks = []
    for index in indices:
        order = options.order_for(index.weight)
        tasks.append(Task("route-agreement", (index, order)))
        tasks.append(Task("specializations", (index, order)))
        tasks.append(Task("specialization-coherence", (index, order)))
        tasks.append(Task("truncation", (index, order)))
        if index.weight <= ORACLE_MAX_WEIGHT:
            tasks.append(Task("oracle", (index, order)))
    words = [index.word() for index in indices]
    for u, v in combinations_with_replacement(words, 2):
        if len(u) + len(v) <= weight + 1:
            tasks.append(Task("harmonic-product", (u, v, options.order_for(len(u) + len(v)))))
    return tasks


def _products(options: SuiteOptions) -> list[Task]:
    weight = options.weight_for("products")
    return [
        Task("product-law", (name, options.seed, PRODUCT_LAW_COUNT, weight))
        for name in products.LAWS
    ]


BUILDERS: dict[str, Callable[[SuiteOptions], list[Task]]] = {
    "kawashima": _kawashima,
    "csf": _csf,
    "hoffman": _hoffman,
    "kernel": _kernel,
    "lemmas": _lemmas,
    "definition": _definition,
    "products": _products,
}


def build_tasks(suite: str, options: SuiteOptions) -> list[Task]:
    if suite == "all":
        return [task for name in BUILDERS for task in BUILDERS[name](options)]
    return BUILDERS[suite](options)


def _on_words(fn):
    def run(m, v, w, order):
        return fn(m, NcPoly.word(v), NcPoly.word(w), order)

    return run


RUNNERS: dict[str, Callable[..., VerificationReport | list[VerificationReport]]] = {
    "kawashima": _on_words(verify_kawashima),
    "kawashima-t0": _on_words(verify_kawashima_t0),
    "csf": verify_cyclic_sum,
    "csf-kernel": verify_cyclic_sum_symbolic,
    "hoffman": verify_hoffman,
    "hoffman-display": verify_hoffman_display,
    "kernel": verify_kernel,
    "lemma": lemmas.verify_lemma,
    "route-agreement": definition.verify_route_agreement,
    "specializations": definition.verify_specializations,
    "specialization-coherence": definition.verify_specialization_coherence,
    "truncation": definition.verify_truncation,
    "oracle": definition.verify_oracle,
    "harmonic-product": definition.verify_harmonic_product,
    "product-law": products.verify_product_law,
}


_worker_cache_dir: str | None = None


def run_task(task: Task, cache_dir: str | None = None) -> list[VerificationReport]:
    """Run one task; worker processes pass ``cache_dir`` to share the disk cache."""
    global _worker_cache_dir
    if cache_dir is not None and cache_dir != _worker_cache_dir:
        configure_default_cache(cache_dir)
        _worker_cache_dir = cache_dir
    logger.debug("running %s%s", task.name, task.args)
    result = RUNNERS[task.name](*task.args)
    return result if isinstance(result, list) else [result]
