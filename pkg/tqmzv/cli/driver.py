"""runs the tasks of a verification suite, in worker processes when asked"""

import logging

import anyio
from anyio import CapacityLimiter, to_process

from tqmzv.algebra.memo import clear_memo
from tqmzv.models import VerificationReport
from tqmzv.relations.suites import SUITES, SuiteOptions, Task, build_tasks, run_task
from tqmzv.storage import get_default_cache

logger = logging.getLogger(__name__)


async def run_tasks(
    tasks: list[Task], workers: int = 1, cache_dir: str | None = None
) -> list[VerificationReport]:
    """Run every task and return the reports in task order."""
    slots: list[list[VerificationReport] | None] = [None] * len(tasks)
    if workers <= 1:
        for i, task in enumerate(tasks):
            slots[i] = run_task(task)
    else:
        limiter = CapacityLimiter(workers)

        async def run_one(i: int, task: Task) -> None:
            slots[i] = await to_process.run_sync(
                run_task, task, cache_dir, limiter=limiter
            )

        async with anyio.create_task_group() as tg:
            for i, task in enumerate(tasks):
                tg.start_soon(run_one, i, task)
    return [report for reports in slots for report in reports or ()]


def run_suite(
    suite: str,
    options: SuiteOptions,
    workers: int = 1,
    cache_dir: str | None = None,
) -> list[VerificationReport]:
    """Run a suite; ``all`` runs each suite in turn. Memo tables and the
    in-memory series cache are dropped after every suite."""
    names = [name for name in SUITES if name != "all"] if suite == "all" else [suite]
    reports = []
    for name in names:
        tasks = build_tasks(name, options)
        logger.info("verifying %s: %i tasks on %i worker(s)", name, len(tasks), workers)
        reports.extend(anyio.run(run_tasks, tasks, workers, cache_dir))
        clear_memo()
        get_default_cache().clear_memory()
    failed = sum(not report.passed for report in reports)
    if failed:
        logger.warning("%s: %i of %i reports failed", suite, failed, len(reports))
    else:
        logger.info("%s: all %i reports passed", suite, len(reports))
    return reports
