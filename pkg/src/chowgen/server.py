"""MCP server exposing the presentation, verification and series commands.

Each tool returns the same JSON payload the CLI prints with ``--format json``.
"""

import asyncio
from contextlib import asynccontextmanager
from typing import Any

from mcp.server.fastmcp import FastMCP

from chowgen.algebra.ring import normal_form_mod_2c3, to_text
from chowgen.algebra.series import GradedSeries, expand, generating_function, resolve_r2
from chowgen.async_utils import SweepTimeoutError, concurrency_limiter
from chowgen.cli import collect_checks
from chowgen.config import config
from chowgen.emitters import presentation_to_dict, series_to_dict, table_to_dict
from chowgen.golden import TABLE_RANKS
from chowgen.logging_config import UserError, get_logger, setup_logging
from chowgen.presentation import Form, build_table_block, presentation

logger = get_logger("server")


class GracefulShutdown:
    """Drain running tool computations when the server stops."""

    def __init__(self):
        self._shutdown = False
        self._tasks: dict[asyncio.Future, str] = {}

    def is_shutting_down(self) -> bool:
        return self._shutdown

    def initiate_shutdown(self):
        if not self._shutdown:
            self._shutdown = True
            logger.info("Shutdown signal received, waiting for running computations...")

    def register_task(self, task: asyncio.Future, name: str = "") -> None:
        """Track a computation under a readable name until it finishes."""
        self._tasks[task] = name or repr(task)
        task.add_done_callback(lambda t: self._tasks.pop(t, None))

    @property
    def running(self) -> list[str]:
        return sorted(self._tasks.values())

    async def wait_for_tasks(self, timeout: float = 10.0) -> list[str]:
        """Wait for tracked computations; return the names still running at the timeout."""
        if not self._tasks:
            return []

        logger.info(f"Waiting for {len(self._tasks)} computations: {', '.join(self.running)}")
        _, pending = await asyncio.wait(list(self._tasks), timeout=timeout)
        if not pending:
            logger.info("All computations completed")
            return []
        names = sorted(self._tasks.get(t, repr(t)) for t in pending)
        logger.warning(f"Timeout after {timeout}s; still running: {', '.join(names)}")
        return names


shutdown_handler = GracefulShutdown()


@asynccontextmanager
async def server_lifespan(app: FastMCP):
    """Resolve the R2 denominator at startup and drain running tools on shutdown."""
    try:
        logger.info("Starting chowgen MCP server...")
        resolution = await asyncio.to_thread(resolve_r2)
        logger.info(f"R2 denominator: {to_text(resolution.adopted.denominator)}")
        yield
    finally:
        logger.info("Shutting down server...")
        shutdown_handler.initiate_shutdown()
        await shutdown_handler.wait_for_tasks()
        logger.info("Server shutdown complete")


mcp = FastMCP(
    name="chowgen",
    instructions=(
        "Exact integral Chow ring presentations of the space of conics in P^r. "
        "Polynomials are in T, c2, c3 with integer coefficients, reduced mod 2c3."
    ),
    lifespan=server_lifespan,
)


def _refused() -> dict[str, Any]:
    return {"status": "error", "message": "Server is shutting down, new requests not accepted"}


async def _compute(func, *args):
    async with concurrency_limiter:
        task = asyncio.ensure_future(asyncio.to_thread(func, *args))
        shutdown_handler.register_task(task, f"{func.__name__}{args}")
        return await task


@mcp.tool()
async def present_ideal(r: int, form: str = "closed") -> dict[str, Any]:
    """Generators of the relation ideal for one r.

    Args:
        r: Positive integer, the dimension of the projective space.
        form: 'closed' for the localization relations, 'gf' for the series coefficients.

    Returns:
        dict with r, form and generators (name, degree, terms with decimal-string
        coefficients and exponents of T, c2, c3).
    """
    if shutdown_handler.is_shutting_down():
        return _refused()
    try:
        ideal = await _compute(presentation, r, Form(form))
    except (UserError, ValueError) as e:
        return {"status": "error", "message": str(e)}
    return presentation_to_dict(ideal)


@mcp.tool()
async def verify_claims(r_max: int = 10) -> dict[str, Any]:
    """Run the ideal-equality, redundancy and resummation checks for 1 <= r <= r_max.

    Returns:
        dict with passed (bool), checks (name -> bool) and failed (list of names).
    """
    if shutdown_handler.is_shutting_down():
        return _refused()
    if r_max < 1:
        return {"status": "error", "message": f"r_max must be at least 1, got {r_max}"}
    try:
        checks = await _compute(
            collect_checks, r_max, 1, config.series_degree, None, config.sweep_timeout
        )
    except SweepTimeoutError as e:
        return {"status": "error", "message": str(e), "completed": e.completed}
    failed = [name for name, ok in checks if not ok]
    return {"passed": not failed, "checks": dict(checks), "failed": failed}


@mcp.tool()
async def expand_series(which: str = "R1", max_degree: int = 10) -> dict[str, Any]:
    """Homogeneous components 0..max_degree of R1 or R2, reduced mod 2c3."""
    if shutdown_handler.is_shutting_down():
        return _refused()
    if which not in ("R1", "R2") or max_degree < 0:
        return {
            "status": "error",
            "message": "which must be 'R1' or 'R2' and max_degree non-negative",
        }

    def run() -> GradedSeries:
        series = expand(generating_function(1 if which == "R1" else 2), max_degree)
        return GradedSeries(tuple(normal_form_mod_2c3(p) for p in series.components))

    return series_to_dict(which, await _compute(run))


@mcp.tool()
async def reproduce_published_table() -> dict[str, Any]:
    """The generator table for r = 1, 2, 3 with each computed cell beside the printed one."""
    if shutdown_handler.is_shutting_down():
        return _refused()
    blocks = await _compute(lambda: [build_table_block(r) for r in TABLE_RANKS])
    return table_to_dict(blocks)


def run():
    """Entry point for the chowgen-mcp command.

    mcp.run() manages its own event loop via anyio, so it is called
    synchronously.
    """
    setup_logging(config.log_level, config.log_file)
    try:
        logger.info("Starting server with stdio transport...")
        mcp.run(transport="stdio")
    except KeyboardInterrupt:
        logger.info("Keyboard interrupt received")
        shutdown_handler.initiate_shutdown()
    except Exception as e:
        logger.error(f"Server error: {e}", exc_info=True)
        raise
    finally:
        logger.info("Server stopped")


if __name__ == "__main__":
    run()
