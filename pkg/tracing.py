"""LangSmith tracing: one pipeline run or CLI command = one trace."""

import logging
import os
from contextlib import contextmanager
from contextvars import ContextVar

from config import TRACE_PROJECT, TRACE_STAGES

logger = logging.getLogger(__name__)

TAGS = ["square-roots"]

_active_run: ContextVar = ContextVar("sqroot_active_run", default=None)


def _ensure_env():
    """Ensure LangSmith env vars are set when tracing is enabled."""
    if TRACE_STAGES:
        os.environ.setdefault("LANGCHAIN_TRACING_V2", "true")
        os.environ.setdefault("LANGCHAIN_PROJECT", TRACE_PROJECT)


def _close(run, error: str | None = None) -> None:
    try:
        run.end(error=error)
        run.patch()
    except Exception:
        logger.debug("could not close trace %s", run.name, exc_info=True)


@contextmanager
def stage_trace(name: str, **metadata):
    """
    Open a LangSmith run for a named stage. LangGraph invokes inside the context
    are grouped under it; a stage opened inside another becomes its child.
    Yields the run id, or None when tracing is off or langsmith is missing.
    """
    if not TRACE_STAGES:
        yield None
        return

    _ensure_env()
    try:
        import langsmith as ls
        from langsmith.run_trees import RunTree
    except ImportError:
        logger.warning("SQROOT_TRACE is set but langsmith is not installed")
        yield None
        return

    parent = _active_run.get()
    if parent is not None:
        run = parent.create_child(name=name, run_type="chain")
    else:
        run = RunTree(name=name, run_type="chain")
    run.add_metadata(metadata)
    run.add_tags([*TAGS, name])
    run.post()

    token = _active_run.set(run)
    try:
        with ls.tracing_context(
            project_name=TRACE_PROJECT,
            enabled=True,
            parent=run,
            metadata=metadata,
            tags=TAGS,
        ):
            yield str(run.id)
    except Exception as exc:
        _close(run, error=repr(exc))
        raise
    finally:
        _active_run.reset(token)
    _close(run)
