import sys
import uuid
from contextlib import contextmanager

import pytest

import tracing
from core.io import serialize
from graph.roots import ptolemaic_square_root
from main import EXIT_TRUE, run
from tracing import stage_trace


class FakeRun:
    def __init__(self, name, run_type="chain", parent=None):
        self.name, self.run_type, self.parent = name, run_type, parent
        self.id = uuid.uuid4()
        self.metadata, self.tags = {}, []
        self.posted = self.patched = False
        self.ended = False
        self.error = None

    def create_child(self, name, run_type="chain"):
        return FakeRun(name, run_type, parent=self)

    def add_metadata(self, metadata):
        self.metadata.update(metadata)

    def add_tags(self, tags):
        self.tags.extend(tags)

    def post(self):
        self.posted = True

    def end(self, error=None):
        self.ended, self.error = True, error

    def patch(self):
        self.patched = True


@pytest.fixture
def langsmith_runs(monkeypatch):
    """Enable tracing and capture the runs it would send to LangSmith."""
    pytest.importorskip("langsmith")
    monkeypatch.setenv("LANGCHAIN_TRACING_V2", "false")
    monkeypatch.setenv("LANGCHAIN_PROJECT", "square-roots-tests")
    monkeypatch.setattr(tracing, "TRACE_STAGES", True)

    runs, contexts = [], []

    def make_run(name, run_type="chain"):
        created = FakeRun(name, run_type)
        runs.append(created)
        return created

    original_child = FakeRun.create_child

    def create_child(self, name, run_type="chain"):
        child = original_child(self, name, run_type)
        runs.append(child)
        return child

    @contextmanager
    def tracing_context(**kwargs):
        contexts.append(kwargs)
        yield

    monkeypatch.setattr(FakeRun, "create_child", create_child)
    monkeypatch.setattr("langsmith.run_trees.RunTree", make_run)
    monkeypatch.setattr("langsmith.tracing_context", tracing_context)
    return runs, contexts


def test_disabled_tracing_yields_nothing(monkeypatch):
    monkeypatch.setattr(tracing, "TRACE_STAGES", False)
    with stage_trace("anything", n=3) as run_id:
        assert run_id is None


def test_missing_langsmith_falls_back(monkeypatch):
    monkeypatch.setattr(tracing, "TRACE_STAGES", True)
    monkeypatch.setenv("LANGCHAIN_TRACING_V2", "false")
    monkeypatch.setitem(sys.modules, "langsmith.run_trees", None)
    with stage_trace("anything") as run_id:
        assert run_id is None


def test_pipeline_run_is_one_trace(langsmith_runs, p5_squared):
    runs, contexts = langsmith_runs
    assert ptolemaic_square_root(p5_squared).found
    assert [r.name for r in runs] == ["ptolemaic_square_root"]
    (root,) = runs
    assert root.metadata == {"n": 5, "m": 7}
    assert "square-roots" in root.tags
    assert root.posted and root.ended and root.patched and root.error is None
    assert contexts[0]["parent"] is root and contexts[0]["enabled"] is True


def test_cli_command_parents_the_pipeline_trace(langsmith_runs, tmp_path, capsys, p5_squared):
    runs, _ = langsmith_runs
    path = tmp_path / "p5sq.txt"
    path.write_text(serialize(p5_squared), encoding="utf-8")
    assert run(["root", "ptolemaic", str(path)]) == EXIT_TRUE
    capsys.readouterr()
    cli, pipeline = runs
    assert cli.name == "cli" and cli.metadata == {"command": "root"}
    assert pipeline.name == "ptolemaic_square_root" and pipeline.parent is cli


def test_failed_stage_is_closed_with_the_error(langsmith_runs):
    runs, _ = langsmith_runs
    with pytest.raises(RuntimeError):
        with stage_trace("failing"):
            raise RuntimeError("boom")
    (failed,) = runs
    assert failed.ended and "boom" in failed.error
