"""Synchronous tests for batch recognition.

Covers batch_recognize in serial, thread and process modes, chunking and
input validation.
"""

import pytest
from conftest import complete, cycle, path

from ordercert import batch_recognize
from ordercert.errors import SizeGuardError
from ordercert.generators import random_interval
from ordercert.recognition import ClassId, recognize


def sample():
    """A mix of members and non-members of the chordal class."""
    return [cycle(4), path(4), cycle(5), complete(4), cycle(6), path(1)]


def test_batch_recognize_serial():
    """Test serial batch recognition keeps input order."""
    result = batch_recognize(sample(), "chordal")
    assert [r.member for r in result] == [False, True, False, True, False, True]
    assert all(r.graph_class is ClassId.CHORDAL_GRAPH for r in result)


@pytest.mark.parametrize("mode", ["thread", "process", "serial"])
def test_batch_recognize_modes_agree(mode):
    """Test every executor mode matches plain recognize."""
    graphs = [random_interval(7, seed) for seed in range(12)] + sample()
    expected = [recognize(g, "proper-interval").member for g in graphs]
    result = batch_recognize(
        graphs, "proper-interval", parallel=True, workers=2, mode=mode, chunk_size=3
    )
    assert [r.member for r in result] == expected


def test_batch_recognize_search_method():
    """Test method is forwarded to every graph."""
    result = batch_recognize(sample()[:2], "split", method="search")
    assert [r.method for r in result] == ["search", "search"]


def test_batch_recognize_empty():
    """Test an empty input gives an empty list."""
    assert batch_recognize([], "interval") == []


def test_batch_recognize_rejects_single_graph():
    """Test passing a Graph instead of an iterable of graphs."""
    with pytest.raises(TypeError):
        batch_recognize(path(3), "interval")


def test_batch_recognize_rejects_non_graphs():
    """Test items must be graphs."""
    with pytest.raises(TypeError):
        batch_recognize([path(3), "cycle:4"], "interval")


def test_batch_recognize_invalid_mode():
    """Test an unknown mode is a ValueError."""
    with pytest.raises(ValueError):
        batch_recognize([path(3)], "interval", parallel=True, mode="cluster")


def test_batch_recognize_unknown_class():
    """Test class names are parsed."""
    with pytest.raises(ValueError, match="unknown graph class"):
        batch_recognize([path(3)], "planar")


def test_batch_recognize_guard():
    """Test the size guard propagates from the workers."""
    with pytest.raises(SizeGuardError):
        batch_recognize([path(5)], "interval", max_n=4)
