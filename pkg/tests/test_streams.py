"""Stream text format, replay validation, and the generator models."""

import pytest

from lfdyn.graph import Graph
from lfdyn.streams import (
    MODELS,
    Stream,
    StreamError,
    Update,
    format_stream,
    generate_stream,
    parse_stream,
    read_stream,
    write_stream,
)


def test_parse_basic_with_comments_and_blanks():
    text = """
# a toy stream
n 4

+ 0 1
+ 2 3
- 1 0
"""
    s = parse_stream(text.splitlines())
    assert s.n == 4
    assert s.updates == [Update("+", 0, 1), Update("+", 2, 3), Update("-", 1, 0)]
    assert len(s) == 3


def test_format_parse_round_trip(tmp_path):
    s = generate_stream("mixed", n=20, updates=80, seed=3)
    text = format_stream(s, comment="round trip")
    assert parse_stream(text.splitlines()) == s
    path = tmp_path / "stream.txt"
    write_stream(path, s, comment="round trip")
    assert read_stream(path) == s


@pytest.mark.parametrize("text, fragment", [
    ("x 4\n+ 0 1", "line 1"),
    ("n x", "bad vertex count"),
    ("n 0", "must be >= 1"),
    ("n 3\n* 0 1", "line 2"),
    ("n 3\n+ 0 one", "bad vertex id"),
    ("n 3\n+ 0 3", "out of range"),
    ("n 3\n+ 1 1", "self-loop"),
    ("n 3\n+ 0 1\n+ 1 0", "inserting present edge"),
    ("n 3\n- 0 1", "deleting absent edge"),
    ("# nothing else", "missing header"),
])
def test_parse_rejections(text, fragment):
    with pytest.raises(StreamError, match=fragment):
        parse_stream(text.splitlines())


def test_error_reports_the_right_line():
    text = "# one\nn 5\n+ 0 1\n+ 0 1\n"
    with pytest.raises(StreamError, match="line 4"):
        parse_stream(text.splitlines())


@pytest.mark.parametrize("model", MODELS)
def test_generators_are_deterministic_and_replayable(model):
    a = generate_stream(model, n=30, updates=200, seed=7)
    b = generate_stream(model, n=30, updates=200, seed=7)
    c = generate_stream(model, n=30, updates=200, seed=8)
    assert a == b
    assert a != c
    assert len(a) == 200
    # replays cleanly onto an empty graph
    g = Graph(30)
    for op, u, v in a:
        (g.insert if op == "+" else g.delete)(u, v)


def test_gnp_insert_is_insert_only():
    s = generate_stream("gnp-insert", n=25, updates=120, seed=1)
    assert all(op == "+" for op, _, _ in s)
    assert len({(u, v) for _, u, v in s}) == 120


def test_gnp_insert_rejects_impossible_request():
    with pytest.raises(StreamError):
        generate_stream("gnp-insert", n=4, updates=7, seed=0)


def test_mixed_hovers_near_target():
    target = 50
    s = generate_stream("mixed", n=40, updates=3000, seed=5, target_edges=target)
    live = 0
    peak = 0
    for op, _, _ in s:
        live += 1 if op == "+" else -1
        peak = max(peak, live)
    assert live <= peak <= 2 * target
    assert peak >= target  # actually reaches the hover band


def test_sliding_window_caps_live_edges():
    window = 25
    s = generate_stream("sliding-window", n=30, updates=400, seed=6, window=window)
    live = 0
    for op, _, _ in s:
        live += 1 if op == "+" else -1
        assert live <= window + 1
    assert any(op == "-" for op, _, _ in s)


def test_star_flip_touches_only_hub_edges():
    hubs = 3
    s = generate_stream("star-flip", n=40, updates=300, seed=7, hubs=hubs)
    assert all(min(u, v) < hubs for _, u, v in s)
    assert any(op == "-" for op, _, _ in s)


def test_generator_rejections():
    with pytest.raises(StreamError, match="unknown model"):
        generate_stream("tornado", n=10, updates=5, seed=0)
    with pytest.raises(StreamError, match="unknown parameters"):
        generate_stream("mixed", n=10, updates=5, seed=0, windows=3)
    with pytest.raises(StreamError):
        generate_stream("mixed", n=0, updates=5, seed=0)
    with pytest.raises(StreamError):
        generate_stream("mixed", n=10, updates=-1, seed=0)
    with pytest.raises(StreamError):
        generate_stream("star-flip", n=10, updates=5, seed=0, hubs=11)


def test_stream_iteration_protocol():
    s = Stream(3, [Update("+", 0, 1)])
    assert list(s) == [Update("+", 0, 1)]
    assert len(s) == 1
