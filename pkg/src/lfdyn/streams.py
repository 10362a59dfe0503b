"""Update streams: text format, validation, generators.

Format: UTF-8 lines; `#` starts a comment line; the first non-comment line
is `n <count>`; every following line is `+ <u> <v>` or `- <u> <v>` with
whitespace-separated fields. Streams start from the empty graph. Parsing
replays the edge set, so a stream that double-inserts or deletes a missing
edge is rejected with its line number.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graph import edge_key

MODELS = ("gnp-insert", "mixed", "sliding-window", "star-flip")


class StreamError(ValueError):
    pass


class Update(NamedTuple):
    op: str  # "+" or "-"
    u: int
    v: int


@dataclass(frozen=True)
class Stream:
    n: int
    updates: list[Update]

    def __iter__(self):
        return iter(self.updates)

    def __len__(self) -> int:
        return len(self.updates)


def parse_stream(lines: Iterable[str]) -> Stream:
    n = -1
    updates: list[Update] = []
    present: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n < 0:
            if len(fields) != 2 or fields[0] != "n":
                raise StreamError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise StreamError(f"line {lineno}: bad vertex count {fields[1]!r}")
            if n < 1:
                raise StreamError(f"line {lineno}: vertex count must be >= 1")
            continue
        if len(fields) != 3 or fields[0] not in "+-":
            raise StreamError(f"line {lineno}: expected '+ u v' or '- u v'")
        op = fields[0]
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise StreamError(f"line {lineno}: bad vertex id")
        if not (0 <= u < n and 0 <= v < n):
            raise StreamError(f"line {lineno}: vertex out of range [0, {n})")
        if u == v:
            raise StreamError(f"line {lineno}: self-loop ({u}, {v})")
        e = edge_key(u, v)
        if op == "+":
            if e in present:
                raise StreamError(f"line {lineno}: inserting present edge {e}")
            present.add(e)
        else:
            if e not in present:
                raise StreamError(f"line {lineno}: deleting absent edge {e}")
            present.remove(e)
        updates.append(Update(op, u, v))
    if n < 0:
        raise StreamError("missing header 'n <count>'")
    return Stream(n, updates)


def read_stream(path) -> Stream:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_stream(fh)


def format_stream(stream: Stream, comment: str | None = None) -> str:
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(f"n {stream.n}")
    out.extend(f"{op} {u} {v}" for op, u, v in stream.updates)
    return "\n".join(out) + "\n"


def write_stream(path, stream: Stream, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_stream(stream, comment))


# -- generators --------------------------------------------------------------


class _EdgePool:
    """Present-edge set with O(1) uniform sampling (swap-remove list)."""

    def __init__(self):
        self.edges: list[tuple[int, int]] = []
        self.index: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e) -> bool:
        return e in self.index

    def add(self, e) -> None:
        self.index[e] = len(self.edges)
        self.edges.append(e)

    def remove(self, e) -> None:
        i = self.index.pop(e)
        last = self.edges.pop()
        if i < len(self.edges):
            self.edges[i] = last
            self.index[last] = i

    def sample(self, rng: random.Random):
        return self.edges[rng.randrange(len(self.edges))]


def _absent_edge(rng: random.Random, n: int, present) -> tuple[int, int]:
    # Rejection sampling; meant for sparse targets (fine below ~half density).
    while True:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        e = (u, v) if u < v else (v, u)
        if e not in present:
            return e


def generate_stream(model: str, n: int, updates: int, seed: int, **params) -> Stream:
    """Deterministic stream of `updates` operations under the given model.

    gnp-insert: insertions only, a uniform random absent edge each step.
    mixed: hovers around target_edges (default 4n): below target inserts
      with probability 3/4, at or above deletes with probability 3/4.
    sliding-window: inserts a fresh random edge each step and deletes the
      oldest once more than `window` (default 2n) are live.
    star-flip: toggles random spokes around `hubs` (default max(1, n // 64))
      fixed hub vertices; an adversarial churn pattern, chosen without
      looking at ranks.
    """
    if model not in MODELS:
        raise StreamError(f"unknown model {model!r}; choose from {MODELS}")
    if n < 1:
        raise StreamError("n must be >= 1")
    if updates < 0:
        raise StreamError("updates must be >= 0")
    rng = random.Random(seed)
    pool = _EdgePool()
    out: list[Update] = []

    if model == "gnp-insert":
        if updates > n * (n - 1) // 2:
            raise StreamError("more insertions than possible edges")
        while len(out) < updates:
            e = _absent_edge(rng, n, pool)
            pool.add(e)
            out.append(Update("+", *e))

    elif model == "mixed":
        target = params.pop("target_edges", 4 * n)
        target = min(target, n * (n - 1) // 2)
        while len(out) < updates:
            insert_p = 0.75 if len(pool) < target else 0.25
            if len(pool) == 0 or (
                rng.random() < insert_p and len(pool) < n * (n - 1) // 2
            ):
                e = _absent_edge(rng, n, pool)
                pool.add(e)
                out.append(Update("+", *e))
            else:
                e = pool.sample(rng)
                pool.remove(e)
                out.append(Update("-", *e))

    elif model == "sliding-window":
        window = params.pop("window", 2 * n)
        window = max(1, min(window, n * (n - 1) // 2 - 1))
        fifo: list[tuple[int, int]] = []
        head = 0
        while len(out) < updates:
            e = _absent_edge(rng, n, pool)
            pool.add(e)
            fifo.append(e)
            out.append(Update("+", *e))
            if len(fifo) - head > window and len(out) < updates:
                e = fifo[head]
                head += 1
                pool.remove(e)
                out.append(Update("-", *e))

    elif model == "star-flip":
        hubs = params.pop("hubs", max(1, n // 64))
        if not 1 <= hubs <= n:
            raise StreamError("hubs must be in [1, n]")
        if n < 2:
            raise StreamError("star-flip needs n >= 2")
        while len(out) < updates:
            hub = rng.randrange(hubs)
            leaf = rng.randrange(n)
            if leaf == hub:
                continue
            e = edge_key(hub, leaf)
            if e in pool:
                pool.remove(e)
                out.append(Update("-", *e))
            else:
                pool.add(e)
                out.append(Update("+", *e))

    if params:
        raise StreamError(f"unknown parameters for {model}: {sorted(params)}")
    return Stream(n, out)
