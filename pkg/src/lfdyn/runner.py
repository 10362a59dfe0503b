"""Replay harness: run streams, verify against the oracle, benchmark, prune.

Timing discipline: each update is wrapped in perf_counter_ns around the
update call only; verification and CSV output happen outside the timed
window and never count toward the reported numbers.
"""

from __future__ import annotations

import csv
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ._kernel import available
from .graph import Graph
from .matching import DynamicMatching
from .mis import DynamicMis
from .oracle import (
    compute_lfmis,
    compute_lfmm,
    residual_edges,
    residual_vertices,
)
from .ranking import draw_edge_rank, new_vertex_ranking
from .streams import Stream

MODES = ("mis", "mm")

CSV_FIELDS = (
    "index",
    "op",
    "u",
    "v",
    "affected",
    "flipped",
    "relevant_scanned",
    "elapsed_ns",
    "edges",
    "size",
)


class VerificationError(RuntimeError):
    """Maintained state diverged from the from-scratch oracle."""


def verify_mis(structure: DynamicMis) -> list[str]:
    """All disagreements between maintained MIS state and the oracle."""
    problems = structure.check_invariants()
    solution = compute_lfmis(structure.graph, structure.ranking)
    pos = structure.ranking.position
    mis = structure._k.mis_vector()
    elim = structure._k.elim_vector()
    for v in range(structure.n):
        if bool(mis[v]) != solution.in_mis[v]:
            problems.append(f"vertex {v}: membership diverges from oracle")
        if elim[v] != pos[solution.eliminator[v]]:
            problems.append(f"vertex {v}: eliminator diverges from oracle")
    return problems


def verify_mm(structure: DynamicMatching) -> list[str]:
    """All disagreements between maintained matching state and the oracle."""
    problems = structure.check_invariants()
    ranks = structure.edge_ranks()
    solution = compute_lfmm(structure.graph, ranks)
    matched = set(structure.matching())
    if matched != solution.matched:
        problems.append(
            f"matching diverges from oracle: extra {sorted(matched - solution.matched)}, "
            f"missing {sorted(solution.matched - matched)}"
        )
    for e in ranks:
        if structure.eliminator_rank(*e) != ranks[solution.eliminator[e]]:
            problems.append(f"edge {e}: eliminator diverges from oracle")
    for v in range(structure.n):
        if structure.vertex_match_rank(v) != solution.vertex_rank[v]:
            problems.append(f"vertex {v}: match label diverges from oracle")
    return problems


def flip_shape_ok(flipped) -> bool:
    """True iff the flipped edges form at most one path or cycle.

    Vertex degrees within the flipped set must stay <= 2 and all flipped
    edges must lie in one connected component (a connected simple graph with
    max degree 2 is a path or a cycle).
    """
    edges = list(flipped)
    if len(edges) <= 1:
        return True
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
        if len(adj[u]) > 2 or len(adj[v]) > 2:
            return False
    start = edges[0][0]
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


@dataclass
class RunSummary:
    mode: str
    kernel: str
    updates: int
    verified_updates: int
    flip_shape_violations: int
    final_edges: int
    final_size: int
    mean_affected: float
    p95_affected: int
    mean_flipped: float
    p95_flipped: int
    mean_elapsed_ns: float
    p95_elapsed_ns: int

    def lines(self) -> list[str]:
        return [
            f"mode={self.mode} kernel={self.kernel} updates={self.updates}",
            f"final: edges={self.final_edges} size={self.final_size}",
            f"affected: mean={self.mean_affected:.3f} p95={self.p95_affected}",
            f"flipped: mean={self.mean_flipped:.3f} p95={self.p95_flipped}",
            f"elapsed: mean={self.mean_elapsed_ns / 1e3:.1f}us "
            f"p95={self.p95_elapsed_ns / 1e3:.1f}us",
            f"verified={self.verified_updates} "
            f"flip_shape_violations={self.flip_shape_violations}",
        ]


def _p95(values: Sequence) -> int | float:
    if not values:
        return 0
    ordered = sorted(values)
    return ordered[min(len(ordered) - 1, math.ceil(0.95 * len(ordered)) - 1)]


def new_structure(mode: str, n: int, seed: int, kernel: str = "auto"):
    if mode == "mis":
        return DynamicMis(n, seed, kernel=kernel)
    if mode == "mm":
        return DynamicMatching(n, seed, kernel=kernel)
    raise ValueError(f"unknown mode {mode!r}; choose from {MODES}")


def run(
    stream: Stream,
    mode: str,
    seed: int,
    verify_every: int = 0,
    csv_path=None,
    kernel: str = "auto",
    on_update: Callable | None = None,
) -> RunSummary:
    """Replay a stream, optionally verifying and emitting per-update CSV.

    verify_every=k checks the full state against the oracle after every k-th
    update (0 disables) and raises VerificationError on the first
    divergence. on_update(index, update, report, structure) is called after
    every update, outside the timed window.
    """
    structure = new_structure(mode, stream.n, seed, kernel)
    verify = verify_mis if mode == "mis" else verify_mm
    affected_counts: list[int] = []
    flipped_counts: list[int] = []
    times: list[int] = []
    verified = 0
    shape_violations = 0
    writer = None
    fh = None
    if csv_path is not None:
        fh = open(csv_path, "w", encoding="utf-8", newline="")
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
    try:
        for i, (op, u, v) in enumerate(stream):
            t0 = time.perf_counter_ns()
            if op == "+":
                report = structure.insert_edge(u, v)
            else:
                report = structure.delete_edge(u, v)
            elapsed_ns = time.perf_counter_ns() - t0
            affected_counts.append(len(report.affected))
            flipped_counts.append(len(report.flipped))
            times.append(elapsed_ns)
            if mode == "mm" and not flip_shape_ok(report.flipped):
                shape_violations += 1
            if writer is not None:
                writer.writerow(
                    (
                        i,
                        op,
                        u,
                        v,
                        len(report.affected),
                        len(report.flipped),
                        report.relevant_scanned,
                        elapsed_ns,
                        structure.graph.m,
                        structure.mis_size() if mode == "mis" else structure.matching_size(),
                    )
                )
            if verify_every and (i + 1) % verify_every == 0:
                problems = verify(structure)
                if problems:
                    raise VerificationError(
                        f"update {i} ({op} {u} {v}): " + "; ".join(problems[:5])
                    )
                verified += 1
            if on_update is not None:
                on_update(i, (op, u, v), report, structure)
    finally:
        if fh is not None:
            fh.close()
    count = len(times)
    return RunSummary(
        mode=mode,
        kernel=structure.kernel_kind,
        updates=count,
        verified_updates=verified,
        flip_shape_violations=shape_violations,
        final_edges=structure.graph.m,
        final_size=structure.mis_size() if mode == "mis" else structure.matching_size(),
        mean_affected=sum(affected_counts) / count if count else 0.0,
        p95_affected=_p95(affected_counts),
        mean_flipped=sum(flipped_counts) / count if count else 0.0,
        p95_flipped=_p95(flipped_counts),
        mean_elapsed_ns=sum(times) / count if count else 0.0,
        p95_elapsed_ns=_p95(times),
    )


@dataclass
class BenchRow:
    label: str
    updates: int
    mean_ns: float
    p95_ns: int
    total_s: float


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def row(self, label: str) -> BenchRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)

    def lines(self) -> list[str]:
        out = []
        for r in self.rows:
            out.append(
                f"{r.label:<14} updates={r.updates:<8} mean={r.mean_ns / 1e3:.2f}us "
                f"p95={r.p95_ns / 1e3:.2f}us total={r.total_s:.3f}s"
            )
        oracle = next((r for r in self.rows if r.label == "oracle"), None)
        if oracle is not None:
            for r in self.rows:
                if r.label != "oracle" and r.mean_ns > 0:
                    out.append(
                        f"speedup {r.label} vs oracle: {oracle.mean_ns / r.mean_ns:.1f}x"
                    )
        return out


def bench_compare(
    stream: Stream,
    mode: str,
    seed: int,
    kernels: Sequence[str] | None = None,
    tail: int | None = None,
) -> BenchReport:
    """Per-update times: dynamic maintenance (each kernel) vs oracle recompute.

    tail=k restricts reported statistics (and the oracle recomputation) to
    the last k updates, so a stream can build a working graph first and the
    measurement covers steady state.
    """
    if kernels is None:
        kernels = available()
    updates = stream.updates
    first = 0 if tail is None else max(0, len(updates) - tail)
    report = BenchReport()
    for name in kernels:
        structure = new_structure(mode, stream.n, seed, name)
        times = []
        for i, (op, u, v) in enumerate(updates):
            t0 = time.perf_counter_ns()
            if op == "+":
                structure.insert_edge(u, v)
            else:
                structure.delete_edge(u, v)
            dt = time.perf_counter_ns() - t0
            if i >= first:
                times.append(dt)
        report.rows.append(
            BenchRow(
                label=f"dynamic-{name}",
                updates=len(times),
                mean_ns=sum(times) / len(times) if times else 0.0,
                p95_ns=_p95(times),
                total_s=sum(times) / 1e9,
            )
        )
    # Oracle route: replay the graph, recompute from scratch on each
    # measured update. Shares nothing with the kernels.
    times = []
    if mode == "mis":
        ranking = new_vertex_ranking(stream.n, seed)
        graph = Graph(stream.n)
        for i, (op, u, v) in enumerate(updates):
            if op == "+":
                graph.insert(u, v)
            else:
                graph.delete(u, v)
            if i >= first:
                t0 = time.perf_counter_ns()
                compute_lfmis(graph, ranking)
                times.append(time.perf_counter_ns() - t0)
    else:
        graph = Graph(stream.n)
        ranks = {}
        nonce: dict[tuple[int, int], int] = {}
        for i, (op, u, v) in enumerate(updates):
            if op == "+":
                e = graph.insert(u, v)
                used = nonce.get(e, 0)
                nonce[e] = used + 1
                ranks[e] = draw_edge_rank(e, used, seed)
            else:
                e = graph.delete(u, v)
                del ranks[e]
            if i >= first:
                t0 = time.perf_counter_ns()
                compute_lfmm(graph, ranks)
                times.append(time.perf_counter_ns() - t0)
    report.rows.append(
        BenchRow(
            label="oracle",
            updates=len(times),
            mean_ns=sum(times) / len(times) if times else 0.0,
            p95_ns=_p95(times),
            total_s=sum(times) / 1e9,
        )
    )
    return report


@dataclass
class PruneRow:
    trial: int
    p: float
    mis_residual: int
    mis_max_degree: int
    mm_residual: int
    mm_max_degree: int


def pruning_test(
    n: int,
    avg_degree: float,
    thresholds: Sequence[float],
    trials: int,
    seed: int,
) -> list[PruneRow]:
    """Residual degrees after pruning settled elements below rank p.

    For each trial: one random graph with the requested average degree, one
    fresh ranking (and edge ranks), then for each threshold p the maximum
    degree among vertices whose eliminator ranks above p, and the matching
    analogue (maximum number of surviving incident edges per vertex).
    """
    target_m = int(avg_degree * n / 2)
    rows: list[PruneRow] = []
    for trial in range(trials):
        trial_seed = seed + trial
        rng = random.Random(trial_seed)
        edges: set[tuple[int, int]] = set()
        while len(edges) < target_m:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u != v:
                edges.add((u, v) if u < v else (v, u))
        graph = Graph(n, edges)
        ranking = new_vertex_ranking(n, trial_seed)
        edge_ranks = {e: draw_edge_rank(e, 0, trial_seed) for e in edges}
        for p in thresholds:
            residual = residual_vertices(graph, ranking, p)
            mis_deg = max(
                (sum(u in residual for u in graph.adj[v]) for v in residual),
                default=0,
            )
            surviving = residual_edges(graph, edge_ranks, p)
            incident: dict[int, int] = {}
            for u, v in surviving:
                incident[u] = incident.get(u, 0) + 1
                incident[v] = incident.get(v, 0) + 1
            rows.append(
                PruneRow(
                    trial=trial,
                    p=p,
                    mis_residual=len(residual),
                    mis_max_degree=mis_deg,
                    mm_residual=len(surviving),
                    mm_max_degree=max(incident.values(), default=0),
                )
            )
    return rows
