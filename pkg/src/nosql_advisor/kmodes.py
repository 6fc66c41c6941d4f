"""k-modes clustering of categorical rows with deterministic Cao seeding.

The fit alternates batch assignment (nearest mode by Hamming distance, ties to
the lowest cluster index) with mode updates (per-column majority, ties keep
the incumbent value) until no assignment changes.  Clusters that lose all
members are repaired by donating the record currently farthest from its mode.
All tie-breaks are fixed, so identical input bytes give identical models.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .dataset import (
    SUBSET_ORDER,
    SUBSETS,
    FeatureMatrix,
    ProjectedMatrix,
    project,
)

Row = tuple[int, ...]

DEFAULT_MAX_ITER = 100
SCAN_CLUSTER_COUNTS = tuple(range(3, 10))
SELECTED_CLUSTER_COUNT = 6


def hamming(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of positions where two categorical rows differ."""
    if len(a) != len(b):
        raise ValueError(f"row lengths differ: {len(a)} vs {len(b)}")
    return sum(1 for u, v in zip(a, b) if u != v)


def cao_init(rows: Sequence[Row], k: int) -> list[Row]:
    """Density/distance seeding of the k initial modes.

    The density of a row is the average over columns of the relative frequency
    of its value in that column.  The first mode is the densest row; each later
    mode maximizes density times the minimum distance to the modes already
    chosen.  Ties always go to the lowest row index.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    distinct = len(set(rows))
    if k > distinct:
        raise ValueError(f"k={k} exceeds the {distinct} distinct rows")
    n, m = len(rows), len(rows[0])
    freq = [Counter(r[j] for r in rows) for j in range(m)]
    density = [sum(freq[j][r[j]] for j in range(m)) / (m * n) for r in rows]

    first = max(range(n), key=lambda i: (density[i], -i))
    modes: list[Row] = [tuple(rows[first])]
    while len(modes) < k:
        best_i, best_v = 0, -1.0
        for i in range(n):
            v = min(density[i] * hamming(rows[i], mode) for mode in modes)
            if v > best_v:
                best_v, best_i = v, i
        modes.append(tuple(rows[best_i]))
    return modes


@dataclass(frozen=True)
class ClusterModel:
    k: int
    modes: tuple[Row, ...]
    assignment: tuple[int, ...]
    cost: int
    iterations: int
    cost_trace: tuple[int, ...]
    subset_id: str
    repairs: tuple[str, ...] = ()

    @property
    def sizes(self) -> tuple[int, ...]:
        """Cluster sizes sorted descending (cluster ids themselves are arbitrary)."""
        counts = Counter(self.assignment)
        return tuple(sorted((counts[c] for c in range(self.k)), reverse=True))


def _update_mode(members: list[Row], incumbent: Row) -> Row:
    out = []
    m = len(incumbent)
    for j in range(m):
        counts = Counter(r[j] for r in members)
        top = max(counts.values())
        winners = [v for v in counts if counts[v] == top]
        if len(winners) == 1:
            out.append(winners[0])
        elif incumbent[j] in winners:
            out.append(incumbent[j])
        else:
            out.append(0)
    return tuple(out)


def _repair_empty(
    rows: Sequence[Row], assignment: list[int], modes: list[Row], empty: int, log: list[str]
) -> None:
    """Donate the record farthest from its current mode to the empty cluster."""
    farthest = max(
        range(len(rows)),
        key=lambda i: (hamming(rows[i], modes[assignment[i]]), -i),
    )
    assignment[farthest] = empty
    modes[empty] = tuple(rows[farthest])
    log.append(f"cluster {empty} repaired with record index {farthest}")


def _total_cost(rows: Sequence[Row], modes: Sequence[Row], assignment: Sequence[int]) -> int:
    return sum(hamming(rows[i], modes[assignment[i]]) for i in range(len(rows)))


def _relocation_pass(
    rows: Sequence[Row], modes: list[Row], assignment: list[int], k: int, trace: list[int]
) -> bool:
    """First-improvement single-point moves (with mode re-update) in row order.

    Ensures the returned model is a local optimum: no reassignment of one
    record, followed by re-deriving the two affected modes, can lower the
    total cost.  Scan order and target order are fixed, so this stays
    deterministic.
    """
    improved = False
    current = _total_cost(rows, modes, assignment)
    for i in range(len(rows)):
        src = assignment[i]
        if sum(1 for a in assignment if a == src) == 1:
            continue  # moving the last member would empty a cluster
        for dst in range(k):
            if dst == src:
                continue
            assignment[i] = dst
            members_src = [rows[t] for t in range(len(rows)) if assignment[t] == src]
            members_dst = [rows[t] for t in range(len(rows)) if assignment[t] == dst]
            trial = list(modes)
            trial[src] = _update_mode(members_src, modes[src])
            trial[dst] = _update_mode(members_dst, modes[dst])
            cost = _total_cost(rows, trial, assignment)
            if cost < current:
                modes[src], modes[dst] = trial[src], trial[dst]
                current = cost
                trace.append(cost)
                improved = True
                break
            assignment[i] = src
    return improved


def kmodes_fit(
    data: ProjectedMatrix | Sequence[Row],
    k: int,
    max_iter: int = DEFAULT_MAX_ITER,
) -> ClusterModel:
    """Cluster categorical rows into k groups; deterministic given row order.

    Batch alternation runs first; a relocation refinement then applies
    single-point moves until none lowers the cost, guaranteeing a local
    optimum under one-record reassignment.
    """
    if isinstance(data, ProjectedMatrix):
        rows: Sequence[Row] = data.rows
        subset_id = data.subset.id
    else:
        rows = [tuple(r) for r in data]
        subset_id = "custom"
    if not rows:
        raise ValueError("cannot cluster empty data")
    modes = cao_init(rows, k)
    assignment: list[int] = [-1] * len(rows)
    trace: list[int] = []
    repairs: list[str] = []
    iterations = 0
    for _ in range(max_iter):
        iterations += 1
        new_assignment = []
        for row in rows:
            dists = [hamming(row, mode) for mode in modes]
            new_assignment.append(dists.index(min(dists)))
        for c in range(k):
            if c not in new_assignment:
                _repair_empty(rows, new_assignment, modes, c, repairs)
        if new_assignment == assignment:
            break
        assignment = new_assignment
        for c in range(k):
            members = [rows[i] for i in range(len(rows)) if assignment[i] == c]
            modes[c] = _update_mode(members, modes[c])
        trace.append(_total_cost(rows, modes, assignment))
    for _ in range(max_iter):
        if not _relocation_pass(rows, modes, assignment, k, trace):
            break
    cost = _total_cost(rows, modes, assignment)
    return ClusterModel(
        k=k,
        modes=tuple(modes),
        assignment=tuple(assignment),
        cost=cost,
        iterations=iterations,
        cost_trace=tuple(trace),
        subset_id=subset_id,
        repairs=tuple(repairs),
    )


@dataclass(frozen=True)
class ScanReport:
    """Descending cluster sizes for every (cluster count, feature subset) cell."""

    grid: dict[tuple[int, str], tuple[int, ...]]
    selection_note: str = (
        f"n={SELECTED_CLUSTER_COUNT} on the full feature set is the selected "
        "cluster count: its sizes are the most evenly distributed"
    )

    def to_csv(self) -> str:
        lines = []
        for n in SCAN_CLUSTER_COUNTS:
            lines.append(f"n={n}," + ",".join(f"C{i}" for i in range(n)))
            for config in SUBSET_ORDER:
                sizes = self.grid[(n, config)]
                lines.append(config + "," + ",".join(str(s) for s in sizes))
        return "\n".join(lines) + "\n"


def cluster_count_scan(matrix: FeatureMatrix, max_iter: int = DEFAULT_MAX_ITER) -> ScanReport:
    """Run the full (n in 3..9) x (All, DMCAP, CAPFP, DMFP) grid."""
    grid: dict[tuple[int, str], tuple[int, ...]] = {}
    for config in SUBSET_ORDER:
        projected = project(matrix, SUBSETS[config])
        for n in SCAN_CLUSTER_COUNTS:
            grid[(n, config)] = kmodes_fit(projected, n, max_iter).sizes
    return ScanReport(grid=grid)


def rand_index(p: Sequence[int], q: Sequence[int]) -> float:
    """Pair-counting agreement between two partitions, in [0, 1]."""
    if len(p) != len(q):
        raise ValueError(f"partition lengths differ: {len(p)} vs {len(q)}")
    n = len(p)
    if n < 2:
        raise ValueError("need at least two elements")
    agree = 0
    for i in range(n):
        for j in range(i + 1, n):
            same_p = p[i] == p[j]
            same_q = q[i] == q[j]
            agree += same_p == same_q
    return agree / (n * (n - 1) / 2)


def adjusted_rand_index(p: Sequence[int], q: Sequence[int]) -> float:
    """Chance-corrected Rand index (Hubert & Arabie), permutation-invariant."""
    if len(p) != len(q):
        raise ValueError(f"partition lengths differ: {len(p)} vs {len(q)}")
    n = len(p)

    def comb2(x: int) -> int:
        return x * (x - 1) // 2

    joint = Counter(zip(p, q))
    sum_ij = sum(comb2(v) for v in joint.values())
    sum_a = sum(comb2(v) for v in Counter(p).values())
    sum_b = sum(comb2(v) for v in Counter(q).values())
    expected = sum_a * sum_b / comb2(n)
    maximum = (sum_a + sum_b) / 2
    if maximum == expected:
        return 1.0 if sum_ij == expected else 0.0
    return (sum_ij - expected) / (maximum - expected)


def compare_partitions(p: Sequence[int], q: Sequence[int]) -> dict[str, float]:
    return {
        "rand_index": rand_index(p, q),
        "adjusted_rand_index": adjusted_rand_index(p, q),
    }


@dataclass(frozen=True)
class ClusterProfile:
    cluster: int
    size: int
    mode: Row
    support: tuple[float, ...]
    members: tuple[str, ...]
    characterization: tuple[str, ...]


def summarize_clusters(
    model: ClusterModel,
    rows: Sequence[Row],
    names: Sequence[str],
    column_names: Sequence[str],
    high: float = 0.8,
    low: float = 0.2,
) -> list[ClusterProfile]:
    """Per-cluster size, mode and per-column support, with one-line cues.

    Columns with support >= ``high`` or <= ``low`` become candidate
    characterizations ("mostly X" / "rarely X").
    """
    profiles = []
    for c in range(model.k):
        idx = [i for i, a in enumerate(model.assignment) if a == c]
        members = [rows[i] for i in idx]
        support = tuple(
            sum(r[j] for r in members) / len(members) for j in range(len(column_names))
        )
        cues = []
        for j, name in enumerate(column_names):
            if support[j] >= high:
                cues.append(f"mostly {name}")
            elif support[j] <= low:
                cues.append(f"rarely {name}")
        profiles.append(
            ClusterProfile(
                cluster=c,
                size=len(idx),
                mode=model.modes[c],
                support=support,
                members=tuple(names[i] for i in idx),
                characterization=tuple(cues),
            )
        )
    return profiles
