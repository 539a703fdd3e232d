"""Discrete-time quantum walks.

Two families live here. The line-walk primitives (line_step,
directed_line_step) evolve a two-level coin on the integer line; the
directed variant moves only one coin component per step. The graph walk
(directed_walk_state, directed_step, rank_nodes) runs a single walker
over a molecule graph and ranks sites by how much probability flows
through them: sites accumulating the least are the most reactive.

Graph walk construction: node x of degree d owns d arc slots, one per
incident edge in ascending-neighbor order (the fixed cyclic arc order).
Amplitudes live on (slot, component) with components {stay, move}. Each
step applies the per-node degree coin at every slot, then routes the
stay component one position around its node's slot ring and the move
component across its edge to the partner slot on the far node. Both
routes are permutations, so a step is exactly unitary and only the move
component traverses the graph.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import graphs
from .errors import ComputationError


@dataclass(frozen=True, eq=False)
class LineWalkState:
    """Walker on the integer line; index i holds position origin + i."""

    origin: int
    up: np.ndarray
    down: np.ndarray

    def __post_init__(self):
        up = np.asarray(self.up, dtype=complex)
        down = np.asarray(self.down, dtype=complex)
        if up.ndim != 1 or up.shape != down.shape:
            raise ValueError("up and down must be 1-D arrays of equal length")
        object.__setattr__(self, "up", up)
        object.__setattr__(self, "down", down)
        norm = float(np.sum(np.abs(up) ** 2 + np.abs(down) ** 2))
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state norm must be 1 within 1e-12, got {norm!r}")

    def positions(self):
        return np.arange(self.up.size) + self.origin

    def probabilities(self):
        """(positions, probability per position)."""
        return self.positions(), np.abs(self.up) ** 2 + np.abs(self.down) ** 2


def localized_line_state(position=0, coin="up"):
    """Unit amplitude at one position in one coin component."""
    if coin not in ("up", "down"):
        raise ValueError(f"coin must be 'up' or 'down', got {coin!r}")
    one = np.ones(1, dtype=complex)
    zero = np.zeros(1, dtype=complex)
    if coin == "up":
        return LineWalkState(position, one, zero)
    return LineWalkState(position, zero, one)


def angle_coin(theta):
    """Unitary 2x2 coin [[cos t, -i sin t], [-i sin t, cos t]]."""
    c = math.cos(theta)
    s = -1j * math.sin(theta)
    return np.array([[c, s], [s, c]])


def _apply_angle_coin(state, theta):
    c = math.cos(theta)
    s = -1j * math.sin(theta)
    return c * state.up + s * state.down, s * state.up + c * state.down


def line_step(state, theta):
    """One coin-then-shift step: up moves to x - 1, down moves to x + 1."""
    u, d = _apply_angle_coin(state, theta)
    n = u.size
    up_new = np.zeros(n + 2, dtype=complex)
    down_new = np.zeros(n + 2, dtype=complex)
    up_new[:n] = u
    down_new[2:] = d
    return LineWalkState(state.origin - 1, up_new, down_new)


def directed_line_step(state, theta, sign="plus", mover="up"):
    """One directed step: only `mover` shifts (by +1 for plus, -1 for minus),
    the other coin component stays in place."""
    if sign not in ("plus", "minus"):
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    if mover not in ("up", "down"):
        raise ValueError(f"mover must be 'up' or 'down', got {mover!r}")
    u, d = _apply_angle_coin(state, theta)
    shift = 1 if sign == "plus" else -1
    n = u.size
    new_origin = state.origin + min(shift, 0)
    off = state.origin - new_origin
    up_new = np.zeros(n + 1, dtype=complex)
    down_new = np.zeros(n + 1, dtype=complex)
    if mover == "up":
        up_new[off + shift:off + shift + n] = u
        down_new[off:off + n] = d
    else:
        down_new[off + shift:off + shift + n] = d
        up_new[off:off + n] = u
    return LineWalkState(new_origin, up_new, down_new)


def degree_coin(g, node, kind="unweighted"):
    """Real orthogonal 2x2 coin for one node, alpha = degree / 2.

    kind selects the degree notion: edge count (default) or summed edge
    weight.
    """
    if not 1 <= node <= g.node_count:
        raise ValueError(f"node {node} outside [1, {g.node_count}]")
    if kind == "unweighted":
        d = float(graphs.degrees(g)[node - 1])
    elif kind == "weighted":
        d = float(graphs.weighted_degrees(g)[node - 1])
    else:
        raise ValueError(f"kind must be 'unweighted' or 'weighted', got {kind!r}")
    if d <= 0:
        raise ValueError(f"node {node} is isolated")
    alpha = d / 2.0
    a = math.sqrt(1.0 / (alpha + 1.0))
    b = math.sqrt(alpha / (alpha + 1.0))
    return np.array([[a, b], [b, -a]])


class _ArcLayout:
    """Slot bookkeeping for the directed graph walk (see module docstring)."""

    def __init__(self, g, coin="unweighted"):
        if coin not in ("unweighted", "weighted"):
            raise ValueError(f"coin must be 'unweighted' or 'weighted', got {coin!r}")
        n = g.node_count
        A = graphs.adjacency(g)
        nbrs = [np.nonzero(A[x])[0] for x in range(n)]
        deg = np.array([nb.size for nb in nbrs])
        if (deg == 0).any():
            raise ValueError("graph has an isolated node")
        first = np.concatenate(([0], np.cumsum(deg)))[:n]
        nsub = int(deg.sum())
        node_of = np.repeat(np.arange(n), deg)
        cyc_next = np.empty(nsub, dtype=np.intp)
        cross = np.empty(nsub, dtype=np.intp)
        for x in range(n):
            base = first[x]
            for i, y in enumerate(nbrs[x]):
                cyc_next[base + i] = base + (i + 1) % deg[x]
                # partner slot: position of x among y's ascending neighbors
                j = int(np.searchsorted(nbrs[y], x))
                cross[base + i] = first[y] + j
        if coin == "weighted":
            alpha = graphs.weighted_degrees(g) / 2.0
        else:
            alpha = deg / 2.0
        self.n = n
        self.nsub = nsub
        self.node_of = node_of
        self.first = first
        self.deg = deg
        self.nbrs = nbrs
        self.cyc_next = cyc_next
        self.cross = cross
        self.a = np.sqrt(1.0 / (alpha + 1.0))[node_of]
        self.b = np.sqrt(alpha / (alpha + 1.0))[node_of]


@dataclass(frozen=True, eq=False)
class DirectedWalkState:
    """Single-walker state on a molecule graph: one stay and one move
    amplitude per (node, arc slot) pair."""

    graph: graphs.MoleculeGraph
    coin: str
    stay: np.ndarray
    move: np.ndarray
    layout: _ArcLayout = field(repr=False)


def arc_order(g):
    """Cyclic incident-edge order used at each node: ascending neighbor index.

    Returns {node: tuple of neighbor nodes}, 1-based.
    """
    lay = _ArcLayout(g)
    return {x + 1: tuple(int(y) + 1 for y in lay.nbrs[x]) for x in range(lay.n)}


def directed_walk_state(g, start=1, coin="unweighted"):
    """Initial state: the start node's slots share the stay amplitude equally."""
    lay = _ArcLayout(g, coin)
    if not 1 <= start <= lay.n:
        raise ValueError(f"start node {start} outside [1, {lay.n}]")
    stay = np.zeros(lay.nsub, dtype=complex)
    move = np.zeros(lay.nsub, dtype=complex)
    base = lay.first[start - 1]
    d = lay.deg[start - 1]
    stay[base:base + d] = 1.0 / math.sqrt(d)
    return DirectedWalkState(g, coin, stay, move, lay)


def directed_step(state):
    """One coin-then-route step; exactly norm-preserving."""
    lay = state.layout
    c = lay.a * state.stay + lay.b * state.move
    m = lay.b * state.stay - lay.a * state.move
    stay_new = np.empty_like(c)
    move_new = np.empty_like(m)
    stay_new[lay.cyc_next] = c
    move_new[lay.cross] = m
    return DirectedWalkState(state.graph, state.coin, stay_new, move_new, lay)


def node_probabilities(state):
    """Occupancy per node (both coin components), index 0 = node 1."""
    p = np.abs(state.stay) ** 2 + np.abs(state.move) ** 2
    return np.bincount(state.layout.node_of, weights=p, minlength=state.layout.n)


@dataclass(frozen=True, eq=False)
class NodeRanking:
    """Per-node reactivity ranking. Scores are the accumulated occupancy
    pooled over each stored equivalence class, so equally ranked nodes
    carry equal scores. Rank 1 = least accumulated information = most
    reactive."""

    molecule: str
    nodes: tuple
    labels: tuple
    scores: tuple
    ranks: tuple
    start: int
    steps: int
    coin: str


def _dense_ranks(values, rel_tol=1e-6):
    """Ascending dense ranks with adjacent values merged inside rel_tol."""
    order = np.argsort(values, kind="stable")
    ranks = np.zeros(len(values), dtype=int)
    rank = 0
    prev = None
    for idx in order:
        v = values[idx]
        if prev is None or abs(v - prev) > rel_tol * max(abs(v), abs(prev)):
            rank += 1
        ranks[idx] = rank
        prev = v
    return ranks


def rank_nodes(g, steps=None, start=1, coin="unweighted", tie_tol=1e-6):
    """Rank sites by accumulated walker occupancy over a directed graph walk.

    The walker starts localized on `start` and runs for `steps` steps
    (default 10 * N^2). Node occupancies are summed over all steps,
    averaged within each stored equivalence class, and ranked ascending:
    rank 1 marks the most reactive class. Rankings are stable under
    moving `start` within its own symmetry class; starts from different
    classes can produce different orders, so comparisons should fix one
    start convention (the default start is node 1).
    """
    n = g.node_count
    if steps is None:
        steps = 10 * n * n
    if not isinstance(steps, (int, np.integer)) or steps < 1:
        raise ValueError(f"steps must be a positive integer, got {steps!r}")
    state = directed_walk_state(g, start=start, coin=coin)
    lay = state.layout
    stay, move = state.stay, state.move
    occ = np.zeros(n)
    for _ in range(int(steps)):
        c = lay.a * stay + lay.b * move
        m = lay.b * stay - lay.a * move
        stay = np.empty_like(c)
        move = np.empty_like(m)
        stay[lay.cyc_next] = c
        move[lay.cross] = m
        p = np.abs(stay) ** 2 + np.abs(move) ** 2
        occ += np.bincount(lay.node_of, weights=p, minlength=n)
    if abs(float(p.sum()) - 1.0) > 1e-9:
        raise ComputationError(f"walk norm drifted to {p.sum()!r}; refusing to rank")
    classes = graphs.equivalence_classes(g)
    class_scores = np.array([occ[[m - 1 for m in cls]].mean() for cls in classes])
    class_ranks = _dense_ranks(class_scores, rel_tol=tie_tol)
    scores = np.zeros(n)
    ranks = np.zeros(n, dtype=int)
    for cls, cs, cr in zip(classes, class_scores, class_ranks):
        for member in cls:
            scores[member - 1] = cs
            ranks[member - 1] = cr
    return NodeRanking(
        molecule=g.name,
        nodes=tuple(range(1, n + 1)),
        labels=g.labels,
        scores=tuple(float(s) for s in scores),
        ranks=tuple(int(r) for r in ranks),
        start=int(start),
        steps=int(steps),
        coin=coin,
    )
