"""Site observables over walker-occupancy series.

MAXP(k, t) is the largest occupancy any walker has at site k and time t;
a high time mean marks localization (double-bond character). TRP(k, t)
is the mean occupancy after dropping exactly one maximum and one minimum
across walkers; a high time mean marks participation in the delocalized
cloud, and its all-site average orders molecules by stability.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import graphs
from .ctqw import EvolutionSeries


def _stack(series):
    if isinstance(series, EvolutionSeries):
        return series.times, series.matrices
    if len(series) == 0:
        raise ValueError("empty series")
    times = np.array([t for t, _ in series], dtype=float)
    mats = np.stack([np.asarray(B, dtype=float) for _, B in series])
    return times, mats


def _check_node(node, n):
    if not 1 <= node <= n:
        raise ValueError(f"node {node} outside [1, {n}]")


@dataclass(frozen=True, eq=False)
class SiteSeries:
    """MAXP/TRP time series for one site."""

    node: int
    times: np.ndarray
    maxp: np.ndarray
    trp: np.ndarray


@dataclass(frozen=True)
class SiteReport:
    """Time means for one site, tagged with its equivalence class."""

    node: int
    maxp_mean: float
    trp_mean: float
    class_id: str | None = None


def maxp(series, node):
    """MAXP(node, t): columnwise max over walkers, one value per sample."""
    times, mats = _stack(series)
    _check_node(node, mats.shape[2])
    return np.clip(mats[:, :, node - 1].max(axis=1), 0.0, 1.0)


def trp(series, node):
    """TRP(node, t): drop one max and one min across walkers, mean the rest."""
    times, mats = _stack(series)
    n = mats.shape[1]
    if n < 3:
        raise ValueError(f"TRP needs at least 3 walkers, got {n}")
    _check_node(node, mats.shape[2])
    col = mats[:, :, node - 1]
    # clip absorbs 1e-16-scale roundoff; the exact value lies in [0, 1]
    return np.clip((col.sum(axis=1) - col.max(axis=1) - col.min(axis=1)) / (n - 2), 0.0, 1.0)


def _maxp_matrix(mats):
    return np.clip(mats.max(axis=1), 0.0, 1.0)


def _trp_matrix(mats):
    n = mats.shape[1]
    if n < 3:
        raise ValueError(f"TRP needs at least 3 walkers, got {n}")
    return np.clip((mats.sum(axis=1) - mats.max(axis=1) - mats.min(axis=1)) / (n - 2), 0.0, 1.0)


def site_series(series, node):
    """Bundle MAXP and TRP series for one site."""
    times, mats = _stack(series)
    return SiteSeries(
        node=node,
        times=times,
        maxp=maxp(series, node),
        trp=trp(series, node),
    )


def time_means(s, class_id=None):
    """Arithmetic time means of a SiteSeries (the t = 0 sample included)."""
    if len(s.times) == 0:
        raise ValueError("empty series")
    return SiteReport(
        node=s.node,
        maxp_mean=float(s.maxp.mean()),
        trp_mean=float(s.trp.mean()),
        class_id=class_id,
    )


def site_reports(g, series):
    """Time-mean report per site, class-tagged by the smallest class member."""
    classes = graphs.equivalence_classes(g)
    class_of = {m: g.labels[cls[0] - 1] for cls in classes for m in cls}
    times, mats = _stack(series)
    if len(times) == 0:
        raise ValueError("empty series")
    mp = _maxp_matrix(mats).mean(axis=0)
    tp = _trp_matrix(mats).mean(axis=0)
    return tuple(
        SiteReport(node=k, maxp_mean=float(mp[k - 1]), trp_mean=float(tp[k - 1]),
                   class_id=class_of[k])
        for k in range(1, g.node_count + 1)
    )


def detect_period(series, revival_tol=1e-3):
    """Revival time of an occupancy series, or None.

    The series deviation from its t = 0 sample is scanned for a departure
    (first sample above revival_tol) followed by a return below it; the
    return time is the period. A series that never departs is constant at
    this tolerance and reports the first positive sample. Accepts a full
    (t, B) series or a single SiteSeries.
    """
    if isinstance(series, SiteSeries):
        times = series.times
        dev = np.maximum(
            np.abs(series.maxp - series.maxp[0]),
            np.abs(series.trp - series.trp[0]),
        )
    else:
        times, mats = _stack(series)
        dev = np.abs(mats - mats[0]).max(axis=(1, 2))
    if len(times) < 2:
        return None
    above = np.nonzero(dev[1:] > revival_tol)[0]
    if above.size == 0:
        return float(times[1])
    depart = int(above[0]) + 1
    back = np.nonzero(dev[depart:] < revival_tol)[0]
    if back.size == 0:
        return None
    return float(times[depart + int(back[0])])


def overall_mean_trp(series):
    """TRP averaged over every site and sample; the stability score."""
    times, mats = _stack(series)
    return float(_trp_matrix(mats).mean())


@dataclass(frozen=True)
class StabilityEntry:
    molecule: str
    mean_trp: float
    t_max: float
    dt: float


def stability_entry(g, series, t_max, dt):
    """Stability score for one molecule's sampled series."""
    return StabilityEntry(molecule=g.name, mean_trp=overall_mean_trp(series),
                          t_max=float(t_max), dt=float(dt))


@dataclass(frozen=True)
class StabilityRow:
    molecule: str
    mean_trp: float
    rank: int
    tied_with_previous: bool


@dataclass(frozen=True)
class StabilityReport:
    rows: tuple

    def order_string(self):
        parts = [self.rows[0].molecule]
        for row in self.rows[1:]:
            parts.append(" ~ " if row.tied_with_previous else " > ")
            parts.append(row.molecule)
        return "".join(parts)


def stability_order(entries, tie_band=0.02):
    """Sort molecules by mean TRP descending; near-ties share a rank.

    Adjacent entries whose relative gap is below tie_band are flagged as
    tied. All entries must share one sampling grid.
    """
    entries = list(entries)
    if len(entries) < 2:
        raise ValueError("stability ordering needs at least 2 molecules")
    grids = {(e.t_max, e.dt) for e in entries}
    if len(grids) != 1:
        raise ValueError(f"mismatched sampling grids: {sorted(grids)}")
    order = sorted(range(len(entries)), key=lambda i: (-entries[i].mean_trp, i))
    rows = []
    rank = 0
    prev = None
    for i in order:
        e = entries[i]
        tied = prev is not None and (prev - e.mean_trp) <= tie_band * max(prev, 1e-300)
        if not tied:
            rank += 1
        rows.append(StabilityRow(molecule=e.molecule, mean_trp=e.mean_trp,
                                 rank=rank, tied_with_previous=tied))
        prev = e.mean_trp
    return StabilityReport(rows=tuple(rows))


@dataclass(frozen=True)
class ModePattern:
    """One candidate delocalization pattern: the sites that carry a
    localized double bond under it."""

    mode_id: str
    endpoints: frozenset
    description: str


MODE_CATALOG = {
    "benzene": (
        ModePattern("fully-delocalized", frozenset(),
                    "single aromatic ring, no fixed double bonds"),
    ),
    "naphthalene": (
        ModePattern("fully-delocalized", frozenset(),
                    "delocalization spread over the whole perimeter"),
        ModePattern("perimeter-localized", frozenset({1, 2, 3, 5, 6, 7, 8, 10}),
                    "double bonds fixed at (2,3), (5,6), (7,8), (1,10); central bond single"),
    ),
    "anthracene": (
        ModePattern("central-localized-a", frozenset({4, 5, 12, 13}),
                    "double bonds at (4,5) and (12,13) flanking the middle ring"),
        ModePattern("outer-localized", frozenset({1, 2, 3, 7, 8, 9, 10, 14}),
                    "double bonds on the strong outer bonds (2,3), (7,8), (9,10), (1,14)"),
        ModePattern("central-localized-b", frozenset({5, 6, 11, 12}),
                    "double bonds at (5,6) and (11,12) flanking the middle ring"),
    ),
    "phenanthrene": (
        ModePattern("fully-delocalized", frozenset(),
                    "delocalization spread over all three rings"),
        ModePattern("outer-localized", frozenset({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13, 14}),
                    "delocalization confined to the two outer rings"),
        ModePattern("bridged-biphenyl", frozenset({11, 12}),
                    "biphenyl-like outer rings joined through the localized (11,12) bond"),
    ),
}


@dataclass(frozen=True)
class ModeReport:
    molecule: str
    high: tuple
    low: tuple
    matched: tuple
    method: str
    threshold: float


def _two_means_threshold(values):
    """Best 1-D two-cluster split by within-cluster sum of squares.

    Returns the midpoint threshold, or None when the values are all equal
    (no meaningful split).
    """
    v = np.sort(np.asarray(values, dtype=float))
    if v[-1] - v[0] <= 1e-9 * max(abs(v[-1]), abs(v[0]), 1e-300):
        return None
    best_ss = None
    best_thr = None
    for k in range(1, v.size):
        lo, hi = v[:k], v[k:]
        ss = float(((lo - lo.mean()) ** 2).sum() + ((hi - hi.mean()) ** 2).sum())
        if best_ss is None or ss < best_ss:
            best_ss = ss
            best_thr = (v[k - 1] + v[k]) / 2.0
    return best_thr


def _jaccard(a, b):
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def classify_modes(reports, g):
    """Split sites into high/low maxp_mean buckets and match the high set
    against the molecule's candidate patterns by endpoint overlap.

    The split is a two-cluster partition of the means; when all means
    agree the molecule-wide median is used instead (every site lands in
    the low bucket). Ties between equally matching patterns keep catalog
    order. Molecules without catalog patterns get an empty match.
    """
    by_node = {r.node: r.maxp_mean for r in reports}
    if sorted(by_node) != list(range(1, g.node_count + 1)):
        raise ValueError("reports must cover every site exactly once")
    values = np.array([by_node[k] for k in range(1, g.node_count + 1)])
    thr = _two_means_threshold(values)
    if thr is None:
        # all means equal at tolerance: single bucket, nothing above the median
        thr = float(np.median(values))
        cut = thr + 1e-9 * max(abs(values).max(), 1e-300)
        method = "median"
    else:
        cut = thr
        method = "two-means"
    high = frozenset(k for k in range(1, g.node_count + 1) if values[k - 1] > cut)
    low = tuple(sorted(set(range(1, g.node_count + 1)) - high))
    patterns = MODE_CATALOG.get(g.name, ())
    matched = ()
    if patterns:
        scores = [_jaccard(high, p.endpoints) for p in patterns]
        best = max(scores)
        matched = tuple(p.mode_id for p, s in zip(patterns, scores)
                        if abs(s - best) < 1e-12)
    return ModeReport(
        molecule=g.name,
        high=tuple(sorted(high)),
        low=low,
        matched=matched,
        method=method,
        threshold=float(thr),
    )
