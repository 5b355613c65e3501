"""The criterion-agnostic optimizer: local greedy sweeps plus the
hierarchical coarsen-and-repeat driver.

``one_pass`` repeatedly visits every node, takes it out of its community
and re-inserts it where the criterion's gain is highest; candidates are
the communities of its neighbors, its own community, and one empty
community (so communities can split).  ``run`` alternates passes with
graph coarsening until a level stops improving the quality by more than
the configured precision.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .criteria import as_criterion
from .errors import SweepCapExceeded
from .graph import Graph, aggregate, compact_labels

__all__ = ["RunConfig", "Level", "Hierarchy", "one_pass", "run", "detect",
           "compose_flat"]


@dataclass
class RunConfig:
    """Knobs of one detection run.

    ``precision`` is the minimum quality improvement (in the criterion's
    own units) a coarsening level must bring for the loop to continue.
    ``seed`` drives the node visit order, re-shuffled before every sweep;
    two runs with equal config and graph produce identical results.
    """

    criterion: str = "ng"
    alpha: float | None = None
    precision: float = 1e-6
    seed: int = 0
    shuffle_nodes: bool = True
    max_levels: int | None = None
    max_sweeps_per_pass: int | None = None  # default: 10 * n

    def __post_init__(self):
        if self.precision <= 0:
            raise ValueError("precision must be positive")


@dataclass
class Level:
    """One coarsening level: the graph it ran on, the partition the pass
    produced (compact ids) and the quality after the pass."""

    graph: Graph
    labels: np.ndarray
    quality: float
    kappa: int
    sweeps: int
    moves: int


@dataclass
class Hierarchy:
    """Result of a full run: every level plus the composed flat partition
    of the original nodes."""

    levels: list[Level] = field(default_factory=list)
    flat: np.ndarray | None = None
    kappa_final: int = 0
    elapsed: float = 0.0

    @property
    def quality(self):
        return self.levels[-1].quality


class PassResult(NamedTuple):
    labels: np.ndarray
    sweeps: int
    moves: int


def one_pass(g, cfg, st, rng=None):
    """Greedy local optimization on one graph level.

    ``st`` must be a freshly initialized state (all-singleton partition).
    Nodes are visited in (re-)shuffled order; each visit removes the node
    and re-inserts it into the candidate community of highest gain, the
    node's previous community winning ties.  Sweeps repeat until one full
    sweep moves nothing.  Returns a :class:`PassResult`.
    """
    n = g.n
    part = st.part
    free = [n]  # stack of empty community ids; slot n starts unused
    order = np.arange(n)
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    cap = cfg.max_sweeps_per_pass
    if cap is None:
        cap = 10 * max(n, 1)

    sweeps = 0
    total_moves = 0
    improved = n > 0
    while improved:
        if sweeps >= cap:
            raise SweepCapExceeded(
                f"no convergence after {sweeps} sweeps; gain "
                f"implementation for {st.crit.id!r} is suspect")
        improved = False
        if cfg.shuffle_nodes:
            rng.shuffle(order)
        for i in order:
            c_old = int(part[i])
            lo, hi = g.indptr[i], g.indptr[i + 1]
            comms = part[g.nbr[lo:hi]]
            uniq, inv = np.unique(comms, return_inverse=True)
            sums = np.bincount(inv, weights=g.wgt[lo:hi],
                               minlength=uniq.size)
            k = np.searchsorted(uniq, c_old)
            if k < uniq.size and uniq[k] == c_old:
                dw_old = float(sums[k])
                keep = uniq != c_old
                uniq, sums = uniq[keep], sums[keep]
            else:
                dw_old = 0.0

            st.remove(i, c_old, dw_old)

            # Candidates: own community first (so ties keep the node in
            # place), neighboring communities, then one empty community
            # unless the node just vacated its own.
            if st.sz[c_old] > 0:
                spare = free[-1]
                cands = np.empty(uniq.size + 2, dtype=np.int64)
                dws = np.empty(uniq.size + 2)
                cands[-1] = spare
                dws[-1] = 0.0
            else:
                spare = -1
                cands = np.empty(uniq.size + 1, dtype=np.int64)
                dws = np.empty(uniq.size + 1)
            cands[0] = c_old
            dws[0] = dw_old
            cands[1:uniq.size + 1] = uniq
            dws[1:uniq.size + 1] = sums

            gains = st.gain_many(i, cands, dws)
            b = int(np.argmax(gains))
            best = int(cands[b])
            st.insert(i, best, float(dws[b]))

            if best != c_old:
                improved = True
                total_moves += 1
                if best == spare:
                    free.pop()
                if st.sz[c_old] == 0:
                    free.append(c_old)
        sweeps += 1
    return PassResult(part.copy(), sweeps, total_moves)


def run(g0, cfg):
    """Full hierarchical optimization of ``g0`` under ``cfg``.

    The graph must already be pretreated when the criterion requires it
    (see :func:`detect` for the turnkey version).  Levels are recorded
    until a pass moves nothing or the level's quality improvement drops
    to ``cfg.precision`` or below.
    """
    crit = as_criterion(cfg.criterion, cfg.alpha)
    rng = np.random.default_rng(cfg.seed)
    t0 = time.perf_counter()
    h = Hierarchy()
    g = g0
    prev_q = None
    while True:
        st = crit.init(g)
        res = one_pass(g, cfg, st, rng)
        quality = st.total()
        labels, kappa = compact_labels(res.labels)
        h.levels.append(Level(g, labels, quality, kappa,
                              res.sweeps, res.moves))
        done = (
            res.moves == 0
            or (prev_q is not None and quality - prev_q <= cfg.precision)
            or (cfg.max_levels is not None
                and len(h.levels) >= cfg.max_levels)
        )
        if done:
            break
        prev_q = quality
        g = aggregate(g, labels, kappa)
    h.flat = compose_flat(h)
    h.kappa_final = int(h.flat.max()) + 1 if h.flat.size else 0
    h.elapsed = time.perf_counter() - t0
    return h


def detect(g0, cfg):
    """Pretreat (when the criterion needs it) and run.

    Returns the :class:`Hierarchy`; its first level holds the working
    level-0 graph, i.e. the pretreated one for ``wc``/``pd``.
    """
    crit = as_criterion(cfg.criterion, cfg.alpha)
    return run(crit.pretreat(g0), cfg)


def compose_flat(h):
    """Compose per-level partitions into original-node communities."""
    if not h.levels:
        raise ValueError("hierarchy has no levels")
    flat = h.levels[0].labels
    for level in h.levels[1:]:
        flat = level.labels[flat]
    return flat.copy()
