"""Weighted undirected graphs, node partitions, and community coarsening.

A :class:`Graph` is immutable once built.  Besides the adjacency it carries,
per node, a self-loop weight, a size (how many original nodes were folded
into it by coarsening) and an optional auxiliary constant used by some
criteria.  A frozen :class:`Level0Constants` record travels unchanged
through every coarsening level, so that criterion formulas always refer to
the original graph's node count, edge mass and maximum weight.

Partitions are plain ``int64`` numpy arrays mapping node id to community
id; :data:`SENTINEL` marks a node temporarily removed during a sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import NegativeWeight

#: Community id of a node that is currently removed from the partition.
SENTINEL = -1


@dataclass(frozen=True)
class Level0Constants:
    """Quantities of the original (level-0) graph, frozen across levels.

    Attributes
    ----------
    n0 : int
        Node count of the original graph.
    two_m : float
        Total edge mass ``sum_{i,j} w_ij`` over ordered node pairs,
        self-loops counted once.  Equals the sum of weighted degrees.
    w_max : float
        Maximum edge weight of the original graph (1 for unweighted and
        for edgeless input).  Defines the absent-link mass ``w_max - w``.
    extra : dict
        Criterion-specific constants computed during pretreatment
        (e.g. the squared-mass sum of the profile-difference transform).
    """

    n0: int
    two_m: float
    w_max: float
    extra: dict = field(default_factory=dict)


class Graph:
    """Immutable weighted undirected graph in CSR form.

    Parameters
    ----------
    n : int
        Number of nodes.
    indptr, nbr, wgt : ndarray
        CSR adjacency over off-diagonal neighbors only; symmetric, so every
        edge {i, j} appears in both rows with the same weight.
    loop : ndarray of float
        Self-loop weight per node (0 when absent).  A loop contributes once
        to the node's weighted degree and once to the total mass ``two_m``.
    size : ndarray of int
        Folded node count per node (all ones at level 0).
    aux : ndarray of float
        Additive per-node constant for criteria that need one (sum of
        folded level-0 values); zeros when unused.
    consts : Level0Constants, optional
        Frozen level-0 record.  Computed from this graph when omitted,
        which declares the graph to be level 0.
    """

    __slots__ = ("n", "indptr", "nbr", "wgt", "loop", "size", "aux",
                 "consts", "degrees")

    def __init__(self, n, indptr, nbr, wgt, loop, size, aux, consts=None):
        self.n = int(n)
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.nbr = np.asarray(nbr, dtype=np.int64)
        self.wgt = np.asarray(wgt, dtype=np.float64)
        self.loop = np.asarray(loop, dtype=np.float64)
        self.size = np.asarray(size, dtype=np.int64)
        self.aux = np.asarray(aux, dtype=np.float64)
        rows = np.repeat(np.arange(self.n), np.diff(self.indptr))
        deg = np.bincount(rows, weights=self.wgt,
                          minlength=self.n).astype(np.float64)
        self.degrees = deg + self.loop
        if consts is None:
            two_m = float(self.wgt.sum() + self.loop.sum())
            w_all = np.concatenate([self.wgt, self.loop[self.loop > 0]])
            w_max = float(w_all.max()) if w_all.size else 1.0
            consts = Level0Constants(n0=self.n, two_m=two_m, w_max=w_max)
        self.consts = consts

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, n, edges, *, size=None, aux=None, consts=None):
        """Build a graph from an iterable of ``(i, j, weight)`` triples.

        Duplicate pairs are summed, ``i == j`` goes to the self-loop
        weight, and zero-weight entries are dropped.  Raises
        :class:`NegativeWeight` on a negative weight.
        """
        srcs, dsts, ws = [], [], []
        loop = np.zeros(n, dtype=np.float64)
        for i, j, w in edges:
            w = float(w)
            if w < 0:
                raise NegativeWeight(f"edge ({i}, {j}) has weight {w}")
            if i == j:
                loop[i] += w
            else:
                srcs.append(i)
                dsts.append(j)
                ws.append(w)
        a = sp.coo_matrix(
            (np.asarray(ws + ws, dtype=np.float64),
             (np.asarray(srcs + dsts, dtype=np.int64),
              np.asarray(dsts + srcs, dtype=np.int64))),
            shape=(n, n),
        ).tocsr()
        a.sum_duplicates()
        a.eliminate_zeros()
        return cls(
            n, a.indptr, a.indices, a.data, loop,
            np.ones(n, dtype=np.int64) if size is None else size,
            np.zeros(n, dtype=np.float64) if aux is None else aux,
            consts,
        )

    def replace_weights(self, wgt, loop, *, aux=None, consts=None):
        """Same topology with new edge weights (used by pretreatments)."""
        return Graph(self.n, self.indptr, self.nbr, wgt, loop, self.size,
                     self.aux if aux is None else aux, consts)

    # -- basic accessors ----------------------------------------------

    def degree(self, i):
        """Weighted degree ``d_i``: incident edge weights plus the loop."""
        return float(self.degrees[i])

    def neighbors(self, i):
        """Views of neighbor ids and weights of node ``i`` (no loop)."""
        lo, hi = self.indptr[i], self.indptr[i + 1]
        return self.nbr[lo:hi], self.wgt[lo:hi]

    @property
    def edge_count(self):
        """Number of distinct edges, self-loops included."""
        return int(self.nbr.size // 2 + np.count_nonzero(self.loop))

    @property
    def total_weight(self):
        """Sum of edge weights, each edge and loop counted once."""
        return float(self.wgt.sum() / 2.0 + self.loop.sum())

    def is_level0(self):
        return bool(np.all(self.size == 1))

    def to_scipy(self):
        """Symmetric adjacency as ``scipy.sparse.csr_matrix`` with the
        self-loops on the diagonal."""
        a = sp.csr_matrix((self.wgt, self.nbr, self.indptr),
                          shape=(self.n, self.n))
        if np.any(self.loop):
            a = (a + sp.diags(self.loop)).tocsr()
        return a

    def dense(self):
        """Dense weight matrix (small graphs; oracle evaluation path)."""
        return self.to_scipy().toarray()

    def __repr__(self):
        return (f"Graph(n={self.n}, edges={self.edge_count}, "
                f"two_m={self.consts.two_m:g})")


# -- partitions --------------------------------------------------------


def singleton_labels(n):
    """Partition with every node in its own community."""
    return np.arange(n, dtype=np.int64)


def compact_labels(labels):
    """Renumber community ids densely to ``0..kappa-1``.

    Returns ``(new_labels, kappa)``.  Membership is preserved; ids are
    assigned in ascending order of the old ids.
    """
    labels = np.asarray(labels, dtype=np.int64)
    if np.any(labels == SENTINEL):
        raise ValueError("partition contains removed nodes")
    uniq, inv = np.unique(labels, return_inverse=True)
    return inv.astype(np.int64), int(uniq.size)


def weighted_degree(g, i):
    """Row sum of the weight matrix at ``i`` (loop counted once)."""
    return g.degree(i)


def neighbor_community_weights(g, i, labels):
    """Incident weight of node ``i`` towards each adjacent community.

    Returns a dict ``{community: d_w(i, community)}`` where
    ``d_w(i, C) = sum_{j in C, j != i} w_ij``.  Communities with no
    incident weight are omitted, except the node's own community (when
    ``labels[i]`` is not :data:`SENTINEL`), which is always present.
    """
    nbrs, ws = g.neighbors(i)
    out = {}
    own = int(labels[i])
    if own != SENTINEL:
        out[own] = 0.0
    for j, w in zip(nbrs, ws):
        c = int(labels[j])
        out[c] = out.get(c, 0.0) + float(w)
    return out


# -- coarsening --------------------------------------------------------


def aggregate(g, labels, kappa=None):
    """Fold each community of ``labels`` into one meta-node.

    The meta-edge weight between communities C and D is the total level
    mass between them, ``sum_{i in C, j in D} w_ij``; the meta self-loop
    is the internal ordered-pair mass ``sum_{i,j in C} w_ij`` (twice the
    internal edge weight plus member loops).  Sizes and auxiliary
    constants are summed, and the level-0 constants are carried through
    unchanged, so every criterion evaluates identically on the coarse
    graph.

    ``labels`` must be compact (ids ``0..kappa-1``, all non-empty).
    """
    labels = np.asarray(labels, dtype=np.int64)
    if kappa is None:
        kappa = int(labels.max()) + 1 if labels.size else 0
    proj = sp.csr_matrix(
        (np.ones(g.n), labels, np.arange(g.n + 1)), shape=(g.n, kappa)
    )
    meta = (proj.T @ g.to_scipy() @ proj).tocoo()
    on_diag = meta.row == meta.col
    loop = np.zeros(kappa, dtype=np.float64)
    loop[meta.row[on_diag]] = meta.data[on_diag]
    off = sp.csr_matrix(
        (meta.data[~on_diag], (meta.row[~on_diag], meta.col[~on_diag])),
        shape=(kappa, kappa),
    )
    size = np.bincount(labels, weights=g.size, minlength=kappa)
    aux = np.bincount(labels, weights=g.aux, minlength=kappa)
    return Graph(kappa, off.indptr, off.indices, off.data, loop,
                 size.astype(np.int64), aux, g.consts)
