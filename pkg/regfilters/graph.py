# -*- coding: utf-8 -*-
"""
Created on Tue Sep 15 2026 at 09:21UTC

Graph represents an undirected, non-negatively weighted graph together
with the Laplacian constructions the filters are built from.

All matrices returned by this module are canonical float64 CSR matrices
(sorted column indices, no stored zeros); see utils.as_csr().

"""

import logging

import numpy as np
import scipy.sparse as sp

from . import descriptors as rf_descriptors
from . import errors as rf_errors
from . import utils as rf_utils
from . import validation as rf_validation

logger = logging.getLogger(__name__)


class Graph:
    """Undirected graph with symmetric non-negative weight matrix W.

    Graph instances are immutable: the adjacency buffers are read-only and
    the attributes can only be set once.

    Args:
        adjacency (array-like or scipy.sparse matrix): Symmetric weight
            matrix W with non-negative entries.
        name (str): Optional human readable name.

    Attributes:
        n (int): Number of nodes.
        adjacency (scipy.sparse.csr_matrix): W, stored symmetrically.
        name (str): Human readable name.

    """

    n = rf_descriptors.ImmutableDescriptor('n')
    adjacency = rf_descriptors.ImmutableArrayDescriptor('adjacency')

    def __init__(self, adjacency, name=None):
        w = rf_utils.as_csr(adjacency)
        rf_validation.raise_if_not_square(w)
        rf_validation.raise_if_not_finite(w, 'adjacency')
        if w.nnz and np.min(w.data) < 0:
            raise ValueError('Edge weights must be non-negative.')
        rf_validation.raise_if_not_symmetric(w, tol=0.0)
        self.n = w.shape[0]
        self.adjacency = w
        self.name = name or 'graph'

    @classmethod
    def from_edges(cls, n, src, dst, weight=None, name=None):
        """Build a graph from an edge list, symmetrizing it.

        Both orientations of every edge are stored. If an edge occurs
        more than once (in any orientation) the maximum weight is kept,
        which makes the result independent of the edge order. Self-loops
        in the edge list are skipped.

        Args:
            n (int): Number of nodes.
            src, dst (sequence of int): 0-based end points.
            weight (sequence of float): Edge weights. Defaults to ones.

        """
        src = np.asarray(src, dtype=np.int64).ravel()
        dst = np.asarray(dst, dtype=np.int64).ravel()
        if weight is None:
            weight = np.ones(len(src))
        weight = np.asarray(weight, dtype=np.float64).ravel()
        rf_validation.raise_if_dimension_mismatch(
            'edge list length', len(src), len(dst))
        rf_validation.raise_if_dimension_mismatch(
            'edge weight length', len(src), len(weight))
        if len(src) and (min(src.min(), dst.min()) < 0 or
                max(src.max(), dst.max()) >= n):
            raise IndexError('Edge end point out of range [0, {}).'.format(n))
        loops = src == dst
        if np.any(loops):
            logger.warning('Skipping %d self-loop(s) in edge list.',
                           int(loops.sum()))
            src, dst, weight = src[~loops], dst[~loops], weight[~loops]

        rows = np.concatenate([src, dst])
        cols = np.concatenate([dst, src])
        vals = np.concatenate([weight, weight])
        order = np.lexsort((cols, rows))
        rows, cols, vals = rows[order], cols[order], vals[order]
        if len(rows):
            starts = np.flatnonzero(np.r_[True, (rows[1:] != rows[:-1]) |
                                          (cols[1:] != cols[:-1])])
            vals = np.maximum.reduceat(vals, starts)
            rows, cols = rows[starts], cols[starts]
        w = sp.csr_matrix((vals, (rows, cols)), shape=(n, n))
        return cls(w, name=name)

    def __str__(self):
        return '<Graph {} n={} edges={}>'.format(
            self.name, self.n, self.n_edges)

    def __eq__(self, other):
        if not isinstance(other, Graph) or other.n != self.n:
            return False
        a, b = self.adjacency, other.adjacency
        return (np.array_equal(a.indptr, b.indptr) and
                np.array_equal(a.indices, b.indices) and
                np.array_equal(a.data, b.data))

    __hash__ = None

    @property
    def n_edges(self):
        """Number of undirected edges (each stored pair counted once)."""
        w = self.adjacency
        return int((w.nnz + w.diagonal().astype(bool).sum()) // 2)

    def edges(self):
        """Return (src, dst, weight) arrays with src <= dst, sorted."""
        upper = sp.triu(self.adjacency).tocoo()
        order = np.lexsort((upper.col, upper.row))
        return upper.row[order], upper.col[order], upper.data[order]

    def with_self_loops(self):
        """Return a new Graph with W <- W + I."""
        w = self.adjacency + sp.identity(self.n, format='csr')
        return Graph(w, name=self.name)


def degree_vector(g):
    """Return the degree vector d_i = sum_j w_ij of graph g."""
    return np.asarray(g.adjacency.sum(axis=1), dtype=np.float64).ravel()


def laplacian(g):
    """Return the combinatorial Laplacian L = D - W."""
    d = degree_vector(g)
    return rf_utils.as_csr(sp.diags(d) - g.adjacency)


def _inverse_sqrt_degrees(d):
    """D^{-1/2} entries, with 0 for zero-degree nodes."""
    d_inv_sqrt = np.zeros_like(d)
    positive = d > 0
    d_inv_sqrt[positive] = 1.0 / np.sqrt(d[positive])
    return d_inv_sqrt


def _symmetric_normalization(w, d):
    """Return I - D^{-1/2} W D^{-1/2}.

    Each stored weight is scaled by (d_i^{-1/2} * d_j^{-1/2}); the product
    is commutative so the result is exactly symmetric.

    """
    n = w.shape[0]
    d_inv_sqrt = _inverse_sqrt_degrees(d)
    coo = w.tocoo()
    scaled = coo.data * (d_inv_sqrt[coo.row] * d_inv_sqrt[coo.col])
    normalized = sp.csr_matrix((scaled, (coo.row, coo.col)), shape=(n, n))
    return rf_utils.as_csr(sp.identity(n, format='csr') - normalized)


def normalized_laplacian(g):
    """Return L~ = I - D^{-1/2} W D^{-1/2}.

    Zero-degree nodes use D_ii^{-1/2} := 0, which gives L~_ii = 1 there.

    """
    return _symmetric_normalization(g.adjacency, degree_vector(g))


def renormalize(g):
    """Return the normalized Laplacian of the self-loop augmented graph.

    W <- W + I and degrees are recomputed before normalization (the
    renormalization trick). The spectrum shrinks from [0, 2] towards
    [0, 1.5].

    """
    looped = g.with_self_loops()
    return _symmetric_normalization(looped.adjacency, degree_vector(looped))


def row_normalize_features(x):
    """Divide every nonzero row of x by its L1 norm.

    All-zero rows are left unchanged. A new array is returned.

    """
    x = np.array(x, dtype=np.float64, copy=True)
    if x.ndim != 2:
        raise rf_errors.DimensionMismatchError('feature matrix rank', 2,
                                               x.ndim)
    norms = np.abs(x).sum(axis=1)
    nonzero = norms > 0
    x[nonzero] /= norms[nonzero][:, np.newaxis]
    return x
