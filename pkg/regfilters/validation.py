# -*- coding: utf-8 -*-
"""
Created on Mon Sep 14 2026 at 10:05UTC

Validation helpers for matrices, vectors and signals.

"""
import numpy as np
import scipy.sparse as sp

from . import errors as rf_errors


# SHAPE VALIDATION

def is_square(m):
    """Check if m has shape (n, n)."""
    return len(m.shape) == 2 and m.shape[0] == m.shape[1]


def raise_if_not_square(m):
    if not is_square(m):
        raise rf_errors.NotSquareMatrixError(
            'Matrix must be square, got shape {}.'.format(m.shape))


def raise_if_dimension_mismatch(what, expected, actual):
    """Raise DimensionMismatchError if expected != actual."""
    if expected != actual:
        raise rf_errors.DimensionMismatchError(what, expected, actual)


# SYMMETRY VALIDATION

def symmetry_defect(m):
    """Return max |m_ij - m_ji| for a dense or sparse square matrix."""
    if sp.issparse(m):
        diff = (m - m.T).tocsr()
        if diff.nnz == 0:
            return 0.0
        return float(np.max(np.abs(diff.data)))
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.max(np.abs(m - m.T)))


def raise_if_not_symmetric(m, tol=1e-10):
    raise_if_not_square(m)
    defect = symmetry_defect(m)
    if defect > tol:
        raise rf_errors.AsymmetricMatrixError(
            'Matrix is not symmetric: max |m_ij - m_ji| = {:.3e} > {:.1e}.'
            .format(defect, tol))


# SIZE VALIDATION

def raise_if_over_dense_cap(n, cap):
    """Raise DenseCapExceededError if an n x n dense path exceeds cap."""
    if cap is not None and n > cap:
        raise rf_errors.DenseCapExceededError(n, cap)


# VALUE VALIDATION

def raise_if_not_finite(array, what):
    """Raise NonFiniteError if array holds NaN or infinite values."""
    data = array.data if sp.issparse(array) else np.asarray(array)
    if not np.all(np.isfinite(data)):
        raise rf_errors.NonFiniteError(
            '{} contains non-finite values.'.format(what))
