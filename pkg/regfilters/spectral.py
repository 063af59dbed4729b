# -*- coding: utf-8 -*-
"""
Created on Thu Sep 17 2026 at 07:44UTC

Eigendecomposition of symmetric graph matrices, the graph Fourier
transform and related spectrum utilities.

"""

import logging

import numpy as np
import scipy.sparse as sp

from . import descriptors as rf_descriptors
from . import errors as rf_errors
from . import utils as rf_utils
from . import validation as rf_validation

logger = logging.getLogger(__name__)

DENSE_CAP = 5000
SYMMETRY_TOL = 1e-10
SIGN_TOL = 1e-10


class EigenSystem:
    """Orthonormal eigenbasis U and ascending eigenvalues of a matrix.

    Attributes:
        basis (numpy.ndarray n x n): U, the eigenvectors as columns.
        eigenvalues (numpy.ndarray n): Eigenvalues in ascending order.

    """

    basis = rf_descriptors.ImmutableArrayDescriptor('basis')
    eigenvalues = rf_descriptors.ImmutableArrayDescriptor('eigenvalues')

    def __init__(self, basis, eigenvalues):
        self.basis = basis
        self.eigenvalues = eigenvalues

    def __str__(self):
        return '<EigenSystem n={} lambda=[{:.6g}, {:.6g}]>'.format(
            self.n, self.eigenvalues[0], self.eigenvalues[-1])

    @property
    def n(self):
        return len(self.eigenvalues)

    def matrix_function(self, values):
        """Return U diag(values) U^T for one value per eigenvalue."""
        values = np.asarray(values, dtype=np.float64)
        rf_validation.raise_if_dimension_mismatch(
            'spectral values', self.n, values.shape[0])
        return (self.basis * values) @ self.basis.T

    def reconstruct(self):
        """Return U diag(lambda) U^T."""
        return self.matrix_function(self.eigenvalues)

    def orthonormality_defect(self):
        """Frobenius norm of U^T U - I."""
        u = self.basis
        return float(np.linalg.norm(u.T @ u - np.identity(self.n)))


def _fix_signs(basis):
    """Flip columns so the first component with |u| > SIGN_TOL is positive."""
    significant = np.abs(basis) > SIGN_TOL
    first = np.argmax(significant, axis=0)
    pivots = basis[first, np.arange(basis.shape[1])]
    signs = np.where(pivots < 0, -1.0, 1.0)
    return basis * signs


def eigendecompose(m, max_nodes=DENSE_CAP):
    """Dense symmetric eigendecomposition of m.

    Args:
        m (array-like or scipy.sparse matrix): Symmetric matrix.
        max_nodes (int): Largest n for which the dense O(n^3) path is
            taken. None disables the cap.

    Raises:
        AsymmetricMatrixError: m is not symmetric within 1e-10.
        DenseCapExceededError: n > max_nodes.

    """
    rf_validation.raise_if_not_square(m)
    rf_validation.raise_if_over_dense_cap(m.shape[0], max_nodes)
    rf_validation.raise_if_not_symmetric(m, tol=SYMMETRY_TOL)
    dense = rf_utils.to_dense(m)
    # symmetrize exactly so eigh sees the average of both triangles
    dense = 0.5 * (dense + dense.T)
    logger.debug('Eigendecomposition of a %d x %d matrix.', *dense.shape)
    eigenvalues, basis = np.linalg.eigh(dense)
    return EigenSystem(_fix_signs(basis), eigenvalues)


def _raise_if_signal_mismatch(f, e):
    rf_validation.raise_if_dimension_mismatch('signal length', e.n,
                                              f.shape[0])


def gft(f, e):
    """Graph Fourier transform f_hat = U^T f.

    f may be a vector or an n x k matrix of signals.

    """
    f = np.asarray(f, dtype=np.float64)
    _raise_if_signal_mismatch(f, e)
    return e.basis.T @ f


def igft(fhat, e):
    """Inverse graph Fourier transform f = U f_hat."""
    fhat = np.asarray(fhat, dtype=np.float64)
    _raise_if_signal_mismatch(fhat, e)
    return e.basis @ fhat


def smoothness(f, laplacian):
    """Return f^T L f.

    For a Laplacian this equals sum over edges of w_ij (f_i - f_j)^2.

    """
    f = np.asarray(f, dtype=np.float64).ravel()
    rf_validation.raise_if_dimension_mismatch('signal length',
                                              laplacian.shape[0], f.shape[0])
    return float(f @ rf_utils.matmul(laplacian, f))


def max_eigenvalue(m, tol=1e-10, max_iter=10000, seed=0):
    """Estimate the largest eigenvalue of a symmetric PSD matrix.

    Power iteration with Rayleigh quotient estimates, started from the
    ones vector plus a small fixed-seed perturbation. Iteration stops when
    two successive estimates differ by at most tol relative.

    Raises:
        ConvergenceError: no convergence within max_iter iterations.

    """
    rf_validation.raise_if_not_square(m)
    n = m.shape[0]
    if n == 0:
        return 0.0
    if sp.issparse(m):
        m = sp.csr_matrix(m, dtype=np.float64)
    else:
        m = np.asarray(m, dtype=np.float64)
    rng = np.random.default_rng(seed)
    x = np.ones(n) + 1e-3 * rng.standard_normal(n)
    x /= np.linalg.norm(x)
    estimate = None
    for i in range(max_iter):
        y = m @ x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0
        new_estimate = float(x @ y)
        x = y / norm
        if estimate is not None and \
                abs(new_estimate - estimate) <= tol * abs(new_estimate):
            logger.debug('Power iteration converged after %d steps.', i + 1)
            return new_estimate
        estimate = new_estimate
    raise rf_errors.ConvergenceError(
        'Power iteration did not converge within {} iterations.'.format(
            max_iter))
