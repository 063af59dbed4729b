# -*- coding: utf-8 -*-
"""
Created on Mon Sep 21 2026 at 07:52UTC

Construction of n x n filter matrices F from FilterSpecs.

Exact filters go through the eigendecomposition, F = U g(Lambda) U^T, and
serve as reference for the approximate constructions: truncated Taylor
series (diffusion, GraphHeat, cosine), Chebyshev recurrences (ChebyNet,
p-step random walk), linear solves (regularized Laplacian) and direct
sparse powers (GCN, IGCN, p-step random walk).

Filters built from a few sparse multiplications stay sparse, exact and
inverse based filters are dense.

"""

import enum
import logging
import math

import numpy as np
import numpy.polynomial as np_poly
import scipy.sparse as sp
import scipy.sparse.linalg as sp_linalg

from . import descriptors as rf_descriptors
from . import errors as rf_errors
from . import graph as rf_graph
from . import response as rf_response
from . import spectral as rf_spectral
from . import utils as rf_utils
from . import validation as rf_validation

logger = logging.getLogger(__name__)

FAMILY = rf_response.FilterFamily
SOLVE_RESIDUAL_TOL = 1e-10
PSD_TOL = 1e-8


class Construction(enum.Enum):
    EXACT = 'exact'
    TAYLOR = 'taylor'
    CHEBYSHEV = 'chebyshev'
    LINEAR_SOLVE = 'linear_solve'
    DIRECT = 'direct'
    MONOMIAL = 'monomial'
    IDENTITY = 'identity'


class FilterMatrix:
    """Filter matrix F with the spec and the way it was constructed.

    Attributes:
        matrix (numpy.ndarray or scipy.sparse.csr_matrix): F.
        spec (FilterSpec or None): The spec F realizes (None for the
            identity filter).
        construction (Construction): How F was computed.
        order (int or None): Truncation or polynomial order if any.

    """

    matrix = rf_descriptors.ImmutableArrayDescriptor('matrix')

    def __init__(self, matrix, spec, construction, order=None):
        rf_validation.raise_if_not_square(matrix)
        self.matrix = rf_utils.as_csr(matrix) if sp.issparse(matrix) \
            else np.array(matrix, dtype=np.float64)
        self.spec = spec
        self.construction = construction
        self.order = order

    def __str__(self):
        return '<FilterMatrix {} {}{} n={}>'.format(
            self.spec.label if self.spec else 'identity',
            self.construction.value,
            '' if self.order is None else '(K={})'.format(self.order),
            self.n)

    @property
    def n(self):
        return self.matrix.shape[0]

    @property
    def is_sparse(self):
        return sp.issparse(self.matrix)

    def to_dense(self):
        return rf_utils.to_dense(self.matrix)


def _identity(n):
    return sp.identity(n, dtype=np.float64, format='csr')


def _laplacian_csr(laplacian):
    rf_validation.raise_if_not_square(laplacian)
    return rf_utils.as_csr(laplacian)


def _scaled(matrix, theta):
    return rf_utils.as_csr(theta * matrix)


def identity_filter(n):
    """F = I, the filter of a graph-free model."""
    return FilterMatrix(_identity(n), None, Construction.IDENTITY)


# EXACT

def exact_filter(spec, e):
    """F = sum_i g(lambda_i) u_i u_i^T through the eigensystem e.

    Raises:
        PoleError: g is not finite at some eigenvalue.

    """
    g = np.asarray(rf_response.frequency_response(spec, e.eigenvalues))
    bad = np.flatnonzero(~np.isfinite(g))
    if bad.size:
        raise rf_errors.PoleError(spec.label, float(e.eigenvalues[bad[0]]))
    return FilterMatrix(e.matrix_function(g), spec, Construction.EXACT)


# REGULARIZATION FAMILIES

def regularized_laplacian_filter(laplacian, s, theta=1.0, method='dense',
        spec=None):
    """F = theta (I + s L~)^-1 by solving (I + s L~) F = I.

    Args:
        method (str): 'dense' (LAPACK solve) or 'sparse' (sparse LU
            factorization solved for all identity columns).

    Raises:
        ConvergenceError: the residual max |(I + s L~) F - I| > 1e-10.

    """
    if not s > 0:
        raise rf_errors.InvalidFilterSpecError('s must be > 0.')
    lap = _laplacian_csr(laplacian)
    n = lap.shape[0]
    system = rf_utils.as_csr(_identity(n) + s * lap)
    identity = np.identity(n)
    if method == 'dense':
        solution = np.linalg.solve(system.toarray(), identity)
    elif method == 'sparse':
        solution = sp_linalg.splu(system.tocsc()).solve(identity)
    else:
        raise ValueError('Unknown solve method {!r}.'.format(method))
    residual = np.max(np.abs(system @ solution - identity)) if n else 0.0
    if residual > SOLVE_RESIDUAL_TOL:
        raise rf_errors.ConvergenceError(
            'Linear solve residual {:.3e} exceeds {:.0e}.'.format(
                residual, SOLVE_RESIDUAL_TOL))
    spec = spec or rf_response.FilterSpec(
        FAMILY.REGULARIZED_LAPLACIAN, s=s, theta=[theta])
    return FilterMatrix(theta * solution, spec, Construction.LINEAR_SOLVE)


def _taylor_exp(lap, s, order):
    """sum_{k=0..order} (-s)^k / k! L~^k by iterated sparse products."""
    term = _identity(lap.shape[0])
    total = term
    for k in range(1, order + 1):
        term = (term @ lap) * (-s / k)
        total = total + term
    return rf_utils.as_csr(total)


def diffusion_filter_taylor(laplacian, s, K, theta=1.0, spec=None):
    """F = theta sum_{k=0..K} (-1)^k s^k / k! L~^k, approximating
    theta exp(-s L~)."""
    lap = _laplacian_csr(laplacian)
    spec = spec or rf_response.FilterSpec(FAMILY.DIFFUSION, s=s, K=K,
                                          theta=[theta])
    return FilterMatrix(_scaled(_taylor_exp(lap, s, K), theta), spec,
                        Construction.TAYLOR, order=K)


def _power(matrix, p):
    result = _identity(matrix.shape[0])
    for _ in range(p):
        result = result @ matrix
    return rf_utils.as_csr(result)


def random_walk_chebyshev_coefficients(a, p, lambda_max):
    """Chebyshev coefficients of (a - lambda)^p in x = 2 lambda/lambda_max - 1.

    Substituting lambda = (x + 1) lambda_max / 2 gives a degree p
    polynomial in x, converted to the Chebyshev basis.

    """
    half = lambda_max / 2.0
    in_x = np_poly.Polynomial([a - half, -half]) ** p
    return in_x.convert(kind=np_poly.Chebyshev).coef


def chebyshev_series(scaled_laplacian, coefficients):
    """sum_k c_k T_k(L_s) with the recurrence T_k = 2 L_s T_k-1 - T_k-2."""
    ls = _laplacian_csr(scaled_laplacian)
    coefficients = [float(c) for c in coefficients]
    t_prev = _identity(ls.shape[0])
    total = coefficients[0] * t_prev
    if len(coefficients) > 1:
        t_curr = ls
        total = total + coefficients[1] * t_curr
        for c in coefficients[2:]:
            t_prev, t_curr = t_curr, 2.0 * (ls @ t_curr) - t_prev
            total = total + c * t_curr
    return rf_utils.as_csr(total)


def p_step_rw_filter(laplacian, a, p, construction='direct', theta=1.0,
        lambda_max=2.0, spec=None):
    """F = theta (a I - L~)^p.

    Args:
        construction (str): 'direct' (repeated sparse multiplication) or
            'chebyshev' (Chebyshev expansion of (a - lambda)^p evaluated
            on the rescaled Laplacian).
        lambda_max (float): Spectrum bound for the Chebyshev rescaling.

    """
    if int(p) != p or p < 1:
        raise rf_errors.InvalidFilterSpecError('p must be an integer >= 1.')
    p = int(p)
    lap = _laplacian_csr(laplacian)
    spec = spec or rf_response.FilterSpec(FAMILY.P_STEP_RW, a=a, p=p,
                                          theta=[theta])
    if construction == 'direct':
        step = rf_utils.as_csr(a * _identity(lap.shape[0]) - lap)
        matrix = _power(step, p)
        kind = Construction.DIRECT
    elif construction == 'chebyshev':
        coefficients = random_walk_chebyshev_coefficients(a, p, lambda_max)
        matrix = chebyshev_series(cheb_rescale(lap, lambda_max),
                                  coefficients)
        kind = Construction.CHEBYSHEV
    else:
        raise ValueError('Unknown construction {!r}.'.format(construction))
    return FilterMatrix(_scaled(matrix, theta), spec, kind, order=p)


def cosine_filter(laplacian, K, theta=1.0, spec=None):
    """F = theta sum_{k=0..K} (-1)^k / (2k)! (L~ pi / 4)^(2k)."""
    lap = _laplacian_csr(laplacian)
    quarter = lap * (math.pi / 4.0)
    square = rf_utils.as_csr(quarter @ quarter)
    term = _identity(lap.shape[0])
    total = term
    for k in range(1, K + 1):
        term = (term @ square) * (-1.0 / ((2 * k - 1) * (2 * k)))
        total = total + term
    spec = spec or rf_response.FilterSpec(FAMILY.COSINE, K=K, theta=[theta])
    return FilterMatrix(_scaled(total, theta), spec, Construction.TAYLOR,
                        order=2 * K)


# NETWORK FAMILIES

def cheb_rescale(laplacian, lambda_max):
    """L_s = (2 / lambda_max) L - I, mapping [0, lambda_max] to [-1, 1]."""
    if not lambda_max > 0:
        raise ValueError('lambda_max must be > 0.')
    lap = _laplacian_csr(laplacian)
    return rf_utils.as_csr((2.0 / lambda_max) * lap -
                           _identity(lap.shape[0]))


def chebynet_filter(laplacian, theta, lambda_max, spec=None):
    """F = sum_k theta_k T_k(L_s)."""
    theta = [float(t) for t in theta]
    if not theta:
        raise rf_errors.InvalidFilterSpecError(
            'chebynet requires at least one coefficient.')
    spec = spec or rf_response.FilterSpec(
        FAMILY.CHEBYNET, theta=theta, basis='chebyshev',
        lambda_max=lambda_max)
    matrix = chebyshev_series(cheb_rescale(laplacian, lambda_max), theta)
    return FilterMatrix(matrix, spec, Construction.CHEBYSHEV,
                        order=len(theta) - 1)


def monomial_filter(laplacian, theta, spec=None):
    """F = sum_k theta_k L~^k."""
    theta = [float(t) for t in theta]
    lap = _laplacian_csr(laplacian)
    power = _identity(lap.shape[0])
    total = theta[0] * power
    for t in theta[1:]:
        power = power @ lap
        total = total + t * power
    spec = spec or rf_response.FilterSpec(FAMILY.CHEBYNET, theta=theta)
    return FilterMatrix(rf_utils.as_csr(total), spec, Construction.MONOMIAL,
                        order=len(theta) - 1)


def graphheat_filter(laplacian, s, K, theta0, theta1, spec=None):
    """F = theta0 I + theta1 TaylorK(exp(-s L~))."""
    if s < 0:
        raise rf_errors.InvalidFilterSpecError('s must be >= 0.')
    lap = _laplacian_csr(laplacian)
    heat = _taylor_exp(lap, s, K)
    matrix = theta0 * _identity(lap.shape[0]) + theta1 * heat
    spec = spec or rf_response.FilterSpec(FAMILY.GRAPHHEAT, s=s, K=K,
                                          theta=[theta0, theta1])
    return FilterMatrix(rf_utils.as_csr(matrix), spec, Construction.TAYLOR,
                        order=K)


def igcn_filter(laplacian, K, theta=1.0, spec=None):
    """F = theta (I - L~)^K, usually on the renormalized Laplacian."""
    if int(K) != K or K < 1:
        raise rf_errors.InvalidFilterSpecError('K must be an integer >= 1.')
    lap = _laplacian_csr(laplacian)
    step = rf_utils.as_csr(_identity(lap.shape[0]) - lap)
    spec = spec or rf_response.FilterSpec(FAMILY.IGCN, K=K, theta=[theta])
    return FilterMatrix(_scaled(_power(step, int(K)), theta), spec,
                        Construction.DIRECT, order=int(K))


def gcn_filter(laplacian, theta=1.0, spec=None):
    """F = theta (I - L~)."""
    spec = spec or rf_response.FilterSpec(FAMILY.GCN, theta=[theta])
    filt = igcn_filter(laplacian, 1, theta)
    return FilterMatrix(filt.matrix, spec, Construction.DIRECT, order=1)


# APPLICATION AND VALIDATION

def apply_filter(filt, x):
    """Return the dense product F X."""
    matrix = filt.matrix if isinstance(filt, FilterMatrix) else filt
    x = np.asarray(x, dtype=np.float64)
    rf_validation.raise_if_dimension_mismatch('signal rows',
                                              matrix.shape[1], x.shape[0])
    return np.asarray(rf_utils.matmul(matrix, x))


class KernelReport:
    """Result of kernel_check().

    Attributes:
        symmetry_defect (float): ||F - F^T||_F.
        min_eigenvalue (float): Smallest eigenvalue of (F + F^T) / 2.
        pseudo_inverse_residual (float): ||F r(L~) - Pi||_F where Pi
            projects onto the eigenspaces with finite r.
        psd (bool): min_eigenvalue >= -1e-8.

    """

    def __init__(self, label, n, symmetry_defect, min_eigenvalue,
            pseudo_inverse_residual):
        self.label = label
        self.n = n
        self.symmetry_defect = symmetry_defect
        self.min_eigenvalue = min_eigenvalue
        self.pseudo_inverse_residual = pseudo_inverse_residual
        self.psd = min_eigenvalue >= -PSD_TOL

    def items(self):
        """Ordered (key, value) pairs."""
        return [('filter', self.label),
                ('n', self.n),
                ('symmetry_defect',
                 rf_utils.format_decimal(self.symmetry_defect)),
                ('min_eigenvalue',
                 rf_utils.format_decimal(self.min_eigenvalue)),
                ('pseudo_inverse_residual',
                 rf_utils.format_decimal(self.pseudo_inverse_residual)),
                ('psd', 'true' if self.psd else 'false')]


def kernel_check(filt, spec, laplacian, max_nodes=rf_spectral.DENSE_CAP):
    """Check that F is a PSD kernel and the pseudo-inverse of r(L~)."""
    f = filt.to_dense()
    rf_validation.raise_if_over_dense_cap(f.shape[0], max_nodes)
    symmetric = 0.5 * (f + f.T)
    e = rf_spectral.eigendecompose(laplacian, max_nodes=max_nodes)
    r = np.asarray(rf_response.regularization_fn(spec, e.eigenvalues))
    finite = np.isfinite(r)
    regularization = e.matrix_function(np.where(finite, r, 0.0))
    projector = e.matrix_function(finite.astype(np.float64))
    report = KernelReport(
        spec.label, f.shape[0],
        float(np.linalg.norm(f - f.T)),
        float(np.linalg.eigvalsh(symmetric)[0]) if f.size else 0.0,
        float(np.linalg.norm(f @ regularization - projector)))
    logger.info('Kernel check %s: psd=%s min_eigenvalue=%.3e',
                spec.label, report.psd, report.min_eigenvalue)
    return report


# DISPATCH

def filter_laplacian(spec, graph, kind=None):
    """Laplacian a family is built on.

    Args:
        kind (str or None): 'normalized', 'renormalized' or None for the
            family default (renormalized for GCN and IGCN, normalized for
            all other families).

    """
    if kind is None:
        kind = 'renormalized' if spec.family in (FAMILY.GCN, FAMILY.IGCN) \
            else 'normalized'
    if kind == 'renormalized':
        return rf_graph.renormalize(graph)
    if kind == 'normalized':
        return rf_graph.normalized_laplacian(graph)
    raise ValueError('Unknown Laplacian kind {!r}.'.format(kind))


def _chebyshev_spec(spec, laplacian):
    """Spec with lambda_max replaced by the power iteration estimate."""
    return spec.replace(lambda_max=rf_spectral.max_eigenvalue(laplacian))


def build_filter(spec, laplacian, construction=None,
        max_nodes=rf_spectral.DENSE_CAP):
    """Build the filter matrix of spec on the given Laplacian.

    Args:
        construction (str or None): 'exact' for the eigendecomposition
            path, None for the family's computational path (linear solve
            for the regularized Laplacian, Taylor series for diffusion,
            GraphHeat and cosine, Chebyshev for the p-step random walk and
            ChebyNet with the Chebyshev basis, monomials for ChebyNet with
            the monomial basis, direct powers for GCN and IGCN). The
            p-step random walk falls back to direct powers when the power
            iteration for lambda_max does not converge.

    """
    family = spec.family
    rw_construction = 'chebyshev'
    if family == FAMILY.CHEBYNET and spec.basis == 'chebyshev':
        spec = _chebyshev_spec(spec, laplacian)
    elif family == FAMILY.P_STEP_RW and construction != 'exact':
        try:
            spec = _chebyshev_spec(spec, laplacian)
        except rf_errors.ConvergenceError as e:
            logger.warning('%s: %s Using direct powers of (aI - L~).',
                           spec.label, e)
            rw_construction = 'direct'
    if construction == 'exact':
        e = rf_spectral.eigendecompose(laplacian, max_nodes=max_nodes)
        return exact_filter(spec, e)
    if construction not in (None, 'default'):
        raise ValueError('Unknown construction {!r}.'.format(construction))

    if spec.form == 'exponential':
        raise rf_errors.InvalidFilterSpecError(
            'The exponential form is an analysis view without a filter '
            'matrix; use form=exact.')
    theta = spec.theta
    c = spec.c
    if family == FAMILY.REGULARIZED_LAPLACIAN:
        filt = regularized_laplacian_filter(laplacian, spec.s, theta[0],
                                            spec=spec)
    elif family == FAMILY.DIFFUSION:
        filt = diffusion_filter_taylor(laplacian, spec.s, spec.K, theta[0],
                                       spec=spec)
    elif family == FAMILY.P_STEP_RW:
        filt = p_step_rw_filter(laplacian, spec.a, spec.p, rw_construction,
                                theta[0], spec.lambda_max, spec=spec)
    elif family == FAMILY.COSINE:
        filt = cosine_filter(laplacian, spec.K, theta[0], spec=spec)
    elif family == FAMILY.CHEBYNET:
        if spec.basis == 'chebyshev':
            filt = chebynet_filter(laplacian, theta, spec.lambda_max,
                                   spec=spec)
        else:
            filt = monomial_filter(laplacian, theta, spec=spec)
    elif family == FAMILY.GCN:
        filt = gcn_filter(laplacian, theta[0], spec=spec)
    elif family == FAMILY.GRAPHHEAT:
        filt = graphheat_filter(laplacian, spec.s, spec.K, theta[0],
                                theta[1], spec=spec)
    else:
        filt = igcn_filter(laplacian, spec.K, theta[0], spec=spec)
    if c != 1.0:
        filt = FilterMatrix(filt.matrix / c, spec, filt.construction,
                            filt.order)
    logger.debug('Built %s', filt)
    return filt


class FilterBasis:
    """Fixed basis matrices B_j and initial coefficients phi_j.

    The filter is F(phi) = sum_j phi_j B_j; training learns phi per layer.

    Attributes:
        matrices (list): The B_j, sparse or dense n x n.
        coefficients (numpy.ndarray): Initial phi.
        spec (FilterSpec or None): The spec the basis realizes.
        learnable (bool): Whether training updates phi.

    """

    def __init__(self, matrices, coefficients, spec=None, learnable=True):
        self.matrices = [rf_utils.as_csr(m) if sp.issparse(m)
                         else np.asarray(m, dtype=np.float64)
                         for m in matrices]
        self.coefficients = np.array(coefficients, dtype=np.float64)
        rf_validation.raise_if_dimension_mismatch(
            'filter coefficients', len(self.matrices),
            len(self.coefficients))
        self.spec = spec
        self.learnable = learnable

    @classmethod
    def fixed(cls, filt):
        """Single-matrix basis with the coefficient 1 kept constant."""
        return cls([filt.matrix], [1.0], filt.spec, learnable=False)

    @classmethod
    def identity(cls, n):
        return cls([_identity(n)], [1.0], None, learnable=False)

    @property
    def n(self):
        return self.matrices[0].shape[0]

    def compose(self, phi=None):
        """Return F(phi) = sum_j phi_j B_j."""
        phi = self.coefficients if phi is None else phi
        total = None
        for weight, matrix in zip(phi, self.matrices):
            term = weight * matrix
            total = term if total is None else total + term
        return total


def filter_basis(spec, laplacian, learnable=True):
    """Split spec into fixed basis matrices and learnable coefficients.

    Single coefficient families learn one theta multiplying their matrix,
    ChebyNet learns its K polynomial coefficients and GraphHeat learns
    (theta0, theta1).

    """
    family = spec.family
    if family == FAMILY.CHEBYNET:
        if spec.basis == 'chebyshev':
            spec = _chebyshev_spec(spec, laplacian)
            ls = cheb_rescale(laplacian, spec.lambda_max)
            matrices = [chebyshev_series(ls, np.identity(spec.K)[k])
                        for k in range(spec.K)]
        else:
            matrices = [monomial_filter(laplacian,
                                        np.identity(spec.K)[k]).matrix
                        for k in range(spec.K)]
        coefficients = np.array(spec.theta) / spec.c
    elif family == FAMILY.GRAPHHEAT:
        lap = _laplacian_csr(laplacian)
        matrices = [_identity(lap.shape[0]), _taylor_exp(lap, spec.s, spec.K)]
        coefficients = np.array(spec.theta) / spec.c
    else:
        unit = spec.replace(theta=[1.0], c=1.0)
        matrices = [build_filter(unit, laplacian).matrix]
        coefficients = [spec.theta[0] / spec.c]
    return FilterBasis(matrices, coefficients, spec, learnable=learnable)
