# -*- coding: utf-8 -*-
"""
Created on Fri Sep 18 2026 at 08:30UTC

Filter specifications, their scalar regularization functions r(lambda) and
frequency responses g(lambda) = 1 / r(lambda), a grid based check of
monotonicity of r and the export of r curves as tables.

Two groups of families exist:

    regularization families (RegularizedLaplacian, Diffusion,
        PStepRandomWalk, Cosine) are defined by r(lambda);
    network families (ChebyNet, GCN, GraphHeat, IGCN) are defined by
        their published response g(lambda).

"""

import enum
import logging
import math

import numpy as np
import numpy.polynomial.chebyshev as np_cheb
import pandas as pd

from . import descriptors as rf_descriptors
from . import errors as rf_errors
from . import utils as rf_utils

logger = logging.getLogger(__name__)

POLE_TOL = 1e-12
MONOTONE_TOL = 1e-12
DEFAULT_GRID_POINTS = 1001


class FilterFamily(enum.Enum):
    REGULARIZED_LAPLACIAN = 'regularized_laplacian'
    DIFFUSION = 'diffusion'
    P_STEP_RW = 'p_step_rw'
    COSINE = 'cosine'
    CHEBYNET = 'chebynet'
    GCN = 'gcn'
    GRAPHHEAT = 'graphheat'
    IGCN = 'igcn'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace('-', '_')
        aliases = {'rl': 'regularized_laplacian', 'heat': 'diffusion',
                   'rw': 'p_step_rw', 'random_walk': 'p_step_rw',
                   'pstep_rw': 'p_step_rw'}
        key = aliases.get(key, key)
        for member in cls:
            if member.value == key:
                return member
        raise rf_errors.InvalidFilterSpecError(
            'Unknown filter family {!r}; choose one of {}.'.format(
                value, ', '.join(m.value for m in cls)))


REGULARIZATION_FAMILIES = (
    FilterFamily.REGULARIZED_LAPLACIAN, FilterFamily.DIFFUSION,
    FilterFamily.P_STEP_RW, FilterFamily.COSINE)
NETWORK_FAMILIES = (
    FilterFamily.CHEBYNET, FilterFamily.GCN, FilterFamily.GRAPHHEAT,
    FilterFamily.IGCN)
EXPONENTIAL_FAMILIES = (
    FilterFamily.CHEBYNET, FilterFamily.GCN, FilterFamily.IGCN)

DEFAULT_ORDER = {
    FilterFamily.DIFFUSION: 3,
    FilterFamily.GRAPHHEAT: 3,
    FilterFamily.COSINE: 2,
    FilterFamily.CHEBYNET: 3,
    FilterFamily.IGCN: 2,
}

# Parameters shown in the readable label of a spec.
LABEL_PARAMETERS = {
    FilterFamily.REGULARIZED_LAPLACIAN: ('s',),
    FilterFamily.DIFFUSION: ('s',),
    FilterFamily.P_STEP_RW: ('a', 'p'),
    FilterFamily.COSINE: (),
    FilterFamily.CHEBYNET: ('K',),
    FilterFamily.GCN: (),
    FilterFamily.GRAPHHEAT: ('s',),
    FilterFamily.IGCN: ('K',),
}


class FilterSpec:
    """Filter family together with its hyperparameters.

    Args:
        family (FilterFamily or str): The filter family.
        s (float): Scale of the regularized Laplacian, diffusion and
            GraphHeat families. Defaults to 1.
        a (float): Offset of the p-step random walk. Defaults to 2.
        p (int): Number of random walk steps. Defaults to 1.
        K (int): Truncation order (diffusion, GraphHeat, cosine),
            polynomial length (ChebyNet) or power (IGCN). Defaults per
            family.
        theta (list of float): Scaling coefficients. Defaults to [1] for
            single-coefficient families, [1, 1] for GraphHeat and K ones
            for ChebyNet.
        c (float): Positive multiplier on r(lambda). Defaults to 1.
        form (str): 'exact' or 'exponential' (the exponential
            approximation of the ChebyNet, GCN and IGCN regularization).
        basis (str): ChebyNet response basis, 'monomial' (sum theta_k
            lambda^k) or 'chebyshev' (sum theta_k T_k of the rescaled
            variable with lambda_max).
        lambda_max (float): Spectrum bound used by the Chebyshev basis.
        label (str): Readable name, used as column name in curve tables.

    """

    s = rf_descriptors.BoundedNumberDescriptor('s', default=1.0, lower=0.0)
    a = rf_descriptors.BoundedNumberDescriptor('a', default=2.0)
    p = rf_descriptors.BoundedNumberDescriptor('p', default=1, lower=1,
                                               integer=True)
    K = rf_descriptors.BoundedNumberDescriptor('K', default=None, lower=0,
                                               integer=True)
    c = rf_descriptors.BoundedNumberDescriptor('c', default=1.0, lower=0.0,
                                               lower_inclusive=False)
    lambda_max = rf_descriptors.BoundedNumberDescriptor(
        'lambda_max', default=2.0, lower=0.0, lower_inclusive=False)
    form = rf_descriptors.ChoiceDescriptor(
        'form', ('exact', 'exponential'), default='exact')
    basis = rf_descriptors.ChoiceDescriptor(
        'basis', ('monomial', 'chebyshev'), default='monomial')

    def __init__(self, family, s=None, a=None, p=None, K=None, theta=None,
            c=None, form=None, basis=None, lambda_max=None, label=None):
        self.family = FilterFamily.parse(family)
        self.s = s
        self.a = a
        self.p = p
        self.c = c
        self.form = form
        self.basis = basis
        self.lambda_max = lambda_max
        if theta is not None:
            theta = [float(t) for t in np.ravel(theta)]
        if self.family == FilterFamily.CHEBYNET and theta and K is None:
            K = len(theta)
        if K is None:
            K = DEFAULT_ORDER.get(self.family)
        self.K = K
        self.theta = theta if theta is not None else self._default_theta()
        self._label = label
        self.validate()

    def _default_theta(self):
        if self.family == FilterFamily.GRAPHHEAT:
            return [1.0, 1.0]
        if self.family == FilterFamily.CHEBYNET:
            return [1.0] * self.K
        return [1.0]

    def validate(self):
        """Check the family specific constraints of the hyperparameters.

        Raises:
            InvalidFilterSpecError

        """
        family = self.family
        if family in (FilterFamily.REGULARIZED_LAPLACIAN,
                      FilterFamily.DIFFUSION) and not self.s > 0:
            raise rf_errors.InvalidFilterSpecError(
                '{} requires s > 0, got s={!r}.'.format(
                    family.value, self.s))
        if not all(math.isfinite(t) for t in self.theta):
            raise rf_errors.InvalidFilterSpecError('theta must be finite.')
        if family == FilterFamily.GRAPHHEAT:
            expected = 2
        elif family == FilterFamily.CHEBYNET:
            expected = self.K
            if not expected:
                raise rf_errors.InvalidFilterSpecError(
                    'chebynet requires at least one coefficient.')
        else:
            expected = 1
        if len(self.theta) != expected:
            raise rf_errors.InvalidFilterSpecError(
                '{} expects {} theta value(s), got {}.'.format(
                    family.value, expected, len(self.theta)))
        if family == FilterFamily.IGCN and self.K < 1:
            raise rf_errors.InvalidFilterSpecError('igcn requires K >= 1.')
        if self.form == 'exponential' and family not in EXPONENTIAL_FAMILIES:
            raise rf_errors.InvalidFilterSpecError(
                'The exponential form exists for chebynet, gcn and igcn '
                'only, not for {}.'.format(family.value))

    def __repr__(self):
        return '<FilterSpec {}>'.format(self.label)

    def __eq__(self, other):
        return isinstance(other, FilterSpec) and \
            self.to_dict() == other.to_dict()

    __hash__ = None

    @property
    def outside_guarantee(self):
        """True for random walk offsets a < 2 (no monotonicity guarantee)."""
        return self.family == FilterFamily.P_STEP_RW and self.a < 2

    @property
    def label(self):
        if self._label:
            return self._label
        parts = ['{}={:g}'.format(name, getattr(self, name))
                 for name in LABEL_PARAMETERS[self.family]]
        if self.c != 1.0:
            parts.append('c={:g}'.format(self.c))
        if self.form == 'exponential':
            parts.append('exp')
        if not parts:
            return self.family.value
        return '{}[{}]'.format(self.family.value, ';'.join(parts))

    def to_dict(self):
        return {'family': self.family.value, 's': self.s, 'a': self.a,
                'p': self.p, 'K': self.K, 'theta': list(self.theta),
                'c': self.c, 'form': self.form, 'basis': self.basis,
                'lambda_max': self.lambda_max}

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        try:
            family = d.pop('family')
        except KeyError:
            raise rf_errors.InvalidFilterSpecError(
                'A filter specification needs a "family".')
        unknown = set(d) - {'s', 'a', 'p', 'K', 'theta', 'c', 'form',
                            'basis', 'lambda_max', 'label'}
        if unknown:
            raise rf_errors.InvalidFilterSpecError(
                'Unknown filter parameter(s): {}.'.format(
                    ', '.join(sorted(unknown))))
        return cls(family, **d)

    def replace(self, **changes):
        """Return a new spec with some parameters changed."""
        d = self.to_dict()
        if self._label:
            d['label'] = self._label
        if 'K' in changes and self.family == FilterFamily.CHEBYNET and \
                'theta' not in changes:
            d['theta'] = None
        d.update(changes)
        return FilterSpec.from_dict(d)


def _base_response(spec, lam):
    """Published response g(lambda) before the division by c."""
    family = spec.family
    theta = spec.theta
    if family == FilterFamily.REGULARIZED_LAPLACIAN:
        return theta[0] / (1.0 + spec.s * lam)
    if family == FilterFamily.DIFFUSION:
        return theta[0] * np.exp(-spec.s * lam)
    if family == FilterFamily.P_STEP_RW:
        return theta[0] * (spec.a - lam) ** spec.p
    if family == FilterFamily.COSINE:
        return theta[0] * np.cos(lam * np.pi / 4.0)
    if family == FilterFamily.CHEBYNET:
        if spec.basis == 'chebyshev':
            return np_cheb.chebval(2.0 * lam / spec.lambda_max - 1.0, theta)
        return np.polynomial.polynomial.polyval(lam, theta)
    if family == FilterFamily.GCN:
        return theta[0] * (1.0 - lam)
    if family == FilterFamily.GRAPHHEAT:
        return theta[0] + theta[1] * np.exp(-spec.s * lam)
    if family == FilterFamily.IGCN:
        return (theta[0] * (1.0 - lam)) ** spec.K
    raise rf_errors.InvalidFilterSpecError(
        'Unsupported family {!r}.'.format(family))


def _exponential_regularization(spec, lam):
    if spec.family == FilterFamily.CHEBYNET:
        return spec.c * np.exp(-lam)
    if spec.family == FilterFamily.GCN:
        return spec.c * np.exp(lam)
    return spec.c * np.exp(spec.K * lam)


def _as_result(values, scalar):
    return float(values) if scalar else values


def regularization_fn(spec, lam):
    """Return r(lambda) for a scalar or an array of eigenvalues.

    At a pole (the response vanishes, |g| <= 1e-12) the result is +inf.

    """
    scalar = np.ndim(lam) == 0
    lam = np.asarray(lam, dtype=np.float64)
    if spec.form == 'exponential':
        return _as_result(_exponential_regularization(spec, lam), scalar)
    g = np.asarray(_base_response(spec, lam), dtype=np.float64)
    pole = np.abs(g) <= POLE_TOL
    with np.errstate(divide='ignore'):
        r = np.where(pole, np.inf, spec.c / np.where(pole, 1.0, g))
    return _as_result(r, scalar)


def frequency_response(spec, lam):
    """Return g(lambda) = 1 / r(lambda) for a scalar or an array."""
    scalar = np.ndim(lam) == 0
    lam = np.asarray(lam, dtype=np.float64)
    if spec.form == 'exponential':
        g = 1.0 / _exponential_regularization(spec, lam)
    else:
        g = np.asarray(_base_response(spec, lam), dtype=np.float64) / spec.c
    return _as_result(g, scalar)


# MONOTONICITY

class MonotonicityReport:
    """Result of check_monotone_increasing().

    Attributes:
        spec (FilterSpec): The checked spec.
        monotone (bool): True iff r is non-decreasing on every pole-free
            segment of the grid.
        violation (tuple or None): First offending (lambda_i, lambda_i+1).
        poles (list of float): Grid locations of poles (a non-finite r, or
            the midpoint of a sign change of r).
        outside_guarantee (bool): The spec lies outside the parameter range
            with a monotonicity guarantee.

    """

    def __init__(self, spec, monotone, violation, poles, outside_guarantee):
        self.spec = spec
        self.monotone = monotone
        self.violation = violation
        self.poles = poles
        self.outside_guarantee = outside_guarantee

    def __bool__(self):
        return self.monotone

    def verdict_line(self):
        if self.monotone:
            text = '{}: monotone'.format(self.spec.label)
        else:
            text = '{}: violation between lambda={:.9g} and {:.9g}'.format(
                self.spec.label, *self.violation)
        if self.poles:
            text += '; pole(s) at lambda={}'.format(
                ','.join('{:.9g}'.format(p) for p in self.poles))
        if self.outside_guarantee:
            text += '; outside guaranteed range (a < 2)'
        return text


def check_monotone_increasing(spec, lambda_max=2.0,
        grid_points=DEFAULT_GRID_POINTS):
    """Check on a uniform grid over [0, lambda_max] that r is increasing.

    A non-finite value of r, or a change of sign between two neighbouring
    grid points, is recorded as a pole and splits the grid into segments.
    r must be non-decreasing (within a relative tolerance of 1e-12) on
    each segment.

    """
    if grid_points < 2:
        raise ValueError('grid_points must be >= 2.')
    grid = np.linspace(0.0, lambda_max, int(grid_points))
    r = regularization_fn(spec, grid)
    finite = np.isfinite(r)
    poles = [float(lam) for lam in grid[~finite]]
    violation = None
    for i in range(len(grid) - 1):
        if not (finite[i] and finite[i + 1]):
            continue
        if r[i] * r[i + 1] < 0:
            poles.append(0.5 * float(grid[i] + grid[i + 1]))
            continue
        if r[i + 1] < r[i] - MONOTONE_TOL * max(1.0, abs(r[i])):
            violation = (float(grid[i]), float(grid[i + 1]))
            break
    poles.sort()
    report = MonotonicityReport(spec, violation is None, violation, poles,
                                spec.outside_guarantee)
    logger.debug(report.verdict_line())
    return report


# CURVES

def _unique_labels(specs):
    labels, seen = [], {}
    for spec in specs:
        label = spec.label
        if label in seen:
            seen[label] += 1
            label = '{}#{}'.format(label, seen[label])
        else:
            seen[label] = 0
        labels.append(label)
    return labels


def emit_curves(specs, lambda_max=2.0, grid_points=DEFAULT_GRID_POINTS):
    """Return a DataFrame with a lambda column and one r column per spec.

    Poles appear as NaN and are written as empty cells by write_curves().

    """
    if grid_points < 2:
        raise ValueError('grid_points must be >= 2.')
    grid = np.linspace(0.0, lambda_max, int(grid_points))
    columns = {'lambda': grid}
    for label, spec in zip(_unique_labels(specs), specs):
        r = regularization_fn(spec, grid)
        columns[label] = np.where(np.isfinite(r), r, np.nan)
    return pd.DataFrame(columns)


def write_curves(df, path):
    """Write a curve table as CSV with 9 significant digits."""
    df.to_csv(path, index=False, float_format='%.9g', na_rep='',
              lineterminator='\n')


def _curve_panels(name):
    s_values = (0.5, 1.0, 1.5, 2.0)
    a_values = (2.0, 3.0, 4.0, 5.0)
    c_values = (0.2, 0.5, 1.0, 1.5)
    if name == 'kernels':
        return {
            'a_regularized_laplacian': [
                FilterSpec('regularized_laplacian', s=s) for s in s_values],
            'b_diffusion': [FilterSpec('diffusion', s=s) for s in s_values],
            'c_one_step_rw': [
                FilterSpec('p_step_rw', a=a, p=1) for a in a_values],
            'd_two_step_rw': [
                FilterSpec('p_step_rw', a=a, p=2) for a in a_values],
            'e_inverse_cosine': [FilterSpec('cosine')],
        }
    if name == 'networks':
        return {
            'a_chebynet': [FilterSpec('chebynet', c=c, form='exponential')
                           for c in c_values],
            'b_gcn': [FilterSpec('gcn', c=c, form='exponential')
                      for c in c_values],
            'c_graphheat': [FilterSpec('graphheat', s=1.0, c=c)
                            for c in c_values],
            'd_igcn_k2': [FilterSpec('igcn', K=2, c=c, form='exponential')
                          for c in c_values],
            'e_igcn_k3': [FilterSpec('igcn', K=3, c=c, form='exponential')
                          for c in c_values],
        }
    raise rf_errors.ConfigError(
        'Unknown curve preset {!r}; use kernels or networks.'.format(name))


CURVE_PRESETS = ('kernels', 'networks')


def curve_preset(name):
    """Return an ordered {panel: [FilterSpec, ...]} dict of a preset."""
    return _curve_panels(name)


def curve_file_name(panel):
    return rf_utils.get_valid_filename_from_string(
        'curves_{}.csv'.format(panel))
