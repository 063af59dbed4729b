# -*- coding: utf-8 -*-
"""
Created on Tue Sep 29 2026 at 10:12UTC

Experiment configuration: YAML files, command-line overrides and the
expansion of hyperparameter sweep grids.

Values are resolved in the order built-in defaults < config file <
command-line flags; a later source wins for every key it sets.

An example config file:

    dataset: data/cora
    seeds: 10
    root_seed: 0
    out: results/cora_diffusion
    hidden_units: [16, 32, 64]
    filters:
      - family: diffusion
        s: [0.5, 0.75, 1.0, 1.25, 1.5]
        K: 3
    train:
      learning_rate: 0.01
      dropout: 0.5

"""

import dataclasses
import itertools
import logging
import os

import yaml

from . import errors as rf_errors
from . import model as rf_model
from . import response as rf_response

logger = logging.getLogger(__name__)

DEFAULTS = {
    'dataset': None,
    'filters': [],
    'hidden_units': [32],
    'seeds': 10,
    'root_seed': 0,
    'out': 'results',
    'laplacian': None,
    'train': {},
}

SWEEP_PARAMETERS = ('s', 'a', 'p', 'K', 'c')
MLP = 'mlp'


def set_superset_values(values, superset):
    """Fill all keys of superset that are not set in values.

    Keys present in values keep their value; nested mappings are filled
    recursively. A new dict is returned.

    """
    result = dict(values)
    for key, value in superset.items():
        if key not in result or result[key] is None:
            result[key] = value
        elif isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = set_superset_values(result[key], value)
    return result


def load_config_file(path):
    """Read a YAML experiment config file into a dict."""
    if not os.path.isfile(path):
        raise rf_errors.ConfigError('Config file {} not found.'.format(path))
    with open(path, 'r', encoding='utf-8') as f:
        try:
            values = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise rf_errors.ConfigError(
                'Config file {} is not valid YAML: {}'.format(path, e))
    if values is None:
        return {}
    if not isinstance(values, dict):
        raise rf_errors.ConfigError(
            'Config file {} must hold a mapping.'.format(path))
    return values


def _as_list(value):
    return list(value) if isinstance(value, (list, tuple)) else [value]


def expand_filter_grid(filter_values):
    """All FilterSpecs of a filter entry whose parameters may be lists.

    s, a, p, K and c may be given as lists (sweep grids); theta is a list
    of coefficients, a list of lists sweeps over several coefficient
    vectors. The product is taken in the order of SWEEP_PARAMETERS.

    """
    filter_values = dict(filter_values)
    grids = []
    for name in SWEEP_PARAMETERS:
        if name in filter_values:
            grid = _as_list(filter_values.pop(name))
            if not grid:
                raise rf_errors.ConfigError(
                    'Sweep grid of "{}" is empty.'.format(name))
            grids.append([(name, v) for v in grid])
    thetas = filter_values.pop('theta', None)
    if thetas is not None:
        thetas = thetas if thetas and isinstance(thetas[0], (list, tuple)) \
            else [thetas]
        grids.append([('theta', t) for t in thetas])
    specs = []
    for combination in itertools.product(*grids):
        values = dict(filter_values)
        values.update(combination)
        specs.append(rf_response.FilterSpec.from_dict(values))
    return specs


@dataclasses.dataclass
class ExperimentConfig:
    """Resolved configuration of a train or decouple experiment.

    Attributes:
        dataset (str): Dataset directory.
        filters (list of dict): Filter entries, see expand_filter_grid().
        hidden_units (list of int): Hidden width grid.
        train (TrainConfig): Training hyperparameters.
        seeds (int): Number of seeds per grid point.
        root_seed (int): Seed of run i is root_seed + i.
        out (str): Output directory.
        laplacian (str or None): 'normalized', 'renormalized' or None for
            the family default.

    """

    dataset: str = None
    filters: list = dataclasses.field(default_factory=list)
    hidden_units: list = dataclasses.field(default_factory=lambda: [32])
    train: rf_model.TrainConfig = dataclasses.field(
        default_factory=rf_model.TrainConfig)
    seeds: int = 10
    root_seed: int = 0
    out: str = 'results'
    laplacian: str = None

    def __post_init__(self):
        self.validate()

    def validate(self):
        if int(self.seeds) != self.seeds or self.seeds < 1:
            raise rf_errors.ConfigError('seeds must be an integer >= 1.')
        if not self.hidden_units:
            raise rf_errors.ConfigError('The hidden_units grid is empty.')
        if self.laplacian not in (None, 'normalized', 'renormalized'):
            raise rf_errors.ConfigError(
                'laplacian must be normalized or renormalized.')

    def filter_specs(self):
        specs = []
        for entry in self.filters:
            specs.extend(expand_filter_grid(entry))
        return specs

    def grid(self):
        """List of (FilterSpec, TrainConfig) pairs, one per combination."""
        return [(spec, self.train.replace(hidden_units=int(hidden)))
                for spec in self.filter_specs()
                for hidden in self.hidden_units]

    def groups(self):
        """One (name, grid) pair per filter entry.

        The grid holds (FilterSpec, TrainConfig) for every combination of
        the entry's parameter values with the hidden units. The
        pseudo-filter mlp has None in place of a FilterSpec.

        """
        hidden_grid = [self.train.replace(hidden_units=int(hidden))
                       for hidden in self.hidden_units]
        groups = []
        for entry in self.filters:
            if entry.get('family') == MLP:
                groups.append((MLP, [(None, cfg) for cfg in hidden_grid]))
                continue
            specs = expand_filter_grid(entry)
            name = specs[0].label if len(specs) == 1 \
                else specs[0].family.value
            groups.append((name, [(spec, cfg) for spec in specs
                                  for cfg in hidden_grid]))
        return groups

    def to_dict(self):
        return {'dataset': self.dataset, 'filters': self.filters,
                'hidden_units': self.hidden_units,
                'train': self.train.to_dict(), 'seeds': self.seeds,
                'root_seed': self.root_seed, 'out': self.out,
                'laplacian': self.laplacian}


def resolve_experiment_config(file_values=None, flag_values=None):
    """Merge defaults, config file values and flags into an
    ExperimentConfig. Flags that are None count as not given."""
    flags = {k: v for k, v in (flag_values or {}).items() if v is not None}
    if 'train' in flags:
        flags['train'] = {k: v for k, v in flags['train'].items()
                          if v is not None}
    values = set_superset_values(flags, file_values or {})
    values = set_superset_values(values, DEFAULTS)
    unknown = set(values) - set(DEFAULTS)
    if unknown:
        raise rf_errors.ConfigError('Unknown config key(s): {}.'.format(
            ', '.join(sorted(unknown))))
    values['hidden_units'] = [int(h) for h in _as_list(values['hidden_units'])]
    values['filters'] = [dict(f) if isinstance(f, dict) else {'family': f}
                         for f in _as_list(values['filters'])]
    values['train'] = rf_model.TrainConfig.from_dict(values['train'])
    config = ExperimentConfig(**values)
    logger.debug('Resolved experiment config: %s', config.to_dict())
    return config
