# -*- coding: utf-8 -*-
"""
Created on Wed Sep 23 2026 at 08:15UTC

Spectral graph convolutional network written directly in numpy: weights,
forward pass, cross-entropy loss, reverse-mode gradients and the Adam
optimizer.

A layer maps its input H to

    P = sum_j phi_j B_j (H~ W)

where H~ is H after inverted dropout, W the layer weights, B_j the fixed
basis matrices of the graph filter and phi_j its learned coefficients
(see filters.FilterBasis). Hidden layers apply ReLU to P, the last layer
a row-wise softmax.

"""

import dataclasses
import json
import logging
import math

import dill as pickle
import numpy as np

from . import errors as rf_errors
from . import filters as rf_filters
from . import utils as rf_utils
from . import validation as rf_validation

logger = logging.getLogger(__name__)

LOG_CLAMP = 1e-12


@dataclasses.dataclass
class TrainConfig:
    """Hyperparameters of one training run.

    Attributes:
        learning_rate (float): Adam step size.
        max_epochs (int): Upper bound on the number of epochs.
        patience (int or float): Epochs without strict validation loss
            improvement before stopping; math.inf disables early stopping.
        dropout (float): Drop probability of layer inputs, 0 < p < 1.
        weight_decay (float): L2 factor on the first layer weights.
        hidden_units (int): Width of the hidden layers.
        n_layers (int): Number of graph convolution layers (1, 2 or 3).
        seed (int): Root seed of weight initialization and dropout.
        adam_beta1, adam_beta2, adam_epsilon (float): Adam constants.
        learn_filter (bool): Learn the filter coefficients phi.
        row_normalize (bool): L1-normalize feature rows before training.

    """

    learning_rate: float = 0.01
    max_epochs: int = 200
    patience: float = 10
    dropout: float = 0.5
    weight_decay: float = 5e-4
    hidden_units: int = 32
    n_layers: int = 2
    seed: int = 0
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_epsilon: float = 1e-8
    learn_filter: bool = True
    row_normalize: bool = True

    def __post_init__(self):
        self.validate()

    def validate(self):
        if not self.learning_rate > 0:
            raise rf_errors.ConfigError('learning_rate must be > 0.')
        if not 0 < self.dropout < 1:
            raise rf_errors.ConfigError(
                'dropout probability must satisfy 0 < p < 1.')
        if not self.patience >= 1:
            raise rf_errors.ConfigError('patience must be >= 1.')
        if int(self.max_epochs) != self.max_epochs or self.max_epochs < 1:
            raise rf_errors.ConfigError('max_epochs must be an integer >= 1.')
        if int(self.hidden_units) != self.hidden_units or \
                self.hidden_units < 1:
            raise rf_errors.ConfigError(
                'hidden_units must be an integer >= 1.')
        if self.n_layers not in (1, 2, 3):
            raise rf_errors.ConfigError('n_layers must be 1, 2 or 3.')
        if self.weight_decay < 0:
            raise rf_errors.ConfigError('weight_decay must be >= 0.')

    def to_dict(self):
        d = dataclasses.asdict(self)
        if math.isinf(d['patience']):
            d['patience'] = 'inf'
        return d

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise rf_errors.ConfigError('Unknown training option(s): {}.'
                                        .format(', '.join(sorted(unknown))))
        if d.get('patience') in ('inf', 'infinity', None):
            d['patience'] = math.inf
        return cls(**d)

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def hash(self):
        return rf_utils.config_hash(self.to_dict())

    def seed_sequences(self):
        """(initialization, dropout) child seed sequences of seed."""
        init, dropout = np.random.SeedSequence(self.seed).spawn(2)
        return init, dropout


def glorot_init(rows, cols, seed):
    """Uniform samples in [-sqrt(6/(rows+cols)), sqrt(6/(rows+cols))]."""
    if rows < 1 or cols < 1:
        raise ValueError('rows and cols must be >= 1.')
    bound = math.sqrt(6.0 / (rows + cols))
    rng = np.random.default_rng(seed)
    return rng.uniform(-bound, bound, size=(rows, cols))


def as_filter_basis(filt, n=None):
    """Wrap a FilterBasis, FilterMatrix, matrix or None (identity)."""
    if isinstance(filt, rf_filters.FilterBasis):
        return filt
    if isinstance(filt, rf_filters.FilterMatrix):
        return rf_filters.FilterBasis.fixed(filt)
    if filt is None:
        return rf_filters.FilterBasis.identity(n)
    return rf_filters.FilterBasis([filt], [1.0], learnable=False)


class GcnModel:
    """Weights and filter coefficients of a graph convolutional network.

    Args:
        weights (list of numpy.ndarray): Layer weights Theta^(1..L).
        phis (list of numpy.ndarray): Filter coefficients per layer.
        seed (int): Seed the weights were initialized with.
        config_hash (str): Hash of the training configuration.

    """

    def __init__(self, weights, phis, seed=None, config_hash=None):
        self.weights = [np.array(w, dtype=np.float64) for w in weights]
        self.phis = [np.array(phi, dtype=np.float64).ravel() for phi in phis]
        rf_validation.raise_if_dimension_mismatch(
            'filter coefficient sets', len(self.weights), len(self.phis))
        for upper, lower in zip(self.weights[:-1], self.weights[1:]):
            rf_validation.raise_if_dimension_mismatch(
                'layer width', upper.shape[1], lower.shape[0])
        for w in self.weights:
            rf_validation.raise_if_not_finite(w, 'model weights')
        self.seed = seed
        self.config_hash = config_hash

    @classmethod
    def initialize(cls, n_features, n_classes, config, basis):
        """Glorot weights and the basis coefficients for every layer."""
        widths = [n_features] + [config.hidden_units] * \
            (config.n_layers - 1) + [n_classes]
        init_seq, _ = config.seed_sequences()
        layer_seeds = init_seq.spawn(config.n_layers)
        weights = [glorot_init(rows, cols, seed) for rows, cols, seed in
                   zip(widths[:-1], widths[1:], layer_seeds)]
        phis = [basis.coefficients.copy() for _ in weights]
        return cls(weights, phis, seed=config.seed,
                   config_hash=config.hash())

    def __str__(self):
        widths = [self.weights[0].shape[0]] + \
            [w.shape[1] for w in self.weights]
        return '<GcnModel widths={}>'.format('-'.join(map(str, widths)))

    @property
    def n_layers(self):
        return len(self.weights)

    @property
    def theta1(self):
        return self.weights[0]

    @property
    def theta2(self):
        return self.weights[1] if self.n_layers > 1 else None

    def parameters(self, learn_filter=True):
        return self.weights + (self.phis if learn_filter else [])

    def with_parameters(self, params):
        """New model with weights (and optionally phis) replaced."""
        weights = params[:self.n_layers]
        phis = params[self.n_layers:] or self.phis
        return GcnModel(weights, phis, self.seed, self.config_hash)

    def tensors(self):
        names = ['theta{}'.format(i + 1) for i in range(self.n_layers)]
        names += ['phi{}'.format(i + 1) for i in range(self.n_layers)]
        return list(zip(names, self.weights + self.phis))

    # SERIALIZATION

    def save_weights(self, path):
        """Write a text tensor file.

        The first line is a JSON header with tensor names and shapes, the
        seed and the configuration hash; every following line holds one
        value in round-trip precision, tensors in header order, row-major.

        """
        tensors = self.tensors()
        header = {'tensors': [{'name': name, 'shape': list(t.shape)}
                              for name, t in tensors],
                  'seed': self.seed, 'config_hash': self.config_hash}
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(json.dumps(header) + '\n')
            for _, t in tensors:
                for value in t.ravel():
                    f.write(rf_utils.format_exact(value) + '\n')

    @classmethod
    def load_weights(cls, path):
        with open(path, 'r', encoding='utf-8') as f:
            header = json.loads(f.readline())
            values = np.array([float(line) for line in f if line.strip()])
        offset, arrays = 0, {}
        for entry in header['tensors']:
            shape = tuple(entry['shape'])
            size = int(np.prod(shape)) if shape else 1
            if offset + size > len(values):
                raise rf_errors.DatasetFormatError(path, None,
                    'tensor file truncated in {}'.format(entry['name']))
            arrays[entry['name']] = values[offset:offset + size].reshape(
                shape)
            offset += size
        n_layers = sum(1 for name in arrays if name.startswith('theta'))
        weights = [arrays['theta{}'.format(i + 1)] for i in range(n_layers)]
        phis = [arrays['phi{}'.format(i + 1)] for i in range(n_layers)]
        return cls(weights, phis, header.get('seed'),
                   header.get('config_hash'))

    def save(self, filename):
        with open(filename, 'wb') as f:
            pickle.dump(self, f)

    @classmethod
    def load(cls, filename):
        with open(filename, 'rb') as f:
            return pickle.load(f)


def softmax(p):
    shifted = p - p.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


def dropout_masks(model, n, probability, rng):
    """Inverted dropout masks (keep / (1 - p)) for the input of each layer."""
    keep = 1.0 - probability
    return [(rng.random((n, w.shape[0])) < keep) / keep
            for w in model.weights]


class ForwardCache:
    """Intermediate values of a forward pass, needed by backward()."""

    def __init__(self):
        self.inputs = []
        self.masks = []
        self.filtered = []
        self.pre_activations = []
        self.output = None


def forward(basis, x, model, masks=None, training=False):
    """Return the softmax output Z (n x c) and the forward cache.

    Args:
        basis (FilterBasis, FilterMatrix or matrix): Graph filter.
        x (numpy.ndarray n x d): Node features.
        model (GcnModel): Weights and filter coefficients.
        masks (list of numpy.ndarray): Dropout masks, used only when
            training is True.

    Raises:
        DimensionMismatchError, NonFiniteError

    """
    x = np.asarray(x, dtype=np.float64)
    basis = as_filter_basis(basis, x.shape[0])
    rf_validation.raise_if_dimension_mismatch('feature rows', basis.n,
                                              x.shape[0])
    rf_validation.raise_if_dimension_mismatch(
        'feature columns', model.weights[0].shape[0], x.shape[1])
    cache = ForwardCache()
    h = x
    for layer, (w, phi) in enumerate(zip(model.weights, model.phis)):
        mask = masks[layer] if training and masks is not None else None
        h_in = h * mask if mask is not None else h
        a = h_in @ w
        filtered = [np.asarray(rf_utils.matmul(b, a))
                    for b in basis.matrices]
        p = sum(c * fa for c, fa in zip(phi, filtered))
        cache.inputs.append(h_in)
        cache.masks.append(mask)
        cache.filtered.append(filtered)
        cache.pre_activations.append(p)
        h = np.maximum(p, 0.0) if layer < model.n_layers - 1 else softmax(p)
    rf_validation.raise_if_not_finite(h, 'network output')
    cache.output = h
    return h, cache


def loss(z, labels, train_set, model, weight_decay):
    """Summed cross-entropy over train_set plus (wd / 2) ||Theta^(1)||^2."""
    train_set = np.asarray(train_set, dtype=np.int64)
    if train_set.size == 0:
        raise ValueError('The labeled set must not be empty.')
    probabilities = z[train_set, np.asarray(labels)[train_set]]
    cross_entropy = -np.sum(np.log(np.maximum(probabilities, LOG_CLAMP)))
    return float(cross_entropy +
                 0.5 * weight_decay * np.sum(model.weights[0] ** 2))


class Gradients:
    """Gradients with respect to the weights and filter coefficients."""

    def __init__(self, weights, phis):
        self.weights = weights
        self.phis = phis

    def as_list(self, learn_filter=True):
        return self.weights + (self.phis if learn_filter else [])


def backward(cache, basis, model, labels, train_set, weight_decay):
    """Analytic gradients of loss() for the forward pass in cache."""
    basis = as_filter_basis(basis, cache.output.shape[0])
    train_set = np.asarray(train_set, dtype=np.int64)
    labels = np.asarray(labels)
    z = cache.output
    g = np.zeros_like(z)
    g[train_set] = z[train_set]
    g[train_set, labels[train_set]] -= 1.0
    # the clamp is flat below LOG_CLAMP
    clamped = z[train_set, labels[train_set]] < LOG_CLAMP
    g[train_set[clamped]] = 0.0

    weight_grads = [None] * model.n_layers
    phi_grads = [None] * model.n_layers
    for layer in reversed(range(model.n_layers)):
        phi = model.phis[layer]
        phi_grads[layer] = np.array([np.sum(g * fa)
                                     for fa in cache.filtered[layer]])
        da = sum(c * np.asarray(rf_utils.matmul(b.T, g))
                 for c, b in zip(phi, basis.matrices))
        dw = cache.inputs[layer].T @ da
        if layer == 0:
            dw = dw + weight_decay * model.weights[0]
        weight_grads[layer] = dw
        if layer > 0:
            dh = da @ model.weights[layer].T
            if cache.masks[layer] is not None:
                dh = dh * cache.masks[layer]
            g = dh * (cache.pre_activations[layer - 1] > 0)
    return Gradients(weight_grads, phi_grads)


class AdamState:
    """First and second moment estimates of Adam."""

    def __init__(self, params):
        self.m = [np.zeros_like(p) for p in params]
        self.v = [np.zeros_like(p) for p in params]


def adam_step(params, grads, state, t, config):
    """One bias corrected Adam update; returns (new params, state)."""
    if t < 1:
        raise ValueError('Adam step counter starts at 1.')
    b1, b2 = config.adam_beta1, config.adam_beta2
    new_params = []
    for i, (p, g) in enumerate(zip(params, grads)):
        state.m[i] = b1 * state.m[i] + (1.0 - b1) * g
        state.v[i] = b2 * state.v[i] + (1.0 - b2) * g * g
        m_hat = state.m[i] / (1.0 - b1 ** t)
        v_hat = state.v[i] / (1.0 - b2 ** t)
        new_params.append(p - config.learning_rate * m_hat /
                          (np.sqrt(v_hat) + config.adam_epsilon))
    return new_params, state


def predict(z):
    """Class with the highest probability, ties to the lowest index."""
    return np.argmax(z, axis=1)


def accuracy(z, labels, index_set):
    """Fraction of nodes in index_set whose argmax equals the label."""
    index_set = np.asarray(index_set, dtype=np.int64)
    if index_set.size == 0:
        raise ValueError('The evaluation set must not be empty.')
    labels = np.asarray(labels)
    return float(np.mean(predict(z)[index_set] == labels[index_set]))
