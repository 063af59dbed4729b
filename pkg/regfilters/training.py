# -*- coding: utf-8 -*-
"""
Created on Mon Sep 28 2026 at 07:41UTC

Full-batch training of the graph convolutional network: the shared
training loop, the GCN and MLP entry points and the decoupled
filter-then-MLP experiment.

"""

import logging
import time as time_module

import numpy as np

from . import errors as rf_errors
from . import filters as rf_filters
from . import graph as rf_graph
from . import model as rf_model
from . import report as rf_report

logger = logging.getLogger(__name__)


def _log_progress(label, seed, epoch, config, train_loss, val_acc, progress):
    """Log at INFO every time another 10% of max_epochs is done."""
    new_progress = int(float(epoch) / float(config.max_epochs) * 10) * 10
    if new_progress != progress:
        logger.info('%s seed %s: %d%% (epoch %d, train loss %.4f, '
                    'val acc %.4f)', label, seed, new_progress, epoch,
                    train_loss, val_acc)
    return new_progress


def fit(ds, filt, config, label=None):
    """Train a network on dataset ds with graph filter filt.

    Adam on the summed cross-entropy of the training nodes, dropout masks
    drawn every epoch from the seeded generator and early stopping when
    the validation loss has not strictly improved on its best value for
    config.patience consecutive epochs. The model after the last epoch is
    returned.

    Args:
        ds (Dataset): Dataset to train on.
        filt (FilterBasis, FilterMatrix or None): Graph filter; None means
            the identity (no graph).
        config (TrainConfig): Hyperparameters.
        label (str): Name used in logs and in the report.

    Returns:
        tuple: (TrainReport, GcnModel)

    Raises:
        NonFiniteError: loss or weights diverged; the message names the
            epoch and the seed.

    """
    if ds.train.size == 0:
        raise rf_errors.ConfigError('The training set is empty.')
    x = ds.features
    if config.row_normalize:
        x = rf_graph.row_normalize_features(x)
    basis = rf_model.as_filter_basis(filt, ds.n)
    learn_filter = config.learn_filter and basis.learnable
    label = label or (basis.spec.label if basis.spec else 'mlp')

    model = rf_model.GcnModel.initialize(x.shape[1], ds.num_classes, config,
                                         basis)
    _, dropout_seq = config.seed_sequences()
    rng = np.random.default_rng(dropout_seq)
    state = rf_model.AdamState(model.parameters(learn_filter))
    report = rf_report.TrainReport(label, config.seed, config.hash())
    has_val = ds.val.size > 0

    logger.info('Start training %s on %s (seed %s, %d epochs max)...',
                label, ds.name, config.seed, config.max_epochs)
    best_val_loss = np.inf
    epochs_without_improvement = 0
    progress = 0
    stopped_early = False
    for epoch in range(1, config.max_epochs + 1):
        start = time_module.perf_counter()
        try:
            masks = rf_model.dropout_masks(model, ds.n, config.dropout, rng)
            z, cache = rf_model.forward(basis, x, model, masks,
                                        training=True)
            train_loss = rf_model.loss(z, ds.labels, ds.train, model,
                                       config.weight_decay)
            if not np.isfinite(train_loss):
                raise rf_errors.NonFiniteError('loss is not finite')
            grads = rf_model.backward(cache, basis, model, ds.labels,
                                      ds.train, config.weight_decay)
            params, state = rf_model.adam_step(
                model.parameters(learn_filter),
                grads.as_list(learn_filter), state, epoch, config)
            model = model.with_parameters(params)
            z_eval, _ = rf_model.forward(basis, x, model)
        except rf_errors.NonFiniteError as e:
            raise rf_errors.NonFiniteError(
                'Training of {} diverged at epoch {} (seed {}): {}'.format(
                    label, epoch, config.seed, e))
        if has_val:
            val_loss = rf_model.loss(z_eval, ds.labels, ds.val, model,
                                     config.weight_decay)
            val_acc = rf_model.accuracy(z_eval, ds.labels, ds.val)
        else:
            val_loss = val_acc = np.nan
        report.add_epoch(epoch, train_loss, val_loss, val_acc,
                         time_module.perf_counter() - start)
        logger.debug('epoch %d: train loss %.6f, val loss %.6f, '
                     'val acc %.4f', epoch, train_loss, val_loss, val_acc)
        progress = _log_progress(label, config.seed, epoch, config,
                                 train_loss, val_acc, progress)

        if not has_val:
            continue
        if val_loss < best_val_loss:
            best_val_loss = val_loss
            epochs_without_improvement = 0
        else:
            epochs_without_improvement += 1
            if epochs_without_improvement >= config.patience:
                stopped_early = True
                logger.info('Early stopping of %s after epoch %d.',
                            label, epoch)
                break

    z_final, _ = rf_model.forward(basis, x, model)
    test_acc = rf_model.accuracy(z_final, ds.labels, ds.test) \
        if ds.test.size else None
    train_acc = rf_model.accuracy(z_final, ds.labels, ds.train)
    report.finish(test_acc, train_acc, stopped_early)
    logger.info('Finished %s', report)
    return report, model


def train(ds, spec, config, laplacian_kind=None):
    """Train the network with the graph filter of spec.

    With config.learn_filter the filter coefficients of every layer are
    learned (see filters.filter_basis()), otherwise the filter built from
    spec stays fixed.

    """
    laplacian = rf_filters.filter_laplacian(spec, ds.graph, laplacian_kind)
    if config.learn_filter:
        basis = rf_filters.filter_basis(spec, laplacian)
    else:
        basis = rf_filters.FilterBasis.fixed(
            rf_filters.build_filter(spec, laplacian))
    return fit(ds, basis, config, label=spec.label)


def mlp_train(ds, layers, config):
    """Train a layers-deep perceptron: the same recipe with F = I."""
    if layers not in (1, 2, 3):
        raise rf_errors.ConfigError('An MLP has 1, 2 or 3 layers.')
    config = config.replace(n_layers=layers)
    return fit(ds, rf_filters.FilterBasis.identity(ds.n), config,
               label='mlp')


def decoupled_experiment(ds, spec, config, laplacian_kind=None):
    """Filter the features once with a fixed filter, then train an MLP.

    X' = F X is computed before training (F has no learned parameters) and
    a perceptron with config.n_layers layers (two by default) is trained on
    X'. spec=None gives the plain MLP baseline of mlp_train().

    """
    if spec is None:
        return mlp_train(ds, config.n_layers, config)
    x = ds.features
    if config.row_normalize:
        x = rf_graph.row_normalize_features(x)
    if any(t != 1.0 for t in spec.theta):
        logger.warning('Decoupled filter %s uses theta != 1.', spec.label)
    laplacian = rf_filters.filter_laplacian(spec, ds.graph, laplacian_kind)
    filt = rf_filters.build_filter(spec, laplacian)
    filtered = rf_filters.apply_filter(filt, x)
    config = config.replace(row_normalize=False, learn_filter=False)
    return fit(ds.with_features(filtered),
               rf_filters.FilterBasis.identity(ds.n), config,
               label=spec.label)
