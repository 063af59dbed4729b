# -*- coding: utf-8 -*-
"""
Created on Mon Oct 12 2026 at 10:02UTC

"""

import math
import os
import shutil
import sys
import tempfile
import unittest
from unittest import TestCase

import numpy as np
import numpy.testing as npt

if not os.path.abspath(__file__ + "/../../") in sys.path:
    sys.path.append(os.path.abspath(__file__ + "/../../"))

from regfilters import errors
from regfilters import filters
from regfilters import training
from regfilters.dataset import Dataset, load_dataset
from regfilters.graph import row_normalize_features
from regfilters.model import TrainConfig, as_filter_basis, forward, loss
from regfilters.report import TrainReport
from regfilters.response import FilterSpec
from tests import fixtures


def eval_loss(ds, trained, config):
    """Training-set loss of trained without dropout."""
    x = row_normalize_features(ds.features)
    z, _ = forward(as_filter_basis(None, ds.n), x, trained)
    return loss(z, ds.labels, ds.train, trained, config.weight_decay)


def assertSameWeights(model_a, model_b):
    for a, b in zip(model_a.weights + model_a.phis,
                    model_b.weights + model_b.phis):
        npt.assert_array_equal(a, b)


class ToyTrainingTest(TestCase):
    """Test the training loop on tiny datasets."""

    def setUp(self, *args, **kwargs):
        self.k2 = fixtures.k2_dataset()
        self.community = fixtures.community_dataset(seed=0)

    def tearDown(self, *args, **kwargs):
        del(self.k2)
        del(self.community)

    def test_k2_reaches_full_train_accuracy(self):
        report, _ = training.fit(self.k2, filters.identity_filter(2),
                                 TrainConfig())
        self.assertEqual(report.train_accuracy, 1.0)
        self.assertIsNone(report.test_accuracy)
        self.assertEqual(report.epochs_run, 200)
        self.assertTrue(np.all(np.isnan(report.val_loss)))

    def test_training_loss_decreases(self):
        config = TrainConfig(max_epochs=50)
        _, start = training.fit(self.k2, None, config.replace(max_epochs=1))
        report, end = training.fit(self.k2, None, config)
        self.assertLess(eval_loss(self.k2, end, config),
                        eval_loss(self.k2, start, config))
        self.assertLess(np.mean(report.train_loss[-10:]),
                        np.mean(report.train_loss[:10]))

    def test_deterministic(self):
        config = TrainConfig(max_epochs=30, seed=3)
        spec = FilterSpec('gcn')
        report_a, model_a = training.train(self.community, spec, config)
        report_b, model_b = training.train(self.community, spec, config)
        self.assertEqual(report_a, report_b)
        assertSameWeights(model_a, model_b)
        report_c, _ = training.train(self.community, spec,
                                     config.replace(seed=4))
        self.assertNotEqual(report_a, report_c)

    def test_infinite_patience_runs_all_epochs(self):
        config = TrainConfig(max_epochs=40, patience=math.inf)
        report, _ = training.train(self.community, FilterSpec('gcn'), config)
        self.assertEqual(report.epochs_run, 40)
        self.assertFalse(report.stopped_early)

    def test_early_stopping_rule(self):
        config = TrainConfig(max_epochs=300, patience=3, learning_rate=0.1)
        report, _ = training.train(self.community,
                                   FilterSpec('diffusion', s=1.0), config)
        val_loss = report.val_loss
        if report.stopped_early:
            best_before = np.min(val_loss[:-3])
            self.assertTrue(np.all(val_loss[-3:] >= best_before))
        else:
            self.assertEqual(report.epochs_run, 300)

    def test_community_dataset_is_learned(self):
        config = TrainConfig(max_epochs=100, patience=math.inf)
        for spec in (FilterSpec('gcn'), FilterSpec('diffusion', s=1.0)):
            report, _ = training.train(self.community, spec, config)
            self.assertGreaterEqual(report.test_accuracy, 0.7, spec.label)
            self.assertEqual(report.label, spec.label)

    def test_fixed_filter(self):
        config = TrainConfig(max_epochs=5, learn_filter=False)
        _, model = training.train(self.community,
                                  FilterSpec('chebynet', theta=[1.0, 0.5]),
                                  config)
        for phi in model.phis:
            npt.assert_array_equal(phi, [1.0])

    def test_learned_filter_coefficients_move(self):
        config = TrainConfig(max_epochs=5)
        _, model = training.train(self.community,
                                  FilterSpec('chebynet', theta=[1.0, 0.5]),
                                  config)
        self.assertFalse(np.allclose(model.phis[0], [1.0, 0.5]))

    def test_divergence(self):
        config = TrainConfig(learning_rate=1e300, max_epochs=5)
        with self.assertRaises(errors.NonFiniteError) as context:
            training.train(self.community, FilterSpec('gcn'), config)
        self.assertIn('seed 0', str(context.exception))
        self.assertIn('epoch', str(context.exception))

    def test_empty_training_set(self):
        ds = Dataset(fixtures.k2_graph(), np.identity(2), [0, 1], [], [0],
                     [1])
        with self.assertRaises(errors.ConfigError):
            training.fit(ds, None, TrainConfig())


class BaselineTest(TestCase):
    """Identity filters reduce the network to a perceptron."""

    def setUp(self, *args, **kwargs):
        self.ds = fixtures.community_dataset(seed=1)
        self.config = TrainConfig(max_epochs=25, seed=2)

    def tearDown(self, *args, **kwargs):
        del(self.ds)
        del(self.config)

    def test_identity_filter_equals_mlp(self):
        report_gcn, model_gcn = training.fit(
            self.ds, filters.identity_filter(self.ds.n), self.config)
        report_mlp, model_mlp = training.mlp_train(self.ds, 2, self.config)
        self.assertEqual(report_gcn, report_mlp)
        assertSameWeights(model_gcn, model_mlp)

    def test_decoupled_without_filter_equals_mlp(self):
        report_dec, model_dec = training.decoupled_experiment(
            self.ds, None, self.config)
        report_mlp, model_mlp = training.mlp_train(self.ds, 2, self.config)
        self.assertEqual(report_dec, report_mlp)
        assertSameWeights(model_dec, model_mlp)

    def test_decoupled_filter(self):
        report, model = training.decoupled_experiment(
            self.ds, FilterSpec('diffusion', s=1.0), self.config)
        self.assertEqual(report.label, 'diffusion[s=1]')
        self.assertEqual(model.n_layers, 2)

    def test_decoupled_depth(self):
        spec = FilterSpec('diffusion', s=1.0)
        for layers in (1, 3):
            config = self.config.replace(n_layers=layers)
            _, model = training.decoupled_experiment(self.ds, spec, config)
            self.assertEqual(model.n_layers, layers)
            report_dec, model_dec = training.decoupled_experiment(
                self.ds, None, config)
            report_mlp, model_mlp = training.mlp_train(self.ds, layers,
                                                       self.config)
            self.assertEqual(model_dec.n_layers, layers)
            self.assertEqual(report_dec, report_mlp)
            assertSameWeights(model_dec, model_mlp)

    def test_mlp_depth(self):
        _, model = training.mlp_train(self.ds, 3, self.config)
        self.assertEqual(model.n_layers, 3)
        with self.assertRaises(errors.ConfigError):
            training.mlp_train(self.ds, 4, self.config)


class TrainReportTest(TestCase):

    def setUp(self, *args, **kwargs):
        self.tmp = tempfile.mkdtemp()
        self.report, _ = training.fit(fixtures.k3_dataset(), None,
                                      TrainConfig(max_epochs=12,
                                                  patience=math.inf))

    def tearDown(self, *args, **kwargs):
        shutil.rmtree(self.tmp)
        del(self.report)

    def test_fields(self):
        self.assertEqual(self.report.epochs_run, 12)
        self.assertEqual(list(self.report.df['epoch']), list(range(1, 13)))
        self.assertTrue(0.0 <= self.report.test_accuracy <= 1.0)
        self.assertGreaterEqual(self.report.mean_epoch_time, 0.0)

    def test_csv(self):
        path = os.path.join(self.tmp, 'report.csv')
        self.report.to_csv(path)
        with open(path) as f:
            lines = f.read().splitlines()
        self.assertEqual(lines[0], 'epoch,train_loss,val_loss,val_acc')
        self.assertEqual(len(lines), 14)
        self.assertTrue(lines[-1].startswith('# label=mlp seed=0'))

    def test_pickle(self):
        path = os.path.join(self.tmp, 'report.pkl')
        self.report.save(path)
        self.assertEqual(TrainReport.load(path), self.report)

    def test_invalid_accuracy(self):
        with self.assertRaises(ValueError):
            self.report.finish(1.5, 1.0, False)

    def test_frame_follows_added_epochs(self):
        report = TrainReport('mlp', 0)
        report.add_epoch(1, 1.0, 1.0, 0.5, 0.01)
        self.assertEqual(len(report.df), 1)
        for epoch in range(2, 2001):
            report.add_epoch(epoch, 1.0 / epoch, 1.0, 0.5, 0.01)
        self.assertEqual(report.epochs_run, 2000)
        self.assertIsNone(report._df)
        self.assertEqual(list(report.df['epoch']), list(range(1, 2001)))
        self.assertIs(report.df, report.df)
        self.assertEqual(report.train_loss[-1], 1.0 / 2000)


def mean_test_accuracy(run, config, seeds):
    return np.mean([run(config.replace(seed=seed))[0].test_accuracy
                    for seed in seeds])


class CoraTest(TestCase):
    """Reproduction on Cora; needs a converted dataset in $REGFILTERS_DATA."""

    def setUp(self, *args, **kwargs):
        path = fixtures.data_dir('cora')
        if path is None:
            self.skipTest('Set REGFILTERS_DATA to a directory holding a '
                          'converted "cora" dataset.')
        self.ds = load_dataset(path)
        self.config = TrainConfig(learn_filter=False)

    def tearDown(self, *args, **kwargs):
        del(self.ds)
        del(self.config)

    def _mean_accuracy(self, run, seeds):
        return mean_test_accuracy(run, self.config, seeds)

    def _train(self, spec):
        return lambda c: training.train(self.ds, spec, c)

    def test_gcn(self):
        accuracy = self._mean_accuracy(self._train(FilterSpec('gcn')),
                                       range(10))
        self.assertTrue(0.78 <= accuracy <= 0.84, accuracy)

    def test_diffusion_beats_gcn(self):
        seeds = range(10)
        gcn = self._mean_accuracy(self._train(FilterSpec('gcn')), seeds)
        diffusion = self._mean_accuracy(
            self._train(FilterSpec('diffusion', s=1.0, K=3)), seeds)
        self.assertTrue(0.8112 <= diffusion <= 0.8512, diffusion)
        self.assertGreaterEqual(diffusion, gcn - 0.003)

    def test_decoupling(self):
        seeds = range(5)
        mlp = self._mean_accuracy(
            lambda c: training.decoupled_experiment(self.ds, None, c), seeds)
        self.assertTrue(0.53 <= mlp <= 0.60, mlp)
        chebynet = self._mean_accuracy(
            lambda c: training.decoupled_experiment(
                self.ds, FilterSpec('chebynet', theta=[1.0, 1.0, 1.0]), c),
            seeds)
        diffusion = self._mean_accuracy(
            lambda c: training.decoupled_experiment(
                self.ds, FilterSpec('diffusion', s=1.0), c), seeds)
        self.assertLessEqual(chebynet, mlp - 0.15)
        self.assertGreaterEqual(diffusion, mlp + 0.15)


class CiteseerTest(TestCase):
    """Reproduction on Citeseer; needs $REGFILTERS_DATA/citeseer."""

    def setUp(self, *args, **kwargs):
        path = fixtures.data_dir('citeseer')
        if path is None:
            self.skipTest('Set REGFILTERS_DATA to a directory holding a '
                          'converted "citeseer" dataset.')
        self.ds = load_dataset(path)
        self.config = TrainConfig(learn_filter=False)

    def tearDown(self, *args, **kwargs):
        del(self.ds)
        del(self.config)

    def test_gcn(self):
        accuracy = mean_test_accuracy(
            lambda c: training.train(self.ds, FilterSpec('gcn'), c),
            self.config, range(10))
        self.assertTrue(0.6873 <= accuracy <= 0.7273, accuracy)

    def test_diffusion(self):
        accuracy = mean_test_accuracy(
            lambda c: training.train(
                self.ds, FilterSpec('diffusion', s=1.0, K=3), c),
            self.config, range(10))
        self.assertTrue(0.6917 <= accuracy <= 0.7317, accuracy)


if __name__ == "__main__":
    unittest.main()
