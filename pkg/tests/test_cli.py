# -*- coding: utf-8 -*-
"""
Created on Wed Oct 14 2026 at 09:30UTC

"""

import contextlib
import io
import os
import shutil
import sys
import tempfile
import unittest
from unittest import TestCase

import pandas as pd

if not os.path.abspath(__file__ + "/../../") in sys.path:
    sys.path.append(os.path.abspath(__file__ + "/../../"))

from regfilters import cli
from regfilters.model import GcnModel
from tests import fixtures


def run(*argv):
    """Run the command line and return (exit code, stdout)."""
    stdout = io.StringIO()
    with contextlib.redirect_stdout(stdout), \
            contextlib.redirect_stderr(io.StringIO()):
        code = cli.main(list(argv))
    return code, stdout.getvalue()


def read(path):
    with open(path, 'rb') as f:
        return f.read()


class AnalysisCommandTest(TestCase):
    """Commands that work on the spectrum and on r(lambda)."""

    def setUp(self, *args, **kwargs):
        self.tmp = tempfile.mkdtemp()
        self.k2 = fixtures.write_dataset(fixtures.k2_dataset(),
                                         os.path.join(self.tmp, 'k2'))

    def tearDown(self, *args, **kwargs):
        shutil.rmtree(self.tmp)

    def test_spectrum(self):
        out = os.path.join(self.tmp, 'spectrum.csv')
        code, _ = run('spectrum', '--dataset', self.k2, '--out', out)
        self.assertEqual(code, cli.EXIT_OK)
        df = pd.read_csv(out)
        self.assertEqual(list(df.columns), ['index', 'eigenvalue'])
        self.assertEqual(list(df['index']), [0, 1])
        self.assertAlmostEqual(df['eigenvalue'][0], 0.0, places=12)
        self.assertAlmostEqual(df['eigenvalue'][1], 2.0, places=12)

    def test_spectrum_renormalized(self):
        code, text = run('spectrum', '--dataset', self.k2, '--renormalize')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(text.splitlines()[0], 'index,eigenvalue')
        self.assertAlmostEqual(float(text.splitlines()[2].split(',')[1]),
                               1.0, places=12)

    def test_spectrum_k3(self):
        k3 = fixtures.write_dataset(fixtures.k3_dataset(),
                                    os.path.join(self.tmp, 'k3'))
        out = os.path.join(self.tmp, 'k3.csv')
        self.assertEqual(run('spectrum', '--dataset', k3, '--out', out)[0],
                         cli.EXIT_OK)
        df = pd.read_csv(out)
        self.assertTrue(all(abs(df['eigenvalue'] - [0.0, 1.5, 1.5]) < 1e-12))

    def test_spectrum_dense_cap(self):
        code, _ = run('spectrum', '--dataset', self.k2, '--max-nodes', '1')
        self.assertEqual(code, cli.EXIT_RUNTIME)

    def test_monotone(self):
        code, text = run('monotone', '--filter', 'diffusion', '--s', '1')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(text.strip(), 'diffusion[s=1]: monotone')
        code, text = run('monotone', '--filter', 'chebynet', '--form',
                         'exponential')
        self.assertEqual(code, cli.EXIT_VIOLATION)
        self.assertIn('violation', text)

    def test_monotone_sweep(self):
        code, text = run('monotone', '--filter', 'p_step_rw', '--a', '2',
                         '3', '--p', '1', '2', '3')
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(len(text.splitlines()), 6)

    def test_usage_errors(self):
        self.assertEqual(run('monotone')[0], cli.EXIT_USAGE)
        self.assertEqual(run('monotone', '--filter', 'lanczos')[0],
                         cli.EXIT_USAGE)
        self.assertEqual(run('monotone', '--filter', 'diffusion', '--s',
                             '0')[0], cli.EXIT_USAGE)
        self.assertEqual(run('frobnicate')[0], cli.EXIT_USAGE)
        self.assertEqual(run('spectrum')[0], cli.EXIT_USAGE)

    def test_kernel_check(self):
        out = os.path.join(self.tmp, 'kernel.csv')
        code, _ = run('kernel-check', '--dataset', self.k2, '--filter',
                      'regularized_laplacian', '--s', '1', '--out', out)
        self.assertEqual(code, cli.EXIT_OK)
        values = dict(pd.read_csv(out, dtype=str).values)
        self.assertEqual(values['psd'], 'true')
        self.assertEqual(values['n'], '2')

    def test_kernel_check_violation(self):
        code, text = run('kernel-check', '--dataset', self.k2, '--filter',
                         'gcn')
        self.assertEqual(code, cli.EXIT_VIOLATION)
        self.assertIn('psd,false', text)

    def test_kernel_check_needs_one_filter(self):
        code, _ = run('kernel-check', '--dataset', self.k2, '--filter',
                      'diffusion', '--s', '1', '2')
        self.assertEqual(code, cli.EXIT_USAGE)

    def test_curves(self):
        out = os.path.join(self.tmp, 'curves.csv')
        code, _ = run('curves', '--filter', 'diffusion', '--s', '0.5', '1',
                      '--grid', '11', '--out', out)
        self.assertEqual(code, cli.EXIT_OK)
        df = pd.read_csv(out)
        self.assertEqual(list(df.columns),
                         ['lambda', 'diffusion[s=0.5]', 'diffusion[s=1]'])
        self.assertEqual(len(df), 11)

    def test_curves_presets(self):
        for preset in ('kernels', 'networks'):
            out = os.path.join(self.tmp, preset)
            code, _ = run('curves', '--preset', preset, '--out', out)
            self.assertEqual(code, cli.EXIT_OK)
            names = sorted(os.listdir(out))
            self.assertEqual(len(names), 5)
            self.assertTrue(all(name.startswith('curves_') and
                                name.endswith('.csv') for name in names))
        self.assertIn('curves_e_inverse_cosine.csv',
                      os.listdir(os.path.join(self.tmp, 'kernels')))

    def test_curves_errors(self):
        self.assertEqual(run('curves')[0], cli.EXIT_USAGE)
        self.assertEqual(run('curves', '--filter', 'gcn', '--grid', '1')[0],
                         cli.EXIT_USAGE)


class ExperimentCommandTest(TestCase):
    """The train and decouple commands on a small planted dataset."""

    def setUp(self, *args, **kwargs):
        self.tmp = tempfile.mkdtemp()
        self.data = fixtures.write_dataset(fixtures.community_dataset(),
                                           os.path.join(self.tmp, 'toy'))

    def tearDown(self, *args, **kwargs):
        shutil.rmtree(self.tmp)

    def _out(self, name):
        return os.path.join(self.tmp, name)

    def test_train(self):
        args = ['train', '--dataset', self.data, '--filter', 'gcn',
                'diffusion', '--s', '1', '--hidden', '4', '8', '--seeds',
                '2', '--epochs', '5']
        code, _ = run(*(args + ['--out', self._out('a')]))
        self.assertEqual(code, cli.EXIT_OK)
        sweep = pd.read_csv(os.path.join(self._out('a'), 'sweep.csv'))
        summary = pd.read_csv(os.path.join(self._out('a'), 'summary.csv'))
        seeds = pd.read_csv(os.path.join(self._out('a'), 'seeds.csv'))
        timing = pd.read_csv(os.path.join(self._out('a'), 'timing.csv'))
        self.assertEqual(len(sweep), 4)
        self.assertEqual(list(summary['filter']), ['gcn', 'diffusion[s=1]'])
        self.assertEqual(len(seeds), 4)
        self.assertEqual(list(seeds['seed']), [0, 1, 0, 1])
        self.assertEqual(len(timing), 4)
        for _, row in summary.iterrows():
            group = sweep[sweep['group'] == row['group']]
            self.assertEqual(len(group), 2)
            self.assertEqual(row['mean_val_accuracy'],
                             group['mean_val_accuracy'].max())

        reports = os.listdir(os.path.join(self._out('a'), 'reports'))
        self.assertEqual(len(reports), 16)
        self.assertEqual(sum(name.endswith('.weights') for name in reports),
                         8)
        model = GcnModel.load_weights(os.path.join(
            self._out('a'), 'reports', 'gcn_h8_seed1.weights'))
        self.assertEqual(model.seed, 1)
        self.assertEqual(model.n_layers, 2)
        self.assertEqual(model.weights[0].shape[1], 8)
        self.assertIsNotNone(model.config_hash)

        code, _ = run(*(args + ['--out', self._out('b')]))
        self.assertEqual(code, cli.EXIT_OK)
        for name in ('sweep.csv', 'summary.csv', 'seeds.csv',
                     os.path.join('reports', 'gcn_h8_seed1.weights')):
            self.assertEqual(read(os.path.join(self._out('a'), name)),
                             read(os.path.join(self._out('b'), name)))

    def test_train_root_seed(self):
        code, _ = run('train', '--dataset', self.data, '--filter', 'gcn',
                      '--seeds', '2', '--root-seed', '7', '--epochs', '2',
                      '--out', self._out('c'))
        self.assertEqual(code, cli.EXIT_OK)
        seeds = pd.read_csv(os.path.join(self._out('c'), 'seeds.csv'))
        self.assertEqual(list(seeds['seed']), [7, 8])

    def test_train_from_config_file(self):
        fixtures.write_files(self.tmp, {'config.yaml': (
            'dataset: {}\nseeds: 3\nfilters:\n  - family: igcn\n    K: [1, 2]'
            '\ntrain:\n  max_epochs: 2\n').format(self.data)})
        code, _ = run('train', '--config', os.path.join(self.tmp,
                                                        'config.yaml'),
                      '--seeds', '1', '--out', self._out('d'))
        self.assertEqual(code, cli.EXIT_OK)
        sweep = pd.read_csv(os.path.join(self._out('d'), 'sweep.csv'))
        self.assertEqual(list(sweep['filter']), ['igcn[K=1]', 'igcn[K=2]'])
        self.assertEqual(list(sweep['seeds']), [1, 1])

    def test_train_errors(self):
        self.assertEqual(run('train', '--filter', 'gcn')[0], cli.EXIT_USAGE)
        self.assertEqual(run('train', '--dataset', self.data)[0],
                         cli.EXIT_USAGE)
        self.assertEqual(run('train', '--dataset', self.data, '--filter',
                             'mlp')[0], cli.EXIT_USAGE)
        self.assertEqual(run('train', '--dataset', self.data, '--filter',
                             'gcn', '--dropout', '1.0')[0], cli.EXIT_USAGE)
        self.assertEqual(run('train', '--dataset', self._out('missing'),
                             '--filter', 'gcn', '--out',
                             self._out('e'))[0], cli.EXIT_USAGE)
        fixtures.write_files(self._out('broken'), {'features.csv': '1,x\n'})
        self.assertEqual(run('decouple', '--dataset', self._out('broken'),
                             '--filter', 'mlp', '--out',
                             self._out('e'))[0], cli.EXIT_RUNTIME)

    def test_decouple(self):
        code, _ = run('decouple', '--dataset', self.data, '--filter', 'mlp',
                      'diffusion', '--s', '0.5', '1', '--seeds', '1',
                      '--epochs', '3', '--out', self._out('f'))
        self.assertEqual(code, cli.EXIT_OK)
        summary = pd.read_csv(os.path.join(self._out('f'), 'summary.csv'))
        self.assertEqual(list(summary['group']), ['mlp', 'diffusion'])
        sweep = pd.read_csv(os.path.join(self._out('f'), 'sweep.csv'))
        self.assertEqual(len(sweep), 3)

    def test_decouple_layers(self):
        for layers in (1, 3):
            out = self._out('layers{}'.format(layers))
            code, _ = run('decouple', '--dataset', self.data, '--filter',
                          'mlp', 'diffusion', '--s', '1', '--layers',
                          str(layers), '--seeds', '1', '--epochs', '2',
                          '--out', out)
            self.assertEqual(code, cli.EXIT_OK)
            for name in ('mlp_h32_seed0.weights',
                         'diffusions=1_h32_seed0.weights'):
                model = GcnModel.load_weights(
                    os.path.join(out, 'reports', name))
                self.assertEqual(model.n_layers, layers, name)

    def test_decouple_preset(self):
        code, _ = run('decouple', '--dataset', self.data, '--preset',
                      'decoupling', '--seeds', '1', '--epochs', '2', '--out',
                      self._out('g'))
        self.assertEqual(code, cli.EXIT_OK)
        summary = pd.read_csv(os.path.join(self._out('g'), 'summary.csv'))
        self.assertEqual(len(summary), len(cli.DECOUPLING_FILTERS))
        self.assertEqual(summary['filter'][0], 'mlp')


class ConvertCommandTest(TestCase):

    def setUp(self, *args, **kwargs):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self, *args, **kwargs):
        shutil.rmtree(self.tmp)

    def test_missing_raw_files(self):
        code, _ = run('convert', '--format', 'planetoid', '--raw', self.tmp,
                      '--name', 'cora', '--out',
                      os.path.join(self.tmp, 'cora'))
        self.assertEqual(code, cli.EXIT_RUNTIME)

    def test_unknown_format(self):
        code, _ = run('convert', '--format', 'tudataset', '--raw', self.tmp,
                      '--name', 'x', '--out', self.tmp)
        self.assertEqual(code, cli.EXIT_USAGE)


if __name__ == "__main__":
    unittest.main()
