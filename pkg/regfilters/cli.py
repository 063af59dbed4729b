# -*- coding: utf-8 -*-
"""
Created on Thu Oct 01 2026 at 08:20UTC

Command-line interface.

    regfilters spectrum      eigenvalues of a dataset's Laplacian
    regfilters curves        r(lambda) tables, single specs or presets
    regfilters train         GCN training over seeds and sweep grids
    regfilters decouple      fixed filter followed by an MLP (--layers deep)
    regfilters kernel-check  PSD and pseudo-inverse check of a filter
    regfilters monotone      monotonicity verdict of r(lambda)
    regfilters convert       Planetoid / LINQS raw files to a dataset dir

Exit codes: 0 success, 1 property violation (not monotone, not PSD),
2 usage error, 3 runtime or numeric error.

"""

import argparse
import logging
import os
import sys

import numpy as np
import pandas as pd

from . import config as rf_config
from . import dataset as rf_dataset
from . import errors as rf_errors
from . import filters as rf_filters
from . import graph as rf_graph
from . import response as rf_response
from . import spectral as rf_spectral
from . import training as rf_training
from . import utils as rf_utils

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3

MLP = rf_config.MLP
CSV_OPTIONS = {'index': False, 'float_format': '%.9g', 'na_rep': '',
               'lineterminator': '\n'}

DECOUPLING_FILTERS = [
    MLP,
    {'family': 'gcn'},
    {'family': 'igcn', 'K': 2},
    {'family': 'chebynet', 'K': 3},
    {'family': 'graphheat', 's': 1.0, 'K': 3},
    {'family': 'diffusion', 's': 1.0, 'K': 3},
    {'family': 'p_step_rw', 'a': 4.0, 'p': 1},
    {'family': 'p_step_rw', 'a': 4.0, 'p': 2},
    {'family': 'p_step_rw', 'a': 4.0, 'p': 3},
    {'family': 'cosine', 'K': 2},
]


# ARGUMENTS

def _add_filter_arguments(parser, multiple_families=False):
    parser.add_argument('--filter', nargs='+' if multiple_families else None,
                        help='filter family')
    parser.add_argument('--s', type=float, nargs='+', help='scale s')
    parser.add_argument('--a', type=float, nargs='+',
                        help='random walk offset a')
    parser.add_argument('--p', type=int, nargs='+',
                        help='random walk steps p')
    parser.add_argument('--K', type=int, nargs='+', help='order K')
    parser.add_argument('--theta', type=float, nargs='+',
                        help='theta coefficients')
    parser.add_argument('--c', type=float, nargs='+',
                        help='multiplier c on r(lambda)')
    parser.add_argument('--form', choices=['exact', 'exponential'])
    parser.add_argument('--basis', choices=['monomial', 'chebyshev'])


def _add_experiment_arguments(parser):
    parser.add_argument('--config', help='YAML experiment config file')
    parser.add_argument('--dataset', help='dataset directory')
    parser.add_argument('--hidden', type=int, nargs='+',
                        help='hidden units grid')
    parser.add_argument('--seeds', type=int, help='number of seeds')
    parser.add_argument('--root-seed', type=int, help='root seed')
    parser.add_argument('--out', help='output directory')
    parser.add_argument('--renormalize', action='store_true', default=None,
                        help='use the renormalized Laplacian for all '
                             'families')
    parser.add_argument('--epochs', type=int, help='maximum epochs')
    parser.add_argument('--lr', type=float, help='learning rate')
    parser.add_argument('--dropout', type=float, help='drop probability')
    parser.add_argument('--patience', type=float,
                        help='early stopping patience')
    parser.add_argument('--weight-decay', type=float,
                        help='L2 factor on first layer weights')
    parser.add_argument('--layers', type=int, help='number of layers')
    parser.add_argument('--fixed-filter', action='store_true', default=None,
                        help='do not learn filter coefficients')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='regfilters',
        description='Regularized spectral graph convolution filters.')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='debug logging')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('spectrum', help='Laplacian eigenvalues as CSV')
    p.add_argument('--dataset', required=True)
    p.add_argument('--renormalize', action='store_true')
    p.add_argument('--max-nodes', type=int, default=rf_spectral.DENSE_CAP)
    p.add_argument('--out', help='output file (default stdout)')

    p = sub.add_parser('curves', help='r(lambda) tables')
    _add_filter_arguments(p, multiple_families=True)
    p.add_argument('--preset', choices=rf_response.CURVE_PRESETS)
    p.add_argument('--lambda-max', type=float, default=2.0)
    p.add_argument('--grid', type=int,
                   default=rf_response.DEFAULT_GRID_POINTS)
    p.add_argument('--out', help='output file, or directory for presets')

    for name, text in (('train', 'train the GCN over seeds and sweeps'),
                       ('decouple', 'fixed filter followed by an MLP')):
        p = sub.add_parser(name, help=text)
        _add_filter_arguments(p, multiple_families=True)
        _add_experiment_arguments(p)
        if name == 'decouple':
            p.add_argument('--preset', choices=['decoupling'])

    p = sub.add_parser('kernel-check', help='PSD check of a filter')
    p.add_argument('--dataset', required=True)
    _add_filter_arguments(p)
    p.add_argument('--renormalize', action='store_true')
    p.add_argument('--construction', choices=['exact', 'default'],
                   default='default')
    p.add_argument('--max-nodes', type=int, default=rf_spectral.DENSE_CAP)
    p.add_argument('--out', help='output file (default stdout)')

    p = sub.add_parser('monotone', help='monotonicity of r(lambda)')
    _add_filter_arguments(p)
    p.add_argument('--lambda-max', type=float, default=2.0)
    p.add_argument('--grid', type=int,
                   default=rf_response.DEFAULT_GRID_POINTS)

    p = sub.add_parser('convert', help='convert raw dataset files')
    p.add_argument('--format', required=True, choices=['planetoid', 'linqs'])
    p.add_argument('--raw', required=True, help='raw file directory')
    p.add_argument('--name', required=True, help='dataset name')
    p.add_argument('--out', required=True, help='output dataset directory')
    p.add_argument('--seed', type=int, default=0,
                   help='split seed (linqs)')
    return parser


def _filter_values(args, family):
    values = {'family': family}
    for name in ('s', 'a', 'p', 'K', 'theta', 'c', 'form', 'basis'):
        value = getattr(args, name, None)
        if value is not None:
            values[name] = value
    return values


def _families(args):
    families = args.filter
    if families is None:
        return []
    return families if isinstance(families, list) else [families]


def specs_from_args(args):
    specs = []
    for family in _families(args):
        specs.extend(rf_config.expand_filter_grid(
            _filter_values(args, family)))
    return specs


def _write_table(df, out):
    if out:
        df.to_csv(out, **CSV_OPTIONS)
    else:
        df.to_csv(sys.stdout, **CSV_OPTIONS)


def _load(path):
    if not path:
        raise rf_errors.ConfigError('A dataset directory is required '
                                    '(--dataset).')
    if not os.path.isdir(path):
        raise rf_errors.ConfigError(
            'Dataset directory {} does not exist.'.format(path))
    return rf_dataset.load_dataset(path)


# SUBCOMMANDS

def cmd_spectrum(args):
    ds = _load(args.dataset)
    laplacian = rf_graph.renormalize(ds.graph) if args.renormalize \
        else rf_graph.normalized_laplacian(ds.graph)
    e = rf_spectral.eigendecompose(laplacian, max_nodes=args.max_nodes)
    df = pd.DataFrame({'index': np.arange(e.n),
                       'eigenvalue': e.eigenvalues})
    _write_table(df, args.out)
    return EXIT_OK


def cmd_curves(args):
    if args.grid < 2:
        raise rf_errors.ConfigError('--grid must be >= 2.')
    if args.preset:
        out_dir = args.out or '.'
        os.makedirs(out_dir, exist_ok=True)
        for panel, specs in rf_response.curve_preset(args.preset).items():
            df = rf_response.emit_curves(specs, args.lambda_max, args.grid)
            path = os.path.join(out_dir, rf_response.curve_file_name(panel))
            rf_response.write_curves(df, path)
            logger.info('Wrote %s', path)
        return EXIT_OK
    specs = specs_from_args(args)
    if not specs:
        raise rf_errors.ConfigError('No filter given (--filter or '
                                    '--preset).')
    df = rf_response.emit_curves(specs, args.lambda_max, args.grid)
    if args.out:
        rf_response.write_curves(df, args.out)
    else:
        df.to_csv(sys.stdout, **CSV_OPTIONS)
    return EXIT_OK


def cmd_monotone(args):
    specs = specs_from_args(args)
    if not specs:
        raise rf_errors.ConfigError('No filter given (--filter).')
    exit_code = EXIT_OK
    for spec in specs:
        report = rf_response.check_monotone_increasing(
            spec, args.lambda_max, args.grid)
        print(report.verdict_line())
        if report.poles:
            logger.warning('%s has pole(s) on [0, %g].', spec.label,
                           args.lambda_max)
        if not report.monotone:
            exit_code = EXIT_VIOLATION
    return exit_code


def cmd_kernel_check(args):
    specs = specs_from_args(args)
    if len(specs) != 1:
        raise rf_errors.ConfigError(
            'kernel-check needs exactly one filter, got {}.'.format(
                len(specs)))
    spec = specs[0]
    ds = _load(args.dataset)
    laplacian = rf_graph.renormalize(ds.graph) if args.renormalize \
        else rf_graph.normalized_laplacian(ds.graph)
    filt = rf_filters.build_filter(spec, laplacian, args.construction,
                                   max_nodes=args.max_nodes)
    report = rf_filters.kernel_check(filt, filt.spec, laplacian,
                                     max_nodes=args.max_nodes)
    df = pd.DataFrame(report.items(), columns=['key', 'value'])
    _write_table(df, args.out)
    return EXIT_OK if report.psd else EXIT_VIOLATION


def cmd_convert(args):
    if args.format == 'planetoid':
        rf_dataset.convert_planetoid(args.raw, args.name, args.out)
    else:
        rf_dataset.convert_linqs(args.raw, args.name, args.out, args.seed)
    return EXIT_OK


def experiment_config_from_args(args):
    file_values = rf_config.load_config_file(args.config) \
        if args.config else {}
    train_flags = {'max_epochs': args.epochs, 'learning_rate': args.lr,
                   'dropout': args.dropout, 'patience': args.patience,
                   'weight_decay': args.weight_decay,
                   'n_layers': args.layers,
                   'learn_filter': False if args.fixed_filter else None}
    flags = {'dataset': args.dataset, 'hidden_units': args.hidden,
             'seeds': args.seeds, 'root_seed': args.root_seed,
             'out': args.out, 'train': train_flags,
             'laplacian': 'renormalized' if args.renormalize else None}
    families = _families(args)
    if getattr(args, 'preset', None) == 'decoupling':
        flags['filters'] = DECOUPLING_FILTERS
    elif families:
        flags['filters'] = [MLP if family == MLP
                            else _filter_values(args, family)
                            for family in families]
    return rf_config.resolve_experiment_config(file_values, flags)


def _spec_columns(spec):
    if spec is None:
        return {'family': MLP, 's': None, 'a': None, 'p': None, 'K': None,
                'theta': '', 'c': None}
    d = spec.to_dict()
    return {'family': d['family'], 's': d['s'], 'a': d['a'], 'p': d['p'],
            'K': d['K'], 'theta': '|'.join(repr(t) for t in d['theta']),
            'c': d['c']}


def _run_sweep(ds, groups, experiment, run):
    """Run every grid combination over all seeds.

    Every run leaves its curves (.csv) and its weights (.weights) under
    out/reports.

    Args:
        groups (list): (group name, [(spec or None, TrainConfig), ...]).
        run (callable): run(ds, spec, train_config) -> (report, model).

    Returns:
        tuple of DataFrames: (sweep, summary, seeds, timing); summary
        holds the combination with the best mean validation accuracy of
        every group.

    """
    report_dir = os.path.join(experiment.out, 'reports')
    os.makedirs(report_dir, exist_ok=True)
    seeds = rf_utils.child_seeds(experiment.root_seed, experiment.seeds)
    sweep_rows, seed_rows, timing_rows, summary_rows = [], [], [], []
    for group, combinations in groups:
        best = None
        for spec, train_config in combinations:
            label = spec.label if spec is not None else MLP
            val_accs, test_accs, epoch_times, rows = [], [], [], []
            for seed in seeds:
                cfg = train_config.replace(seed=seed)
                try:
                    report, model = run(ds, spec, cfg)
                except rf_errors.RegfiltersBaseException:
                    logger.error('Run of %s (hidden %d) with seed %d failed.',
                                 label, cfg.hidden_units, seed)
                    raise
                val_acc = float(report.df['val_acc'].iloc[-1])
                val_accs.append(val_acc)
                test_accs.append(report.test_accuracy)
                epoch_times.append(report.mean_epoch_time)
                stem = os.path.join(
                    report_dir, rf_utils.get_valid_filename_from_string(
                        '{}_h{}_seed{}'.format(label, cfg.hidden_units,
                                                 seed)))
                report.to_csv(stem + '.csv')
                model.save_weights(stem + '.weights')
                rows.append(dict(filter=label,
                                 hidden_units=cfg.hidden_units, seed=seed,
                                 epochs_run=report.epochs_run,
                                 val_accuracy=val_acc,
                                 test_accuracy=report.test_accuracy))
            row = dict(group=group, filter=label, **_spec_columns(spec),
                       hidden_units=train_config.hidden_units,
                       seeds=len(seeds),
                       mean_val_accuracy=float(np.mean(val_accs)),
                       std_val_accuracy=float(np.std(val_accs)),
                       mean_test_accuracy=float(np.mean(test_accs)),
                       std_test_accuracy=float(np.std(test_accs)))
            sweep_rows.append(row)
            timing_rows.append(dict(filter=label,
                                    hidden_units=train_config.hidden_units,
                                    mean_epoch_time=float(
                                        np.mean(epoch_times))))
            if best is None or row['mean_val_accuracy'] > \
                    best[0]['mean_val_accuracy']:
                best = (row, rows)
        logger.info('Selected %s (hidden %d) for %s: test accuracy '
                    '%.4f +- %.4f', best[0]['filter'],
                    best[0]['hidden_units'], group,
                    best[0]['mean_test_accuracy'],
                    best[0]['std_test_accuracy'])
        summary_rows.append(best[0])
        seed_rows.extend(best[1])
    return (pd.DataFrame(sweep_rows), pd.DataFrame(summary_rows),
            pd.DataFrame(seed_rows), pd.DataFrame(timing_rows))


def _write_experiment(experiment, tables):
    os.makedirs(experiment.out, exist_ok=True)
    for name, df in zip(('sweep', 'summary', 'seeds', 'timing'), tables):
        df.to_csv(os.path.join(experiment.out, '{}.csv'.format(name)),
                  **CSV_OPTIONS)
    logger.info('Results written to %s', experiment.out)


def cmd_train(args):
    experiment = experiment_config_from_args(args)
    if not experiment.filters:
        raise rf_errors.ConfigError('No filter given (--filter or config '
                                    'filters).')
    if any(f.get('family') == MLP for f in experiment.filters):
        raise rf_errors.ConfigError('The mlp pseudo-filter belongs to '
                                    'decouple.')
    ds = _load(experiment.dataset)

    def run(ds, spec, cfg):
        return rf_training.train(ds, spec, cfg, experiment.laplacian)

    tables = _run_sweep(ds, experiment.groups(), experiment, run)
    _write_experiment(experiment, tables)
    return EXIT_OK


def cmd_decouple(args):
    experiment = experiment_config_from_args(args)
    if not experiment.filters:
        raise rf_errors.ConfigError('No filter given (--filter, --preset '
                                    'or config filters).')
    ds = _load(experiment.dataset)

    def run(ds, spec, cfg):
        if spec is None:
            return rf_training.mlp_train(ds, cfg.n_layers, cfg)
        return rf_training.decoupled_experiment(
            ds, spec, cfg, experiment.laplacian)

    tables = _run_sweep(ds, experiment.groups(), experiment, run)
    _write_experiment(experiment, tables)
    return EXIT_OK


COMMANDS = {
    'spectrum': cmd_spectrum,
    'curves': cmd_curves,
    'train': cmd_train,
    'decouple': cmd_decouple,
    'kernel-check': cmd_kernel_check,
    'monotone': cmd_monotone,
    'convert': cmd_convert,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format='%(asctime)s - %(levelname)s - %(message)s')
    try:
        return COMMANDS[args.command](args)
    except (rf_errors.ConfigError, rf_errors.InvalidFilterSpecError) as e:
        logger.error('%s', e)
        return EXIT_USAGE
    except rf_errors.RegfiltersBaseException as e:
        logger.error('%s', e)
        return EXIT_RUNTIME
    except (ValueError, IndexError, OSError) as e:
        logger.error('%s', e)
        return EXIT_RUNTIME


if __name__ == '__main__':
    sys.exit(main())
