# -*- coding: utf-8 -*-
"""
Created on Fri Sep 25 2026 at 09:02UTC

"""

import dill as pickle
import numpy as np
import pandas as pd

from . import utils as rf_utils

CURVE_COLUMNS = ['epoch', 'train_loss', 'val_loss', 'val_acc']
EPOCH_COLUMNS = CURVE_COLUMNS + ['epoch_time']


class TrainReport:
    """Storage of the outcome of one training run.

    The per-epoch values are kept in a pandas DataFrame with the columns
    epoch, train_loss, val_loss, val_acc and epoch_time.

    Args:
        label (str): Name of the filter (or model) that was trained.
        seed (int): Seed of the run.
        config_hash (str): Hash of the training configuration.

    Attributes:
        df (pandas.DataFrame): Per-epoch values.
        test_accuracy (float): Accuracy on the test set of the model
            after the last epoch.
        train_accuracy (float): Accuracy on the training set.
        stopped_early (bool): Whether early stopping ended the run.

    """

    def __init__(self, label, seed, config_hash=None):
        self.label = label
        self.seed = seed
        self.config_hash = config_hash
        self._rows = []
        self._df = None
        self.test_accuracy = None
        self.train_accuracy = None
        self.stopped_early = False

    def __str__(self):
        return '<TrainReport {} seed={} epochs={} test_acc={}>'.format(
            self.label, self.seed, self.epochs_run,
            rf_utils.format_decimal(self.test_accuracy))

    def __eq__(self, other):
        """Equality of all deterministic content (timing excluded)."""
        if not isinstance(other, TrainReport):
            return False
        return (self.label == other.label and self.seed == other.seed and
                self.test_accuracy == other.test_accuracy and
                self.train_accuracy == other.train_accuracy and
                self.stopped_early == other.stopped_early and
                self.df[CURVE_COLUMNS].equals(other.df[CURVE_COLUMNS]))

    __hash__ = None

    def add_epoch(self, epoch, train_loss, val_loss, val_acc, epoch_time):
        self._rows.append((epoch, train_loss, val_loss, val_acc, epoch_time))
        self._df = None

    def finish(self, test_accuracy, train_accuracy, stopped_early):
        if test_accuracy is not None and not 0.0 <= test_accuracy <= 1.0:
            raise ValueError('test accuracy must lie in [0, 1].')
        self.test_accuracy = test_accuracy
        self.train_accuracy = train_accuracy
        self.stopped_early = stopped_early

    @property
    def df(self):
        """Per-epoch values, built from the collected rows when read."""
        if self._df is None:
            self._df = pd.DataFrame(self._rows, columns=EPOCH_COLUMNS)
        return self._df

    @property
    def epochs_run(self):
        return len(self._rows)

    @property
    def train_loss(self):
        return self.df['train_loss'].to_numpy()

    @property
    def val_loss(self):
        return self.df['val_loss'].to_numpy()

    @property
    def mean_epoch_time(self):
        if not self._rows:
            return 0.0
        return float(np.mean(self.df['epoch_time']))

    def summary(self):
        return {'label': self.label, 'seed': self.seed,
                'epochs_run': self.epochs_run,
                'test_accuracy': self.test_accuracy,
                'train_accuracy': self.train_accuracy,
                'stopped_early': self.stopped_early,
                'config_hash': self.config_hash}

    # SAVE/LOAD

    def to_csv(self, filename):
        """Write the per-epoch curves plus a '# key=value' summary line.

        Wall-clock times are left out so the file is reproducible.

        """
        self.df[CURVE_COLUMNS].to_csv(filename, index=False,
                                      float_format='%.9g',
                                      lineterminator='\n')
        summary = self.summary()
        summary['test_accuracy'] = rf_utils.format_decimal(
            self.test_accuracy)
        summary['train_accuracy'] = rf_utils.format_decimal(
            self.train_accuracy)
        with open(filename, 'a', encoding='utf-8', newline='\n') as f:
            f.write('# {}\n'.format(' '.join(
                '{}={}'.format(k, v) for k, v in summary.items())))

    def save(self, filename):
        with open(filename, 'wb') as f:
            pickle.dump(self, f)

    @classmethod
    def load(cls, filename):
        with open(filename, 'rb') as f:
            return pickle.load(f)
