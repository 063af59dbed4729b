# -*- coding: utf-8 -*-
"""
Created on Wed Sep 16 2026 at 08:03UTC

Dataset groups a graph, node features, labels and the train/validation/test
split of a semi-supervised node classification task.

On disk a dataset is a directory holding four UTF-8 text files:

    graph.edges   one edge per line: src<TAB>dst<TAB>weight (0-based ids)
    features.csv  n lines of d comma separated decimals (row i = node i)
    labels.csv    n lines with one integer each (-1 = unlabeled)
    split.json    {"train": [...], "val": [...], "test": [...]}
                  with an optional "num_classes" key

Converters for the public Planetoid pickles and the LINQS
content/cites files produce this format.

"""

import json
import logging
import os

import dill as pickle
import numpy as np
import scipy.sparse as sp

from . import descriptors as rf_descriptors
from . import errors as rf_errors
from . import graph as rf_graph
from . import utils as rf_utils

logger = logging.getLogger(__name__)

EDGES_FILE = 'graph.edges'
FEATURES_FILE = 'features.csv'
LABELS_FILE = 'labels.csv'
SPLIT_FILE = 'split.json'
SPLIT_KEYS = ('train', 'val', 'test')
UNLABELED = -1


class Dataset:
    """Graph, features, labels and split of a node classification task.

    Args:
        graph (Graph): The graph.
        features (array-like n x d): Node feature matrix X.
        labels (array-like of int, length n): Class of every node, -1 for
            unlabeled nodes.
        train, val, test (array-like of int): Disjoint node index sets.
        num_classes (int): Number of classes c_2. Defaults to
            max(labels) + 1.
        name (str): Human readable name.

    """

    graph = rf_descriptors.ImmutableDescriptor('graph')
    features = rf_descriptors.ImmutableArrayDescriptor('features')
    labels = rf_descriptors.ImmutableArrayDescriptor('labels')
    train = rf_descriptors.ImmutableArrayDescriptor('train')
    val = rf_descriptors.ImmutableArrayDescriptor('val')
    test = rf_descriptors.ImmutableArrayDescriptor('test')

    def __init__(self, graph, features, labels, train, val, test,
            num_classes=None, name=None):
        features = np.array(features, dtype=np.float64, copy=True)
        labels = np.array(labels, dtype=np.int64, copy=True).ravel()
        if features.ndim != 2 or features.shape[0] != graph.n:
            raise rf_errors.DimensionMismatchError(
                'feature rows', graph.n, features.shape[0])
        if labels.shape[0] != graph.n:
            raise rf_errors.DimensionMismatchError(
                'label count', graph.n, labels.shape[0])
        if num_classes is None:
            num_classes = int(labels.max()) + 1 if labels.size else 0
        self.num_classes = int(num_classes)

        split = [np.array(s, dtype=np.int64, copy=True).ravel()
                 for s in (train, val, test)]
        seen = set()
        for key, index_set in zip(SPLIT_KEYS, split):
            if index_set.size and (index_set.min() < 0 or
                    index_set.max() >= graph.n):
                raise IndexError('Split "{}" holds an index outside '
                                 '[0, {}).'.format(key, graph.n))
            members = set(index_set.tolist())
            if len(members) != index_set.size or seen & members:
                raise ValueError('Split sets must be pairwise disjoint '
                                 '("{}").'.format(key))
            seen |= members
            bad = (labels[index_set] < 0) | \
                (labels[index_set] >= self.num_classes)
            if np.any(bad):
                raise ValueError('Node {} in split "{}" has no valid '
                    'label.'.format(int(index_set[bad][0]), key))

        self.graph = graph
        self.features = features
        self.labels = labels
        self.train, self.val, self.test = split
        self.name = name or graph.name

    def __str__(self):
        return '<Dataset {} n={} d={} classes={}>'.format(
            self.name, self.n, self.n_features, self.num_classes)

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return False
        return (self.graph == other.graph and
                np.array_equal(self.features, other.features) and
                np.array_equal(self.labels, other.labels) and
                all(np.array_equal(a, b) for a, b in
                    zip(self.split, other.split)) and
                self.num_classes == other.num_classes)

    __hash__ = None

    @property
    def n(self):
        return self.graph.n

    @property
    def n_features(self):
        return self.features.shape[1]

    @property
    def split(self):
        return self.train, self.val, self.test

    def with_features(self, features):
        """Return a copy of the dataset with a different feature matrix."""
        return Dataset(self.graph, features, self.labels, self.train,
                       self.val, self.test, self.num_classes, self.name)


# LOADING

def _read_lines(path):
    if not os.path.isfile(path):
        raise rf_errors.DatasetFormatError(path, None, 'file not found')
    with open(path, 'r', encoding='utf-8') as f:
        return f.read().split('\n')


def _content_lines(lines):
    """Yield (line_number, text) skipping a single trailing empty line."""
    if lines and lines[-1] == '':
        lines = lines[:-1]
    for i, text in enumerate(lines):
        yield i + 1, text.rstrip('\r')


def _read_features(path):
    rows = []
    width = None
    for lineno, text in _content_lines(_read_lines(path)):
        try:
            row = np.array(text.split(','), dtype=np.float64)
        except ValueError:
            raise rf_errors.DatasetFormatError(
                path, lineno, 'malformed decimal in "{}"'.format(
                    text[:60]))
        if width is None:
            width = row.size
        elif row.size != width:
            raise rf_errors.DatasetFormatError(path, lineno,
                'expected {} values, got {}'.format(width, row.size))
        if not np.all(np.isfinite(row)):
            raise rf_errors.DatasetFormatError(path, lineno,
                'non-finite feature value')
        rows.append(row)
    if not rows:
        raise rf_errors.DatasetFormatError(path, None, 'no feature rows')
    return np.vstack(rows)


def _read_labels(path, n):
    labels = []
    for lineno, text in _content_lines(_read_lines(path)):
        try:
            labels.append(int(text.strip()))
        except ValueError:
            raise rf_errors.DatasetFormatError(path, lineno,
                'malformed integer label "{}"'.format(text[:60]))
        if labels[-1] < UNLABELED:
            raise rf_errors.DatasetFormatError(path, lineno,
                'label {} outside class range'.format(labels[-1]))
    if len(labels) != n:
        raise rf_errors.DatasetFormatError(path, None,
            'expected {} labels, got {}'.format(n, len(labels)))
    return np.array(labels, dtype=np.int64)


def _read_edges(path, n):
    src, dst, weight = [], [], []
    for lineno, text in _content_lines(_read_lines(path)):
        if not text.strip():
            continue
        fields = text.split('\t')
        if len(fields) != 3:
            raise rf_errors.DatasetFormatError(path, lineno,
                'expected src<TAB>dst<TAB>weight')
        try:
            i, j, w = int(fields[0]), int(fields[1]), float(fields[2])
        except ValueError:
            raise rf_errors.DatasetFormatError(path, lineno,
                'malformed edge "{}"'.format(text[:60]))
        if not (0 <= i < n and 0 <= j < n):
            raise rf_errors.DatasetFormatError(path, lineno,
                'node index out of range [0, {}): {} {}'.format(n, i, j))
        if not np.isfinite(w) or w < 0:
            raise rf_errors.DatasetFormatError(path, lineno,
                'edge weight must be finite and non-negative')
        src.append(i)
        dst.append(j)
        weight.append(w)
    return src, dst, weight


def _line_of(text, needle):
    pos = text.find(needle)
    return text.count('\n', 0, pos) + 1 if pos >= 0 else None


def _read_split(path, n):
    if not os.path.isfile(path):
        raise rf_errors.DatasetFormatError(path, None, 'file not found')
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise rf_errors.DatasetFormatError(path, e.lineno, e.msg)
    if not isinstance(obj, dict):
        raise rf_errors.DatasetFormatError(path, 1, 'expected an object')
    split = []
    for key in SPLIT_KEYS:
        lineno = _line_of(text, '"{}"'.format(key))
        if key not in obj or not isinstance(obj[key], list):
            raise rf_errors.DatasetFormatError(path, lineno,
                'missing index array "{}"'.format(key))
        values = obj[key]
        if not all(isinstance(v, int) and not isinstance(v, bool)
                   for v in values):
            raise rf_errors.DatasetFormatError(path, lineno,
                '"{}" must hold integers'.format(key))
        bad = [v for v in values if not 0 <= v < n]
        if bad:
            raise rf_errors.DatasetFormatError(path, lineno,
                'index {} in "{}" out of range [0, {})'.format(
                    bad[0], key, n))
        split.append(np.array(values, dtype=np.int64))
    num_classes = obj.get('num_classes')
    if num_classes is not None and (not isinstance(num_classes, int) or
            num_classes < 1):
        raise rf_errors.DatasetFormatError(path,
            _line_of(text, '"num_classes"'), 'invalid num_classes')
    return split, num_classes, text


def load_dataset(path, name=None):
    """Load a dataset directory.

    Args:
        path (str): Directory holding graph.edges, features.csv,
            labels.csv and split.json.
        name (str): Dataset name. Defaults to the directory name.

    Raises:
        DatasetFormatError: missing file, malformed line, out-of-range
            index or a label outside the class range; the error names the
            file and line.

    """
    if not os.path.isdir(path):
        raise rf_errors.DatasetFormatError(path, None,
                                           'dataset directory not found')
    name = name or os.path.basename(os.path.normpath(path))
    features_path = os.path.join(path, FEATURES_FILE)
    labels_path = os.path.join(path, LABELS_FILE)
    split_path = os.path.join(path, SPLIT_FILE)

    features = _read_features(features_path)
    n = features.shape[0]
    labels = _read_labels(labels_path, n)
    src, dst, weight = _read_edges(os.path.join(path, EDGES_FILE), n)
    (train, val, test), num_classes, split_text = _read_split(split_path, n)

    if num_classes is None:
        num_classes = int(labels.max()) + 1 if labels.size else 0
    too_big = np.flatnonzero(labels >= num_classes)
    if too_big.size:
        raise rf_errors.DatasetFormatError(labels_path, int(too_big[0]) + 1,
            'label {} outside class range [0, {})'.format(
                labels[too_big[0]], num_classes))
    seen = set()
    for key, index_set in zip(SPLIT_KEYS, (train, val, test)):
        lineno = _line_of(split_text, '"{}"'.format(key))
        members = set(index_set.tolist())
        if len(members) != index_set.size or members & seen:
            raise rf_errors.DatasetFormatError(split_path, lineno,
                'split sets must be pairwise disjoint')
        seen |= members
        unlabeled = index_set[labels[index_set] < 0]
        if unlabeled.size:
            raise rf_errors.DatasetFormatError(labels_path,
                int(unlabeled[0]) + 1,
                'node {} is in "{}" but unlabeled'.format(
                    int(unlabeled[0]), key))

    graph = rf_graph.Graph.from_edges(n, src, dst, weight, name=name)
    dataset = Dataset(graph, features, labels, train, val, test,
                      num_classes=num_classes, name=name)
    logger.info('Loaded %s', dataset)
    return dataset


# SAVING

def save_dataset(dataset, path):
    """Write dataset into directory path using the four-file format.

    Floats are written in their shortest round-trip representation, so
    load_dataset(save_dataset(ds)) reproduces ds bit for bit.

    """
    os.makedirs(path, exist_ok=True)
    src, dst, weight = dataset.graph.edges()
    with open(os.path.join(path, EDGES_FILE), 'w', encoding='utf-8',
              newline='\n') as f:
        for i, j, w in zip(src, dst, weight):
            f.write('{}\t{}\t{}\n'.format(int(i), int(j),
                                          rf_utils.format_exact(w)))
    with open(os.path.join(path, FEATURES_FILE), 'w', encoding='utf-8',
              newline='\n') as f:
        for row in dataset.features:
            f.write(','.join(rf_utils.format_exact(v) for v in row))
            f.write('\n')
    with open(os.path.join(path, LABELS_FILE), 'w', encoding='utf-8',
              newline='\n') as f:
        for label in dataset.labels:
            f.write('{}\n'.format(int(label)))
    split = {key: [int(i) for i in index_set]
             for key, index_set in zip(SPLIT_KEYS, dataset.split)}
    split['num_classes'] = dataset.num_classes
    with open(os.path.join(path, SPLIT_FILE), 'w', encoding='utf-8',
              newline='\n') as f:
        json.dump(split, f)
        f.write('\n')
    logger.info('Saved %s to %s', dataset, path)


# CONVERSION

def _load_planetoid_object(raw_dir, name, suffix):
    path = os.path.join(raw_dir, 'ind.{}.{}'.format(name, suffix))
    if not os.path.isfile(path):
        raise rf_errors.DatasetFormatError(path, None, 'file not found')
    with open(path, 'rb') as f:
        return pickle.load(f, encoding='latin1')


def convert_planetoid(raw_dir, name, out_dir=None):
    """Convert the public Planetoid pickles of a citation dataset.

    Reads ind.<name>.{x,y,tx,ty,allx,ally,graph,test.index} and rebuilds
    the standard split: the first len(y) nodes train, the next 500
    validate, the nodes listed in test.index test. Test indices that do
    not occur in test.index (isolated Citeseer nodes) get zero features
    and stay unlabeled.

    Args:
        raw_dir (str): Directory with the Planetoid files.
        name (str): Dataset name, e.g. 'cora', 'citeseer', 'pubmed'.
        out_dir (str): If given, the dataset is saved there.

    """
    x, y, tx, ty, allx, ally, adjacency_lists = [
        _load_planetoid_object(raw_dir, name, suffix)
        for suffix in ('x', 'y', 'tx', 'ty', 'allx', 'ally', 'graph')]
    index_path = os.path.join(raw_dir, 'ind.{}.test.index'.format(name))
    test_idx_reorder = np.array(
        [int(v) for v in _read_lines(index_path) if v.strip()],
        dtype=np.int64)
    test_idx_range = np.sort(test_idx_reorder)

    tx = sp.csr_matrix(tx)
    ty = np.asarray(ty)
    full_range = test_idx_range[-1] - test_idx_range[0] + 1
    if full_range != len(test_idx_range):
        offset = test_idx_range - test_idx_range[0]
        tx_extended = sp.lil_matrix((full_range, tx.shape[1]))
        tx_extended[offset, :] = tx
        tx = tx_extended.tocsr()
        ty_extended = np.zeros((full_range, ty.shape[1]))
        ty_extended[offset, :] = ty
        ty = ty_extended

    features = sp.vstack((sp.csr_matrix(allx), tx)).tolil()
    features[test_idx_reorder, :] = features[test_idx_range, :]
    features = features.toarray()
    onehot = np.vstack((np.asarray(ally), ty))
    onehot[test_idx_reorder, :] = onehot[test_idx_range, :]
    labels = np.where(onehot.sum(axis=1) > 0, onehot.argmax(axis=1),
                      UNLABELED)
    n = features.shape[0]

    src, dst = [], []
    for node, neighbours in adjacency_lists.items():
        for other in neighbours:
            if node < n and other < n:
                src.append(node)
                dst.append(other)
    graph = rf_graph.Graph.from_edges(n, src, dst, name=name)

    n_train = np.asarray(y).shape[0]
    train = np.arange(n_train)
    val = np.arange(n_train, min(n_train + 500, n))
    val = val[(labels[val] >= 0) & ~np.isin(val, test_idx_range)]
    dataset = Dataset(graph, features, labels, train, val, test_idx_range,
                      num_classes=onehot.shape[1], name=name)
    if out_dir:
        save_dataset(dataset, out_dir)
    return dataset


def planetoid_style_split(labels, num_classes, seed, per_class=20,
        n_val=500, n_test=1000):
    """Random split with per_class training nodes per class.

    The remaining labeled nodes are shuffled; the first n_val validate and
    the next n_test test.

    """
    rng = np.random.default_rng(seed)
    train = []
    for c in range(num_classes):
        members = np.flatnonzero(labels == c)
        train.extend(rng.permutation(members)[:per_class].tolist())
    train = np.sort(np.array(train, dtype=np.int64))
    rest = np.setdiff1d(np.flatnonzero(labels >= 0), train)
    rest = rng.permutation(rest)
    val = np.sort(rest[:n_val])
    test = np.sort(rest[n_val:n_val + n_test])
    return train, val, test


def convert_linqs(raw_dir, name, out_dir=None, seed=0):
    """Convert LINQS <name>.content / <name>.cites files.

    Nodes are numbered in content-file order, class names are mapped to
    integers in sorted order and citations are treated as undirected
    edges. Citations that reference unknown papers are dropped. The split
    is drawn with planetoid_style_split().

    """
    content_path = os.path.join(raw_dir, '{}.content'.format(name))
    cites_path = os.path.join(raw_dir, '{}.cites'.format(name))
    ids, rows, class_names = {}, [], []
    for lineno, text in _content_lines(_read_lines(content_path)):
        fields = text.split()
        if not fields:
            continue
        if len(fields) < 3:
            raise rf_errors.DatasetFormatError(content_path, lineno,
                'expected <id> <features...> <class>')
        if fields[0] in ids:
            raise rf_errors.DatasetFormatError(content_path, lineno,
                'duplicate paper id {}'.format(fields[0]))
        ids[fields[0]] = len(ids)
        try:
            rows.append(np.array(fields[1:-1], dtype=np.float64))
        except ValueError:
            raise rf_errors.DatasetFormatError(content_path, lineno,
                'malformed feature value')
        class_names.append(fields[-1])
    classes = sorted(set(class_names))
    class_index = {c: i for i, c in enumerate(classes)}
    labels = np.array([class_index[c] for c in class_names], dtype=np.int64)

    src, dst, dropped = [], [], 0
    for lineno, text in _content_lines(_read_lines(cites_path)):
        fields = text.split()
        if not fields:
            continue
        if len(fields) != 2:
            raise rf_errors.DatasetFormatError(cites_path, lineno,
                'expected <cited> <citing>')
        if fields[0] in ids and fields[1] in ids:
            src.append(ids[fields[0]])
            dst.append(ids[fields[1]])
        else:
            dropped += 1
    if dropped:
        logger.warning('Dropped %d citation(s) to unknown papers.', dropped)

    graph = rf_graph.Graph.from_edges(len(ids), src, dst, name=name)
    train, val, test = planetoid_style_split(labels, len(classes), seed)
    dataset = Dataset(graph, np.vstack(rows), labels, train, val, test,
                      num_classes=len(classes), name=name)
    if out_dir:
        save_dataset(dataset, out_dir)
    return dataset
