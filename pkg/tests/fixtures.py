# -*- coding: utf-8 -*-
"""
Created on Mon Oct 05 2026 at 08:10UTC

Graphs and datasets shared by the test cases.

"""

import os

import numpy as np

from regfilters.dataset import Dataset, save_dataset
from regfilters.graph import Graph

DATA_ENV = 'REGFILTERS_DATA'


def k2_graph():
    """Two nodes joined by one unit edge."""
    return Graph(np.array([[0.0, 1.0], [1.0, 0.0]]), name='K2')


def k3_graph():
    """Triangle with unit weights."""
    return Graph(np.ones((3, 3)) - np.identity(3), name='K3')


def path_graph(n):
    """Path 0 - 1 - ... - (n-1) with unit weights."""
    return Graph.from_edges(n, range(n - 1), range(1, n), name='P{}'.format(n))


def random_graph(n, p, seed, weighted=False):
    """Erdos-Renyi graph G(n, p); weights in [0.5, 1.5] if weighted."""
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    src, dst = np.nonzero(upper)
    weight = rng.uniform(0.5, 1.5, size=len(src)) if weighted else None
    return Graph.from_edges(n, src, dst, weight, name='ER{}'.format(seed))


def random_graphs(count, n_min, n_max, seed, weighted=False):
    rng = np.random.default_rng(seed)
    return [random_graph(int(rng.integers(n_min, n_max + 1)), 0.3,
                         seed * 1000 + i, weighted)
            for i in range(count)]


def k2_dataset():
    """Two nodes, two classes, one training node per class."""
    return Dataset(k2_graph(), np.identity(2), [0, 1], [0, 1], [], [],
                   name='k2')


def k3_dataset():
    return Dataset(k3_graph(), np.identity(3), [0, 1, 1], [0], [1], [2],
                   name='k3')


def community_dataset(seed=0, n_per_class=10, n_classes=3, n_features=6):
    """Planted partition graph whose features and edges follow the classes.

    Every class has its own block of feature columns; nodes share edges
    mostly within their class. Two nodes per class train, two validate
    and the rest test.

    """
    rng = np.random.default_rng(seed)
    n = n_per_class * n_classes
    labels = np.repeat(np.arange(n_classes), n_per_class)
    same = labels[:, None] == labels[None, :]
    probability = np.where(same, 0.5, 0.03)
    upper = np.triu(rng.random((n, n)) < probability, k=1)
    src, dst = np.nonzero(upper)
    graph = Graph.from_edges(n, src, dst, name='community')
    features = rng.random((n, n_features)) * 0.3
    block = n_features // n_classes
    for c in range(n_classes):
        members = labels == c
        features[members, c * block:(c + 1) * block] += 1.0
    train, val, test = [], [], []
    for c in range(n_classes):
        members = np.flatnonzero(labels == c)
        train.extend(members[:2])
        val.extend(members[2:4])
        test.extend(members[4:])
    return Dataset(graph, features, labels, train, val, test,
                   num_classes=n_classes, name='community')


def write_dataset(ds, directory):
    save_dataset(ds, directory)
    return directory


def write_files(directory, files):
    """Write {name: text} into directory."""
    os.makedirs(directory, exist_ok=True)
    for name, text in files.items():
        with open(os.path.join(directory, name), 'w', encoding='utf-8',
                  newline='\n') as f:
            f.write(text)
    return directory


def data_dir(name):
    """Converted dataset directory under $REGFILTERS_DATA, or None."""
    root = os.environ.get(DATA_ENV)
    if not root:
        return None
    path = os.path.join(root, name)
    return path if os.path.isdir(path) else None
