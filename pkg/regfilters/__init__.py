# -*- coding: utf-8 -*-
"""
Created on Mon Sep 14 2026 at 08:00UTC

regfilters: regularized spectral graph convolution filters and a numpy
graph convolutional network to train them.

"""

__all__ = [
    'cli',
    'config',
    'dataset',
    'descriptors',
    'errors',
    'filters',
    'graph',
    'model',
    'report',
    'response',
    'spectral',
    'training',
    'utils',
    'validation',
]

from .dataset import Dataset, load_dataset, save_dataset
from .filters import FilterBasis, FilterMatrix, build_filter
from .graph import Graph
from .model import GcnModel, TrainConfig
from .report import TrainReport
from .response import FilterFamily, FilterSpec
from .spectral import EigenSystem
