# -*- coding: utf-8 -*-
"""
Created on Tue Sep 15 2026 at 07:58UTC

Small helpers shared by the regfilters modules.

"""

import hashlib
import json
import math
import re

import numpy as np
import scipy.sparse as sp


def as_csr(m):
    """Return m as a canonical float64 CSR matrix.

    Canonical means: duplicates summed, explicit zeros pruned and column
    indices sorted within each row.

    """
    csr = sp.csr_matrix(m, dtype=np.float64, copy=True)
    csr.sum_duplicates()
    csr.eliminate_zeros()
    csr.sort_indices()
    return csr


def to_dense(m):
    """Return a dense float64 ndarray of a dense or sparse matrix."""
    if sp.issparse(m):
        return m.toarray()
    return np.asarray(m, dtype=np.float64)


def matmul(a, b):
    """Matrix product that works for dense/sparse operand combinations.

    The result is dense unless both operands are sparse.

    """
    result = a @ b
    if sp.issparse(result) and not (sp.issparse(a) and sp.issparse(b)):
        return result.toarray()
    if isinstance(result, np.matrix):
        return np.asarray(result)
    return result


def format_decimal(value):
    """Format a real with 9 significant digits; non-finite gives ''."""
    if value is None or not math.isfinite(value):
        return ''
    return '{:.9g}'.format(value)


def format_exact(value):
    """Shortest representation that round-trips to the same float."""
    return repr(float(value))


def child_seeds(root_seed, count):
    """Per-run seeds derived from one root seed as root + i."""
    return [int(root_seed) + i for i in range(count)]


def config_hash(config_dict):
    """Return a short stable hash of a JSON-serializable dict."""
    canonical = json.dumps(config_dict, sort_keys=True, default=str)
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()[:16]


def get_valid_filename_from_string(string):
    tmp_str = str(string).strip().replace(' ', '_')
    return re.sub(r'(?u)[^-\w.=]', '', tmp_str)
