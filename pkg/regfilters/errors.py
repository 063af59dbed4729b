# -*- coding: utf-8 -*-
"""
Created on Mon Sep 14 2026 at 08:12UTC

Exceptions raised by regfilters.

"""


class RegfiltersBaseException(Exception):
    """Base Exception for the regfilters project."""
    pass


class RegfiltersDefaultMessageException(RegfiltersBaseException):
    """Exception with a default message."""
    message_default = None

    def __init__(self, message=None):
        if not message:
            message = self.message_default
        super().__init__(message)


class DimensionMismatchError(RegfiltersBaseException):
    """Raise if the shapes of two operands do not conform."""
    message_template = '{}: expected dimension {} but got {}.'

    def __init__(self, what, expected, actual):
        message = self.message_template.format(what, expected, actual)
        super().__init__(message)


class AsymmetricMatrixError(RegfiltersDefaultMessageException):
    """Raise if a matrix that must be symmetric is not."""
    message_default = 'Matrix is not symmetric within tolerance.'


class NotSquareMatrixError(RegfiltersDefaultMessageException):
    """Raise if a matrix that must be square is not."""
    message_default = 'Matrix must be square.'


class DenseCapExceededError(RegfiltersBaseException):
    """Raise if a dense O(n^3) path is requested for a too large matrix."""
    message_template = 'Exact path unavailable for n={} (cap is {}), '\
        'use approximant.'

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(self.message_template.format(n, cap))


class PoleError(RegfiltersBaseException):
    """Raise if a frequency response is not finite on the spectrum."""
    message_template = 'Frequency response of {} is not finite at '\
        'eigenvalue lambda={!r}.'

    def __init__(self, label, eigenvalue):
        self.eigenvalue = eigenvalue
        super().__init__(self.message_template.format(label, eigenvalue))


class ConvergenceError(RegfiltersDefaultMessageException):
    """Raise if an iterative method does not converge."""
    message_default = 'Iterative method did not converge.'


class DatasetFormatError(RegfiltersBaseException):
    """Raise if a dataset file is missing or malformed.

    Args:
        filename (str): File in which the problem was found.
        line (int or None): 1-based line number, None for whole-file
            problems (e.g. a missing file).
        reason (str): Human readable description.

    """
    message_template = '{}:{}: {}'

    def __init__(self, filename, line, reason):
        self.filename = filename
        self.line = line
        self.reason = reason
        location = line if line is not None else '-'
        super().__init__(self.message_template.format(
            filename, location, reason))


class NonFiniteError(RegfiltersDefaultMessageException):
    """Raise if a loss or an activation becomes non-finite."""
    message_default = 'Non-finite value encountered.'


class InvalidFilterSpecError(RegfiltersDefaultMessageException):
    """Raise if a FilterSpec violates the constraints of its family."""
    message_default = 'Invalid filter specification.'


class ConfigError(RegfiltersDefaultMessageException):
    """Raise if an experiment configuration is unusable."""
    message_default = 'Invalid configuration.'
