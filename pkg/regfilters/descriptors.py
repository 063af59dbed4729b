# -*- coding: utf-8 -*-
"""
Created on Mon Sep 14 2026 at 09:40UTC

Descriptors used in regfilters in order to facilitate the handling of
attributes that are immutable, must lie in a numeric range, or must be one
of a fixed set of choices.

"""

import numbers

import numpy as np

from . import errors as rf_errors


class ImmutableDescriptor:
    """Check that an attribute is immutable.

    Raise an exception if an attribute is assigned a value for the second
    time.

    """

    def __init__(self, name):
        self.name = '_' + name
        self.name_raw = name

    def __get__(self, instance, instance_type):
        if instance is None:
            return self
        return getattr(instance, self.name, None)

    def __set__(self, instance, value):
        if hasattr(instance, self.name):
            raise AttributeError(
                'Cannot set immutable attribute "{}".'.format(self.name_raw))
        setattr(instance, self.name, value)


class ImmutableArrayDescriptor(ImmutableDescriptor):
    """Immutable attribute holding a numpy array or a scipy sparse matrix.

    The underlying buffers are flagged read-only so that in-place
    modifications fail as well.

    """

    def __set__(self, instance, value):
        for array in _buffers_of(value):
            array.flags.writeable = False
        super().__set__(instance, value)


def _buffers_of(value):
    if isinstance(value, np.ndarray):
        return [value]
    buffers = []
    for attr in ('data', 'indices', 'indptr'):
        array = getattr(value, attr, None)
        if isinstance(array, np.ndarray):
            buffers.append(array)
    return buffers


class BoundedNumberDescriptor:
    """Check that a numeric attribute lies within bounds.

    Args:
        name (str): Name of the attribute.
        default: Value returned when the attribute was never set.
        lower (float or None): Lower bound. None means unbounded.
        upper (float or None): Upper bound. None means unbounded.
        lower_inclusive (bool): Whether value == lower is allowed.
        upper_inclusive (bool): Whether value == upper is allowed.
        integer (bool): Require an integral value.

    """

    def __init__(self, name, default=None, lower=None, upper=None,
            lower_inclusive=True, upper_inclusive=True, integer=False):
        self.name = '_' + name
        self.name_raw = name
        self.default = default
        self.lower = lower
        self.upper = upper
        self.lower_inclusive = lower_inclusive
        self.upper_inclusive = upper_inclusive
        self.integer = integer

    def __get__(self, instance, instance_type):
        if instance is None:
            return self
        return getattr(instance, self.name, self.default)

    def __set__(self, instance, value):
        if value is None:
            setattr(instance, self.name, self.default)
            return
        setattr(instance, self.name, self.check(value))

    def check(self, value):
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise rf_errors.InvalidFilterSpecError(
                '"{}" must be a real number, got {!r}.'.format(
                    self.name_raw, value))
        if self.integer:
            if int(value) != value:
                raise rf_errors.InvalidFilterSpecError(
                    '"{}" must be an integer, got {!r}.'.format(
                        self.name_raw, value))
            value = int(value)
        else:
            value = float(value)
        if not np.isfinite(value):
            raise rf_errors.InvalidFilterSpecError(
                '"{}" must be finite.'.format(self.name_raw))
        if self.lower is not None:
            if value < self.lower or (
                    value == self.lower and not self.lower_inclusive):
                raise rf_errors.InvalidFilterSpecError(
                    '"{}"={!r} is below its lower bound {!r}.'.format(
                        self.name_raw, value, self.lower))
        if self.upper is not None:
            if value > self.upper or (
                    value == self.upper and not self.upper_inclusive):
                raise rf_errors.InvalidFilterSpecError(
                    '"{}"={!r} is above its upper bound {!r}.'.format(
                        self.name_raw, value, self.upper))
        return value


class ChoiceDescriptor:
    """Check that an attribute is one of a fixed set of choices.

    Strings are matched case-insensitively against the values of the
    choices (which may be an Enum class).

    """

    def __init__(self, name, choices, default=None):
        self.name = '_' + name
        self.name_raw = name
        self.choices = choices
        self.default = default

    def __get__(self, instance, instance_type):
        if instance is None:
            return self
        return getattr(instance, self.name, self.default)

    def __set__(self, instance, value):
        if value is None:
            setattr(instance, self.name, self.default)
            return
        for choice in self.choices:
            if value is choice or value == choice:
                setattr(instance, self.name, choice)
                return
            choice_value = getattr(choice, 'value', choice)
            if isinstance(value, str) and \
                    value.lower() == str(choice_value).lower():
                setattr(instance, self.name, choice)
                return
        allowed = [getattr(c, 'value', c) for c in self.choices]
        raise rf_errors.InvalidFilterSpecError(
            '"{}" must be one of {}, got {!r}.'.format(
                self.name_raw, allowed, value))
