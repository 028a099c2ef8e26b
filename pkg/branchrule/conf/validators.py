# -*- coding: utf-8 -*-

"""Processors and validators of run configuration parameters. Processors
are called as fnc(value, key=None, config=None) and return new value,
validators have the same signature and raise ValueError.
"""

import os

from ..core import identities
from ..core import walks
from ..core.partitions import Partition, parse_partition


__all__ = ('validate_not_empty', 'validate_integer', 'validate_positive',
           'validate_non_negative', 'validate_partition',
           'validate_identity', 'validate_mode', 'validate_region',
           'validate_file', 'process_integer', 'process_bool',
           'process_partition', 'process_identity', 'process_mode',
           'process_region')


MODE_ALIASES = {
    'expand': identities.FULL_EXPANSION,
    'full': identities.FULL_EXPANSION,
    'random': identities.RANDOM_EVAL,
}
TRUE_VALUES = ('1', 'true', 'yes', 'on')
FALSE_VALUES = ('0', 'false', 'no', 'off', '')


def validate_not_empty(value, key=None, config=None):
    """Raises ValueError if given value is empty."""
    if value is None or value == '':
        raise ValueError('Empty value is not allowed for %s' % key)


def validate_integer(value, key=None, config=None):
    """Raises ValueError if given value is not an integer."""
    if value is None or value == '':
        return
    try:
        int(value)
    except (TypeError, ValueError):
        raise ValueError('Given value is not an integer: %s' % value)


def validate_positive(value, key=None, config=None):
    """Raises ValueError if given value is not a positive integer."""
    if value is None or value == '':
        return
    validate_integer(value, key=key, config=config)
    if int(value) < 1:
        raise ValueError('Value of %s has to be positive: %s' % (key, value))


def validate_non_negative(value, key=None, config=None):
    if value is None or value == '':
        return
    validate_integer(value, key=key, config=config)
    if int(value) < 0:
        raise ValueError('Value of %s has to be non-negative: %s'
                         % (key, value))


def validate_partition(value, key=None, config=None):
    """Raises ValueError if given value does not describe a partition."""
    if value is None or value == '' or isinstance(value, Partition):
        return
    parse_partition(value)


def validate_identity(value, key=None, config=None):
    if value not in identities.IDENTITIES:
        raise ValueError('Unknown identity: %s. Valid identities: %s'
                         % (value, ', '.join(identities.IDENTITIES)))


def validate_mode(value, key=None, config=None):
    if value not in identities.MODES:
        raise ValueError('Unknown verification mode: %s' % value)


def validate_region(value, key=None, config=None):
    if value is None or value == '':
        return
    if value not in walks.REGIONS:
        raise ValueError('Unknown region: %s. Valid regions: %s'
                         % (value, ', '.join(walks.REGIONS)))


def validate_file(value, key=None, config=None):
    """Raises ValueError if provided file does not exist."""
    if not value:
        return
    if not os.path.isfile(value):
        raise ValueError('Given file does not exist: %s' % value)


def process_integer(value, key=None, config=None):
    if value is None or value == '' or isinstance(value, int):
        return value
    validate_integer(value, key=key, config=config)
    return int(value)


def process_bool(value, key=None, config=None):
    if isinstance(value, bool) or value is None:
        return bool(value)
    text = str(value).strip().lower()
    if text in TRUE_VALUES:
        return True
    if text in FALSE_VALUES:
        return False
    raise ValueError('Given value is not a boolean: %s' % value)


def process_partition(value, key=None, config=None):
    if value is None or value == '' or isinstance(value, Partition):
        return value
    return parse_partition(value)


def process_identity(value, key=None, config=None):
    return str(value or '').strip().lower().replace('_', '-')


def process_mode(value, key=None, config=None):
    value = str(value or '').strip().lower()
    return MODE_ALIASES.get(value, value)


def process_region(value, key=None, config=None):
    if value is None or value == '':
        return None
    return str(value).strip().upper()
