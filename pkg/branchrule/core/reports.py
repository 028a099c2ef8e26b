# -*- coding: utf-8 -*-

"""Text reports rendered from jinja2 templates, json report documents and
yaml data files.
"""

import json
import logging

import jinja2
import yaml

from ..conf import project
from ..utils import strings
from . import bijection
from .partitions import Cell, parse_partition


LOG = logging.getLogger('branchrule.backend')


class ReportLibrary(object):
    """Renders text reports. Templates are searched in project's
    REPORT_TEMPLATE_DIRS first and in package templates last.
    """

    def __init__(self, template_dirs=None):
        if template_dirs is None:
            template_dirs = list(project.REPORT_TEMPLATE_DIRS)
        template_dirs = template_dirs + [project.PACKAGE_TEMPLATE_DIR]
        loader = jinja2.FileSystemLoader(searchpath=template_dirs)
        self._env = jinja2.Environment(loader=loader, trim_blocks=True,
                                       lstrip_blocks=True,
                                       keep_trailing_newline=True)
        self._env.filters['verdict'] = strings.verdict_message
        self._env.filters['cell'] = format_cell

    def render(self, name, context=None):
        """Renders template of given name (without suffix) with context."""
        template = self._env.get_template('%s.txt' % name)
        LOG.debug('Rendering report template %s' % template.filename)
        return template.render(**(context or {}))


def format_cell(cell):
    return '({0},{1})'.format(*cell)


def make_document(command, config, results, passed):
    """Returns json report document of a finished command."""
    return {
        'schema': project.REPORT_SCHEMA_VERSION,
        'command': command,
        'config': config,
        'results': results,
        'pass': bool(passed),
    }


def dump_json(document):
    return json.dumps(document, sort_keys=True, indent=2) + '\n'


def load_yaml(path):
    """Loads yaml (or json) data file."""
    with open(path) as datafile:
        try:
            return yaml.safe_load(datafile)
        except yaml.YAMLError as ex:
            raise ValueError('Failed to parse data file %s: %s' % (path, ex))


class DemoArrangement(object):
    """Worked example: arrangement F with its expected walk and image."""

    def __init__(self, partition, arrangement, walk, image):
        self.partition = partition
        self.arrangement = arrangement
        self.walk = walk
        self.image = image


def load_demo_arrangement(path=None):
    path = path or project.DEMO_ARRANGEMENT_FILE
    data = load_yaml(path)
    try:
        lam = parse_partition(data['partition'])
        F = bijection.parse_arrangement(data['arrangement'], lam)
        G = bijection.parse_arrangement(data['image'], lam)
        walk = [Cell(*c) for c in data['walk']]
    except (KeyError, TypeError) as ex:
        raise ValueError('Invalid demo arrangement file %s: %s' % (path, ex))
    return DemoArrangement(lam, F, walk, G)
