# -*- coding: utf-8 -*-

import configparser
import importlib.util
import logging
import os
import textwrap

from . import defaultproject


LOG = logging.getLogger('branchrule.backend')


class Project(object):
    """Settings of a branchrule project. Project is a Python module whose
    uppercase variables override those of defaultproject. Path to the module
    is taken from the constructor or from BRANCHRULE_PROJECT environment
    variable.
    """
    def __init__(self, project=None):
        self._update(defaultproject)
        self._loaded = None
        self.load(project)

    def _update(self, module):
        for key, value in vars(module).items():
            if key.isupper():
                setattr(self, key, value)

    def load(self, project=None):
        """Loads project module from given file path. Only one project
        can be loaded, second attempt raises RuntimeError.
        """
        project = project or os.environ.get('BRANCHRULE_PROJECT')
        if not project:
            return
        if self._loaded:
            raise RuntimeError('Project %s is already loaded. Cannot load '
                               'project %s' % (self._loaded, project))
        name = os.path.splitext(os.path.basename(project))[0]
        try:
            spec = importlib.util.spec_from_file_location(name, project)
            module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(module)
        except (ImportError, OSError, AttributeError) as ex:
            raise ImportError('Failed to import project "%s".\nReason: %s'
                              % (project, ex))
        self._update(module)
        self._loaded = project
        self.PROJECT = project
        LOG.debug('Loaded project %s' % project)


class Config(object):
    """Parameters of a single command run.

    Values come from the meta defaults, then from the INI run file at
    'path' (optional) and finally from 'overrides', which hold raw command
    line values. None in overrides means the flag was not given.

    Keys of 'meta' are 'section/name', section being the command name.
    Each value is a dict: {'default': ..., 'processors': [func, ...],
    'validators': [func, ...], 'options': [...], 'usage': 'Description'}.
    """

    def __init__(self, path, meta, overrides=None):
        self._path = path
        self._meta = meta
        self._raw = dict((key, self._meta[key].get('default'))
                         for key in self._meta)
        if path:
            self._read(path)
        for key, value in (overrides or {}).items():
            self._check_key(key)
            if value is not None:
                self._raw[key] = value
        self._values = dict((key, self._process(key, value))
                            for key, value in self._raw.items())

    def _check_key(self, key):
        if key not in self._meta:
            raise KeyError('Given key %s does not exist in metadata '
                           'dictionary.' % key)

    def _read(self, path):
        if not os.path.exists(path):
            raise ValueError('Given config file does not exist: %s' % path)
        parser = configparser.ConfigParser()
        try:
            parser.read(path)
        except configparser.Error as ex:
            raise ValueError('Failed to parse config file %s: %s'
                             % (path, ex))
        for key in self._meta:
            section, variable = key.split('/', 1)
            if parser.has_option(section, variable):
                self._raw[key] = parser.get(section, variable)

    def _process(self, key, value):
        """Runs processors and validators of given parameter on value."""
        metadata = self._meta[key]
        result = value
        for fnc in metadata.get('processors', []):
            result = fnc(result, key=key, config=self)
        options = metadata.get('options')
        if options and result not in options:
            raise ValueError('Value of parameter %s is not from valid '
                             'values %s: %s' % (key, options, result))
        for fnc in metadata.get('validators', []):
            try:
                fnc(result, key=key, config=self)
            except ValueError:
                LOG.debug('Parameter validator %s(%s, key=%s) failed '
                          'validation.' % (fnc.__name__, value, key))
                raise
        return result

    def save(self, path=None):
        """Writes run file with every parameter of the run. Parameters left
        at their defaults are written commented out.
        """
        sections = {}
        for key in self._meta:
            section, variable = key.split('/', 1)
            sections.setdefault(section, []).append((key, variable))
        with open(path or self._path, 'w') as confile:
            for section, keys in sections.items():
                confile.write('\n[%s]\n' % section)
                for key, variable in keys:
                    confile.write(self._describe(key, variable))

    def _describe(self, key, variable):
        metadata = self._meta[key]
        usage = metadata.get('usage') or ''
        if metadata.get('options'):
            usage += '\nValid values: %s' % ', '.join(
                str(i) for i in metadata['options']
            )
        text = ''
        if usage:
            text = '\n%s\n' % textwrap.fill(usage, initial_indent='# ',
                                             subsequent_indent='# ',
                                             break_long_words=False)
        value, default = self._raw[key], metadata.get('default', '')
        if value and value != default:
            return text + '%s=%s\n' % (variable, value)
        return text + '#%s=%s\n' % (variable, default)

    def __getitem__(self, key):
        return self._values[key]

    def __setitem__(self, key, value):
        self._check_key(key)
        self._values[key] = self._process(key, value)
        self._raw[key] = value

    def __contains__(self, item):
        return item in self._meta

    def __iter__(self):
        return iter(self._meta)

    def items(self):
        for key in self:
            yield key, self[key]

    def raw(self, key):
        """Returns unprocessed value of given parameter."""
        return self._raw.get(key)


project = Project()
