# -*- coding: utf-8 -*-

import logging

from ..conf import project

from . import strings


LOG = logging.getLogger('branchrule.backend')
LOG_FORMAT = '%(asctime)s [%(levelname)s]: %(message)s'
LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def set_logging(logfile=None, loglevel=None):
    """Routes records of 'branchrule.backend' logger to a log file. Nothing
    is done unless project has SET_LOGGING enabled or arguments are given.
    File handler installed by previous call is replaced, stdout stays
    reserved for reports.
    """
    if not (logfile or loglevel or project.SET_LOGGING):
        return None
    for old in [h for h in LOG.handlers if getattr(h, 'branchrule', False)]:
        LOG.removeHandler(old)
        old.close()
    handler = logging.FileHandler(logfile or project.LOG_FILE, mode='a')
    handler.branchrule = True
    handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
    LOG.addHandler(handler)
    LOG.setLevel(getattr(logging, loglevel or project.LOG_LEVEL))
    LOG.propagate = False
    return handler
