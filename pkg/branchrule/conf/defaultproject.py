# -*- coding: utf-8 -*-

"""Default project settings"""

import os


PROJECT_NAME = 'branchrule'
PROJECT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Largest partition size for which identities are verified by expanding both
# sides. Bigger partitions fall back to random evaluation if
# EXPANSION_FALLBACK is True, otherwise verification fails with ValueError.
FULL_EXPANSION_MAX_SIZE = 8
EXPANSION_FALLBACK = True

# Random evaluation points are integers drawn uniformly from
# [RANDOM_EVAL_LOW, RANDOM_EVAL_HIGH]
RANDOM_EVAL_TRIALS = 8
RANDOM_EVAL_LOW = 1
RANDOM_EVAL_HIGH = 2 ** 31

# Monte Carlo hook walk settings. Each worker yields control after
# MONTE_CARLO_SWITCH_INTERVAL walks.
MONTE_CARLO_TRIALS = 100000
MONTE_CARLO_WORKERS = 4
MONTE_CARLO_SIGMA = 4
MONTE_CARLO_SWITCH_INTERVAL = 1000

# Unit weights used by the --uniform walk option cover row indices
# 1-margin..l+margin and column indices 1-margin..lambda_1+margin
UNIFORM_WEIGHT_MARGIN = 2

# Count of runners used for exhaustive sweeps. Round trips of a
# non-exhaustive bijection run cover the first BIJECTION_SAMPLE_SIZE
# arrangements.
SWEEP_WORKERS = 4
BIJECTION_SAMPLE_SIZE = 1000

# Version of json report documents
REPORT_SCHEMA_VERSION = 1

# List of directories where report templates will be searched in. Package
# templates are always searched last.
REPORT_TEMPLATE_DIRS = []
PACKAGE_TEMPLATE_DIR = os.path.join(PROJECT_DIR, 'templates')

# Label arrangement replayed by `bijection --demo`
DEMO_ARRANGEMENT_FILE = os.path.join(PROJECT_DIR, 'data',
                                     'demo_988666542.yaml')

# If SET_LOGGING is True branchrule will setup logging to given file, otherwise
# user has to setup logging for 'branchrule.backend' logger themselves
SET_LOGGING = False
LOG_FILE = 'branchrule.log'
LOG_LEVEL = 'INFO'
