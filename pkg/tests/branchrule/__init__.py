# -*- coding: utf-8 -*-

import os
import sys

_BRANCHRULE_PATH = os.path.dirname(__file__)
for i in range(2):  # tests/branchrule
    _BRANCHRULE_PATH = os.path.dirname(_BRANCHRULE_PATH)
sys.path.insert(0, _BRANCHRULE_PATH)

os.environ.setdefault(
    'BRANCHRULE_PROJECT',
    os.path.join(_BRANCHRULE_PATH, 'tests', 'test_project.py')
)
