# -*- coding: utf-8 -*-

"""
branchrule: Exact verification of the complementary weighted branching rule
for hook lengths.
"""

__version__ = '0.1.0'
__license__ = 'LGPL'

from .conf import project
