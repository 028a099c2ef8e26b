#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages


setup(
    name='branchrule',
    version='0.1.0',
    description=(
        'Exact verification of the complementary weighted branching rule '
        'for hook lengths: polynomial identities, the relabeling bijection '
        'and weighted hook walks.'
    ),
    packages=find_packages(exclude=['tests', 'tests.*']),
    include_package_data=True,
    package_data={
        'branchrule': ['templates/*.txt', 'data/*.yaml'],
    },
    install_requires=[
        'greenlet',
        'jinja2',
        'pyyaml',
    ],
    extras_require={
        'tests': ['pytest', 'pytest-cov', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['branchrule=branchrule.core.main:run'],
    },
)
