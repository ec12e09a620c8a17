#!/usr/bin/env python
from setuptools import find_packages
from setuptools import setup

DISTNAME = 'mubpy'
DESCRIPTION = "MubPy: Mutually Unbiased Bases and Entanglement"
LONG_DESCRIPTION = "mubpy is a Python library for constructing and verifying complete sets of mutually unbiased bases in prime, prime-squared and composite dimensions, with exact root-of-unity arithmetic, product-basis analysis and purity-based entanglement checks."

MAINTAINER = 'MubPy Developers'
LICENSE = "Apache License, Version 2"
VERSION = "1.0.0"

classifiers = ['Development Status :: 4 - Beta',
               'Programming Language :: Python',
               'Programming Language :: Python :: 3',
               'Programming Language :: Python :: 3.9',
               'Programming Language :: Python :: 3.10',
               'Programming Language :: Python :: 3.11',
               'License :: OSI Approved :: Apache Software License',
               'Intended Audience :: Science/Research',
               'Topic :: Scientific/Engineering',
               'Topic :: Scientific/Engineering :: Mathematics',
               'Topic :: Scientific/Engineering :: Physics',
               'Operating System :: OS Independent']

install_reqs = [
    'joblib>=1.0',
    'numpy>=1.20',
    'pandas>=1.0',
    'pyyaml>=5.0',
    'scipy>=1.7',
]

tests_reqs = [
    'pytest>=6.0',
]

if __name__ == "__main__":
    setup(
        name=DISTNAME,
        version=VERSION,
        maintainer=MAINTAINER,
        description=DESCRIPTION,
        license=LICENSE,
        long_description=LONG_DESCRIPTION,
        packages=find_packages(exclude=['tests']),
        package_data={'mubpy': ['config/*.yml', 'fixtures/*.json', 'fixtures/*.yml']},
        classifiers=classifiers,
        python_requires='>=3.9',
        install_requires=install_reqs,
        extras_require={'tests': tests_reqs},
        entry_points={
            'console_scripts': [
                'mubpy = mubpy.__main__:main',
            ],
        }
    )
