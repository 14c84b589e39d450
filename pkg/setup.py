#!/usr/bin/env python

import os

from setuptools import find_packages
from setuptools import setup

NAME =               'hlmoments'
VERSION =            '0.1.0'
AUTHOR =             'hlmoments developers'
AUTHOR_EMAIL =       ''
URL =                ''
MAINTAINER =         AUTHOR
MAINTAINER_EMAIL =   AUTHOR_EMAIL
DESCRIPTION =        'Exact Hall-Littlewood moment inversion for random abelian p-groups'
LONG_DESCRIPTION =   DESCRIPTION
DOWNLOAD_URL =       URL
LICENSE =            'BSD'
CLASSIFIERS = [
    'Development Status :: 3 - Alpha',
    'Intended Audience :: Developers',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: BSD License',
    'Operating System :: OS Independent',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics']
PACKAGES =           find_packages(exclude=['tests', 'examples', 'examples.*'])

docs_extras = [
    'sphinx >= 1.3',
    'sphinx_rtd_theme >= 0.1.6',
]

tests_extras = [
    'deepdiff',
    'hypothesis',
    'pytest',
    'sympy',
]

if __name__ == "__main__":
    if os.path.exists('MANIFEST'):
        os.remove('MANIFEST')

    setup(
        name = NAME,
        version = VERSION,
        author = AUTHOR,
        author_email = AUTHOR_EMAIL,
        license = LICENSE,
        classifiers = CLASSIFIERS,
        description = DESCRIPTION,
        long_description = LONG_DESCRIPTION,
        url = URL,
        maintainer = MAINTAINER,
        maintainer_email = MAINTAINER_EMAIL,
        packages = PACKAGES,
        include_package_data = True,
        python_requires = '>=3.11',
        install_requires = [
            'numpy',
            'pandas',
            'tqdm'],
        extras_require = {
            'doc': docs_extras,
            'test': tests_extras,
        },
        entry_points = {
            'console_scripts': ['hlmoments = hlmoments.cli:main'],
        }
    )
