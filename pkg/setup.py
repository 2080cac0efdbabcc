#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The setup script."""

from setuptools import find_packages, setup

with open('README.md', encoding='utf-8') as readme_file:
    readme = readme_file.read()

with open('HISTORY.md', encoding='utf-8') as history_file:
    history = history_file.read()

install_requires = [
    'numpy>=1.18.0,<3',
    'pandas>=1.1,<3',
    'scipy>=1.6,<2',
    'pyyaml>=5.1,<7',
]

development_requires = [
    # general
    'pip>=9.0.1',
    'bumpversion>=0.5.3,<0.6',
    'watchdog>=0.8.3,<3',

    # docs
    'm2r2>=0.2.5,<0.4',
    'Sphinx>=3,<6',
    'sphinx_rtd_theme>=0.5,<2',

    # style check
    'flake8>=3.7.7,<6',
    'isort>=4.3.4,<5',

    # fix style issues
    'autoflake>=1.1,<2',
    'autopep8>=1.4.3,<2',

    # distribute on PyPI
    'twine>=1.10.0,<5',
    'wheel>=0.30.0',

    # Advanced testing
    'coverage>=4.5.1,<7',
    'tox>=2.9.1,<4',
    'invoke',

    # Documentation style
    'doc8>=0.8.0,<0.9',
    'pydocstyle>=3.0.0,<4',
]

tests_require = [
    'pytest>=3.4.2,<8',
    'pytest-cov>=2.6.0,<5',
    'pytest-rerunfailures>=9.0.0,<13',
]

setup_requires = [
    'pytest-runner>=2.11.1',
]

setup(
    author="eSampling Developers",
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering',
    ],
    description="Sampling rate versus harvested energy tradeoffs of SAR ADCs that "
                "harvest from their own input.",
    entry_points={
        'console_scripts': [
            'esampling=esampling.cli:main',
        ],
    },
    extras_require={
        'test': tests_require,
        'dev': tests_require + development_requires,
    },
    install_requires=install_requires,
    license="MIT license",
    long_description=readme + '\n\n' + history,
    long_description_content_type='text/markdown',
    include_package_data=True,
    keywords='esampling adc sampling energy-harvesting',
    name='esampling',
    packages=find_packages(include=['esampling', 'esampling.*']),
    python_requires='>=3.8,<3.12',
    setup_requires=setup_requires,
    test_suite='tests',
    tests_require=tests_require,
    version='0.1.0.dev0',
    zip_safe=False,
)
