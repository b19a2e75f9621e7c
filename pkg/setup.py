#!/usr/bin/env python3

# standards
from os import path
import setuptools


with open(path.join(path.dirname(__file__), 'README.md'), 'rb') as file_in:
    long_description = file_in.read().decode('UTF-8')


setuptools.setup(
    name='lpaf',
    version='0.1.0',
    description='Logic programs, argumentation frameworks with ungrounded attacks, and claim-augmented frameworks: stable '
                'semantics, translations, rule-refinement updates and strong equivalence',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=setuptools.find_packages(exclude=['test']),
    python_requires='>=3.10',
    entry_points={
        'console_scripts': [
            'lpaf = lpaf.cli:main',
        ],
    },
    install_requires=[],
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Artificial Intelligence',
        'Topic :: Utilities',
    ],
)
