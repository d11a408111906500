#!/usr/bin/env python

"Setuptools params"

from setuptools import setup
from os.path import join

# Get version number from source tree
import sys
sys.path.append( '.' )
from quartic import VERSION

scripts = [ join( 'bin', filename ) for filename in [ 'quartic' ] ]

modname = distname = 'quartic'

setup(
    name=distname,
    version=VERSION,
    description='Prime triples, cyclotomic splitting and the equation '
                'x^4 - q^4 = p*y^r',
    packages=[ 'quartic', 'quartic.test' ],
    package_data={ 'quartic.test': [ 'golden/*.json' ] },
    long_description="""
        quartic decides the hypotheses of a non-existence theorem
        for coprime solutions of x^4 - q^4 = p*y^r, computes the
        splitting of rational primes in cyclotomic and Kummer
        fields, and verifies, searches and traces integer
        solutions of the equation, all in exact integer arithmetic.
        """,
    classifiers=[
          "License :: OSI Approved :: BSD License",
          "Programming Language :: Python",
          "Programming Language :: Python :: 3",
          "Intended Audience :: Science/Research",
          "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords='number theory diophantine cyclotomic kummer primitive root',
    license='BSD',
    python_requires='>=3.7',
    install_requires=[
        'setuptools',
        'sympy',
        'pytest',
        'more-itertools'
    ],
    scripts=scripts,
)
