import random
from fractions import Fraction

import pytest

from mirabolic import (
    EigenvalueClass,
    ExactMatrix,
    OrbitDatum,
    Partition,
    Scalar,
)
from mirabolic.corpus import complex_corpus, real_corpus


def S(re, im=0):
    return Scalar(Fraction(re), Fraction(im))


def orbit(field, *classes):
    """orbit('C', (0, [2,1]), ...) or ('R', (0, '1/2', [1]), ...) for pairs."""
    built = []
    for spec in classes:
        if len(spec) == 2:
            re, parts = spec
            built.append(EigenvalueClass(Fraction(re), Partition(parts)))
        else:
            re, im, parts = spec
            built.append(EigenvalueClass(Fraction(re), Partition(parts), im=Fraction(im)))
    return OrbitDatum(field, built)


def example_27_matrix(n, a_values=None, b_values=None):
    """Diagonal head, dense last row, zero corner: the depth-n workhorse."""
    if a_values is None:
        a_values = list(range(1, n))
    if b_values is None:
        b_values = [1] * (n - 1)
    rows = [[Scalar(0)] * n for _ in range(n)]
    for i, a in enumerate(a_values):
        rows[i][i] = Scalar(Fraction(a))
    for j, b in enumerate(b_values):
        rows[n - 1][j] = Scalar(Fraction(b))
    return ExactMatrix(rows)


@pytest.fixture(scope="session")
def complex_corpus_4():
    return list(complex_corpus(4))


@pytest.fixture(scope="session")
def real_corpus_4():
    return list(real_corpus(4, require_pair=True))


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240917)
