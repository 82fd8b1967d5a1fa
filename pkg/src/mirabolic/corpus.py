"""Bounded exhaustive orbit corpora and small random group elements.

The corpora drive the verification suites: every orbit datum up to a size
bound, with eigenvalues from small fixed pools so that all arithmetic stays
rational.  Random conjugators are built from unit triangular factors, so
they are exactly invertible with integer inverses.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence, Tuple

from .exact_linalg import ExactMatrix, Scalar
from .orbit_model import COMPLEX, REAL, EigenvalueClass, OrbitDatum
from .partitions import partitions_of_weight

__all__ = [
    "compositions",
    "complex_corpus",
    "real_corpus",
    "random_unimodular",
    "random_mirabolic",
]

COMPLEX_POOL = (Fraction(2), Fraction(1), Fraction(0), Fraction(-1))
REAL_POOL = (Fraction(1), Fraction(0))
PAIR_POOL = tuple(
    (a, b)
    for a in (Fraction(1), Fraction(0))
    for b in (Fraction(3, 2), Fraction(1), Fraction(1, 2))
)


def compositions(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Ordered k-tuples of positive integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def complex_corpus(nmax: int, pool: Sequence[Fraction] = COMPLEX_POOL) -> Iterator[OrbitDatum]:
    """Every complex-field orbit datum of size 1..nmax over the pool."""
    pool = sorted(pool, reverse=True)
    for n in range(1, nmax + 1):
        for k in range(1, min(len(pool), n) + 1):
            for eigs in combinations(pool, k):
                for comp in compositions(n, k):
                    part_lists = [list(partitions_of_weight(w)) for w in comp]
                    for parts in product(*part_lists):
                        yield OrbitDatum(
                            COMPLEX,
                            [EigenvalueClass(a, p) for a, p in zip(eigs, parts)],
                        )


def real_corpus(
    nmax: int,
    require_pair: bool = True,
    real_pool: Sequence[Fraction] = REAL_POOL,
    pair_pool: Sequence[Tuple[Fraction, Fraction]] = PAIR_POOL,
) -> Iterator[OrbitDatum]:
    """Every real-field orbit datum of size 1..nmax over the pools.

    Conjugate-pair classes occupy twice their partition weight.  With
    require_pair each datum contains at least one pair class.
    """
    real_pool = sorted(real_pool, reverse=True)
    pair_pool = sorted(pair_pool, reverse=True)
    for n in range(1, nmax + 1):
        for rk in range(0, min(len(real_pool), n) + 1):
            for pk in range(0, min(len(pair_pool), n // 2) + 1):
                if require_pair and pk == 0:
                    continue
                if rk == 0 and pk == 0:
                    continue
                for real_eigs in combinations(real_pool, rk):
                    for pair_eigs in combinations(pair_pool, pk):
                        # a pair class of weight w spans 2w of the ambient size
                        for pair_total in range(pk, n // 2 + 1):
                            rest = n - 2 * pair_total
                            if rest < 0:
                                break
                            for pair_ws in compositions(pair_total, pk):
                                for comp in compositions(rest, rk):
                                    weights = list(comp) + list(pair_ws)
                                    part_lists = [
                                        list(partitions_of_weight(w)) for w in weights
                                    ]
                                    for parts in product(*part_lists):
                                        classes = [
                                            EigenvalueClass(a, p)
                                            for a, p in zip(real_eigs, parts[:rk])
                                        ] + [
                                            EigenvalueClass(a, p, im=b)
                                            for (a, b), p in zip(pair_eigs, parts[rk:])
                                        ]
                                        yield OrbitDatum(REAL, classes)


def random_unimodular(n: int, rng: random.Random, spread: int = 2) -> ExactMatrix:
    """Random determinant-one integer matrix (unit lower times unit upper)."""
    lower = [[Scalar(1 if i == j else 0) for j in range(n)] for i in range(n)]
    upper = [[Scalar(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            lower[i][j] = Scalar(rng.randint(-spread, spread))
            upper[j][i] = Scalar(rng.randint(-spread, spread))
    return ExactMatrix(lower) * ExactMatrix(upper)


def random_mirabolic(n: int, rng: random.Random, spread: int = 2) -> ExactMatrix:
    """Random mirabolic group element with integer entries and exact inverse."""
    if n == 1:
        return ExactMatrix.identity(1)
    head = random_unimodular(n - 1, rng, spread)
    rows = [list(row) + [Scalar(rng.randint(-spread, spread))] for row in head.data]
    rows.append([Scalar(0)] * (n - 1) + [Scalar(1)])
    return ExactMatrix(rows)
