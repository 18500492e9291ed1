"""Exact rank kernel: fuzz against plain Fraction elimination, backend parity."""

import random
from fractions import Fraction

from lsbound._core import BACKEND, rational_rank
from lsbound._core import rank_py


def reference_rank(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    for c in range(n_cols):
        p = next((r for r in range(rank, n_rows) if m[r][c] != 0), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        for r in range(n_rows):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def test_fuzz_against_fraction_elimination():
    rng = random.Random(42)
    for _ in range(3000):
        n_rows = rng.randint(1, 6)
        n_cols = rng.randint(1, 6)
        m = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3))
              for _ in range(n_cols)] for _ in range(n_rows)]
        assert rational_rank(m) == reference_rank(m)


def test_fuzz_singular_heavy():
    # low-entropy integer matrices hit many rank-deficient cases
    rng = random.Random(7)
    for _ in range(5000):
        n = rng.randint(2, 5)
        m = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        assert rational_rank(m) == reference_rank(m)


def test_backends_agree():
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randint(1, 6)
        m = [[Fraction(rng.randint(-9, 9), rng.randint(1, 4))
              for _ in range(n)] for _ in range(n)]
        assert rational_rank(m) == rank_py.rational_rank(m)


def test_edge_cases():
    assert rational_rank([]) == 0
    assert rational_rank([[0, 0], [0, 0]]) == 0
    assert rational_rank([[Fraction(1, 3)]]) == 1
    assert BACKEND in ("python", "cython")
