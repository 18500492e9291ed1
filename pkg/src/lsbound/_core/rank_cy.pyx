# cython: language_level=3
"""Exact matrix rank over the rationals (compiled backend).

Same fraction-free Bareiss elimination as rank_py; entries stay arbitrary
precision Python ints, Cython removes the interpreter overhead of the inner
loops.
"""

BACKEND = "cython"


def integer_rank(list rows):
    """Rank of a matrix given as a list of lists of Python ints (destructive)."""
    cdef Py_ssize_t n_rows, n_cols, piv_r, piv_c, pr, r, c, rank
    if not rows:
        return 0
    n_rows = len(rows)
    n_cols = len(rows[0])
    rank = 0
    piv_r = 0
    prev = 1
    cdef list row, top
    for piv_c in range(n_cols):
        pr = -1
        for r in range(piv_r, n_rows):
            if rows[r][piv_c]:
                pr = r
                break
        if pr < 0:
            continue
        if pr != piv_r:
            rows[piv_r], rows[pr] = rows[pr], rows[piv_r]
        top = rows[piv_r]
        piv = top[piv_c]
        for r in range(piv_r + 1, n_rows):
            row = rows[r]
            lead = row[piv_c]
            # every row must be rescaled by piv/prev to keep the uniform
            # minor scaling that makes the divisions exact
            if lead:
                for c in range(piv_c, n_cols):
                    row[c] = (row[c] * piv - lead * top[c]) // prev
            else:
                for c in range(piv_c, n_cols):
                    row[c] = (row[c] * piv) // prev
        prev = piv
        piv_r += 1
        rank += 1
        if piv_r == n_rows:
            break
    return rank


def rational_rank(rows):
    """Rank of a matrix of Fractions (or ints); the input is not modified."""
    cdef list cleared = []
    cdef list irow
    for row in rows:
        den = 1
        for x in row:
            d = getattr(x, "denominator", 1)
            if d != 1:
                den = den * d // _gcd(den, d)
        if den != 1:
            irow = [int(x * den) for x in row]
        else:
            irow = [int(x) for x in row]
        cleared.append(irow)
    return integer_rank(cleared)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
