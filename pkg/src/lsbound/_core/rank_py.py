"""Exact matrix rank over the rationals (pure-Python backend).

Fraction entries are cleared to integers row by row, then eliminated with the
fraction-free Bareiss scheme, so every intermediate value is an exact integer
(a minor of the scaled matrix).  This is the hot kernel of the Verma-module
oracle; a Cython twin with identical semantics lives in rank_cy.pyx.
"""

BACKEND = "python"


def integer_rank(rows):
    """Rank of a matrix given as a list of lists of Python ints (destructive)."""
    if not rows:
        return 0
    n_rows = len(rows)
    n_cols = len(rows[0])
    rank = 0
    piv_r = 0
    prev = 1
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
        piv = rows[piv_r][piv_c]
        top = rows[piv_r]
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
    cleared = []
    for row in rows:
        den = 1
        for x in row:
            d = getattr(x, "denominator", 1)
            if d != 1:
                den = den * d // _gcd(den, d)
        cleared.append([int(x * den) for x in row] if den != 1 else [int(x) for x in row])
    return integer_rank(cleared)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
