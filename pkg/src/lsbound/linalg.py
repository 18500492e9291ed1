"""Small exact linear solves over the rationals (not the hot path; see _core)."""

from fractions import Fraction


def solve_exact(columns, target):
    """Solve sum_j c_j * columns[j] = target exactly.

    `columns` is a list of coordinate tuples, `target` a coordinate tuple.
    Returns the coefficient tuple, or None if the system is inconsistent.
    When the columns are linearly independent the solution is unique.
    """
    n_cols = len(columns)
    n_rows = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(n_cols)] + [Fraction(target[i])]
           for i in range(n_rows)]
    piv_cols = []
    piv_r = 0
    for c in range(n_cols):
        pr = next((r for r in range(piv_r, n_rows) if aug[r][c] != 0), None)
        if pr is None:
            continue
        aug[piv_r], aug[pr] = aug[pr], aug[piv_r]
        inv = 1 / aug[piv_r][c]
        aug[piv_r] = [x * inv for x in aug[piv_r]]
        for r in range(n_rows):
            if r != piv_r and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[piv_r])]
        piv_cols.append(c)
        piv_r += 1
        if piv_r == n_rows:
            break
    for r in range(piv_r, n_rows):
        if aug[r][n_cols] != 0:
            return None
    sol = [Fraction(0)] * n_cols
    for r, c in enumerate(piv_cols):
        sol[c] = aug[r][n_cols]
    return tuple(sol)


def independent(vectors):
    """True if the coordinate tuples are linearly independent over Q."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    n_cols = len(rows[0]) if rows else 0
    for c in range(n_cols):
        pr = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank == len(vectors)
