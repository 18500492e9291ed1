"""Supermatrix realizations of gl(m|n) and osp(m|2n).

Matrices act on C^(m|2n) with the even block first.  The orthogonal form on
the even block is antidiagonal (all ones) and the symplectic form on the odd
block is [[0, I], [-I, 0]]; both choices keep the Cartan subalgebra diagonal,
so root vectors are elementary-supported and weights can be read off directly.
Everything is exact rational: matrices are sparse {(row, col): Fraction} maps.

Structure constants are never written down by hand: brackets are computed as
supermatrix (anti)commutators and expanded against the one-dimensional root
spaces.
"""

from fractions import Fraction
from functools import lru_cache

from lsbound.rootdata import AlgebraError, ZERO

# -- sparse matrix helpers ---------------------------------------------------

def mat_mul(a, b):
    out = {}
    b_rows = {}
    for (r, c), v in b.items():
        b_rows.setdefault(r, []).append((c, v))
    for (r, k), va in a.items():
        for c, vb in b_rows.get(k, ()):
            key = (r, c)
            s = out.get(key, ZERO) + va * vb
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out

def mat_axpy(out, a, scale):
    for key, v in a.items():
        s = out.get(key, ZERO) + scale * v
        if s:
            out[key] = s
        elif key in out:
            del out[key]
    return out

def mat_scale(a, c):
    return {k: c * v for k, v in a.items()} if c else {}

def super_bracket(a, b, pa, pb):
    """[a, b] = ab - (-1)^(pa pb) ba."""
    out = mat_mul(a, b)
    return mat_axpy(out, mat_mul(b, a), Fraction(1 if pa and pb else -1))


def _elem(r, c, v=1):
    return {(r, c): Fraction(v)}


class Realization:
    """Matrix model of one algebra: root vectors, Cartan, exact brackets."""

    def __init__(self, alg):
        if alg.family not in ("gl", "osp"):
            raise AlgebraError(f"no matrix realization for {alg.display}")
        self.alg = alg
        if alg.family == "gl":
            self._build_gl()
        else:
            self._build_osp()
        self._check_root_vectors()
        self._bracket_cache = {}

    # -- constructions ------------------------------------------------------

    def _build_gl(self):
        alg = self.alg
        m, n = alg.m, alg.n
        dim = m + n

        def phi(a):
            v = [ZERO] * alg.dim_h
            if a < m:
                v[a] = Fraction(1)
            else:
                v[m + (a - m)] = Fraction(1)
            return tuple(v)

        def par(a):
            return 0 if a < m else 1

        self.size = dim
        self.even_size = m
        self._diag_units = [(k, k) for k in range(dim)]  # unit k reads entry (k,k)
        vectors = {}
        for a in range(dim):
            for b in range(dim):
                if a == b:
                    continue
                root = tuple(x - y for x, y in zip(phi(a), phi(b)))
                vectors[root] = (_elem(a, b), (par(a) + par(b)) % 2)
        self.root_vectors = vectors

    def _build_osp(self):
        alg = self.alg
        m, n = alg.m, alg.n
        s = alg.s
        size = m + 2 * n
        self.size = size
        self.even_size = m
        # unit k的 diagonal entry: eps_i at (i,i), delta_j at (m+j, m+j)
        self._diag_units = [(i, i) for i in range(s)] + [(m + j, m + j) for j in range(n)]

        def phi(i):
            """o-block weight of column index i as a coordinate tuple."""
            v = [ZERO] * alg.dim_h
            if i < s:
                v[i] = Fraction(1)
            elif i >= m - s:
                v[m - 1 - i] = Fraction(-1)
            return tuple(v)

        def psi(k):
            """sp-block weight of index k in 0..2n-1."""
            v = [ZERO] * alg.dim_h
            if k < n:
                v[s + k] = Fraction(1)
            else:
                v[s + (k - n)] = Fraction(-1)
            return tuple(v)

        vectors = {}

        def add(root, matrix, parity):
            if any(root):
                assert root not in vectors, root
                vectors[root] = (matrix, parity)

        # orthogonal block: A(i,j) = E_ij - E_{m-1-j, m-1-i}
        seen = set()
        for i in range(m):
            for j in range(m):
                if i == j or (i, j) in seen:
                    continue
                partner = (m - 1 - j, m - 1 - i)
                seen.add((i, j))
                seen.add(partner)
                if (i, j) == partner:
                    continue  # E_ij - E_ij = 0
                mat = _elem(i, j)
                mat_axpy(mat, _elem(m - 1 - j, m - 1 - i), Fraction(-1))
                root = tuple(x - y for x, y in zip(phi(i), phi(j)))
                add(root, mat, 0)
        # symplectic block at offset m: D = [[A, B], [C, -A^T]], B and C symmetric
        for k in range(n):
            for l in range(n):
                if k == l:
                    continue
                mat = _elem(m + k, m + l)
                mat_axpy(mat, _elem(m + n + l, m + n + k), Fraction(-1))
                root = tuple(x - y for x, y in zip(psi(k), psi(l)))
                add(root, mat, 0)
        for k in range(n):
            for l in range(k, n):
                if k == l:
                    up = _elem(m + k, m + n + k)
                    dn = _elem(m + n + k, m + k)
                else:
                    up = _elem(m + k, m + n + l)
                    mat_axpy(up, _elem(m + l, m + n + k), Fraction(1))
                    dn = _elem(m + n + k, m + l)
                    mat_axpy(dn, _elem(m + n + l, m + k), Fraction(1))
                root_up = tuple(x + y for x, y in zip(psi(k), psi(l)))
                add(root_up, up, 0)
                add(tuple(-c for c in root_up), dn, 0)
        # odd block: Q = E_{k,c} (2n x m), P = -G Q^T J forced by the form
        for k in range(2 * n):
            for c in range(m):
                mat = _elem(m + k, c)
                if k < n:
                    mat_axpy(mat, _elem(m - 1 - c, m + n + k), Fraction(-1))
                else:
                    mat_axpy(mat, _elem(m - 1 - c, m + (k - n)), Fraction(1))
                root = tuple(x - y for x, y in zip(psi(k), phi(c)))
                add(root, mat, 1)
        self.root_vectors = vectors

    # -- sanity and evaluation ----------------------------------------------

    def _check_root_vectors(self):
        alg = self.alg
        expected = {r.coords for r in alg.roots}
        got = set(self.root_vectors)
        if expected != got:
            raise AlgebraError(
                f"realization of {alg.display} disagrees with the root list: "
                f"missing {expected - got}, extra {got - expected}")
        for coords, (mat, parity) in self.root_vectors.items():
            if alg.root(coords).parity != parity:
                raise AlgebraError(f"parity mismatch at {coords}")

    def weight_eval(self, nu, h_mat):
        """nu(h) for a diagonal Cartan matrix h and nu in coordinates."""
        total = ZERO
        for k, pos in enumerate(self._diag_units):
            if nu[k]:
                total += nu[k] * h_mat.get(pos, ZERO)
        return total

    def vector(self, coords):
        return self.root_vectors[tuple(coords)][0]

    def parity(self, coords):
        return self.root_vectors[tuple(coords)][1]

    def bracket(self, ca, cb):
        """[x_a, x_b] for root vectors, expanded against the root data.

        Returns one of
          ("zero",)
          ("h", matrix)            -- Cartan result (ca + cb = 0)
          ("root", coords, coeff)  -- coeff * x_{ca+cb}
        """
        key = (tuple(ca), tuple(cb))
        hit = self._bracket_cache.get(key)
        if hit is not None:
            return hit
        ca, cb = key
        ma, pa = self.root_vectors[ca]
        mb, pb = self.root_vectors[cb]
        z = super_bracket(ma, mb, pa, pb)
        total = tuple(x + y for x, y in zip(ca, cb))
        if not z:
            out = ("zero",)
        elif not any(total):
            out = ("h", z)
        else:
            target = self.root_vectors.get(total)
            if target is None:
                raise AlgebraError(f"bracket landed outside the root system: {total}")
            mt = target[0]
            (pos, base_val) = next(iter(mt.items()))
            coeff = z.get(pos, ZERO) / base_val
            check = mat_axpy(dict(z), mt, -coeff)
            if coeff == 0 or check:
                raise AlgebraError(f"root space at {total} is not one-dimensional")
            out = ("root", total, coeff)
        self._bracket_cache[key] = out
        return out


@lru_cache(maxsize=None)
def realize(alg):
    """Cached matrix realization of a gl or osp algebra."""
    return Realization(alg)
