"""PBW weight bases of Verma modules and the straightening engine.

A monomial is a nondecreasing tuple of indices into the positive roots
(sorted by height, then coordinates); the index i stands for the negative
root vector f_i.  Odd root vectors appear with exponent at most one; the
square of an odd nonisotropic f collapses onto the vector at twice the root.

The engine rewrites e_i . (monomial) and f_i . (monomial) into the canonical
basis using only brackets taken from the matrix realization, and assembles
the evaluation matrix whose rank is the weight multiplicity of the simple
quotient: entry (A, B) is the coefficient of the highest weight vector in
e-word(A) applied to f^B v, built row-recursively from lower weight spaces.
"""

from fractions import Fraction

from lsbound.rootdata import (AlgebraError, ZERO, expand_in_simples,
                              positive_roots, simples_of, wadd, wsub)
from lsbound.oracle.realize import realize

ONE = Fraction(1)
HALF = Fraction(1, 2)


def _acc(dst, mono, coeff):
    s = dst.get(mono, ZERO) + coeff
    if s:
        dst[mono] = s
    elif mono in dst:
        del dst[mono]


class VermaEngine:
    """Weight-space computations for M(lambda) over one algebra and base."""

    def __init__(self, alg, base, lam):
        self.alg = alg
        self.simples = simples_of(base)
        self.lam = tuple(Fraction(c) for c in lam)
        self.real = realize(alg)
        pos = positive_roots(alg, self.simples)
        if len(pos) * 2 != len(alg.roots):
            raise AlgebraError("not a base: positive roots do not split the system")
        self.pos = pos
        self.parity = tuple(r.parity for r in pos)
        self.coords = tuple(r.coords for r in pos)
        self.index = {r.coords: i for i, r in enumerate(pos)}
        coeffs = []
        for r in pos:
            c = expand_in_simples(alg, self.simples, r.coords)
            coeffs.append(tuple(int(x) for x in c))
        self.coeffvec = tuple(coeffs)
        self.rank_len = len(self.simples)
        self._ff = {}
        self._ef = {}
        self._fmul = {}
        self._eapply = {}
        self._basis = {}
        self._gram = {}
        self._mult = {}

    # -- bracket tables -----------------------------------------------------

    def ff(self, i, j):
        """[f_i, f_j] as (index, coeff) on a negative root vector, or None."""
        key = (i, j)
        if key not in self._ff:
            br = self.real.bracket(tuple(-c for c in self.coords[i]),
                                   tuple(-c for c in self.coords[j]))
            if br[0] == "zero":
                self._ff[key] = None
            else:
                _, coords, coeff = br
                k = self.index[tuple(-c for c in coords)]
                self._ff[key] = (k, coeff)
        return self._ff[key]

    def ef(self, i, j):
        """[e_i, f_j]: ("h", matrix), ("e"/"f", index, coeff) or None."""
        key = (i, j)
        if key not in self._ef:
            br = self.real.bracket(self.coords[i],
                                   tuple(-c for c in self.coords[j]))
            if br[0] == "zero":
                self._ef[key] = None
            elif br[0] == "h":
                self._ef[key] = ("h", br[1])
            else:
                _, coords, coeff = br
                k = self.index.get(coords)
                if k is not None:
                    self._ef[key] = ("e", k, coeff)
                else:
                    k = self.index[tuple(-c for c in coords)]
                    self._ef[key] = ("f", k, coeff)
        return self._ef[key]

    # -- straightening ------------------------------------------------------

    def fmul(self, i, mono):
        """f_i . f^mono as a combination of canonical monomials."""
        key = (i, mono)
        hit = self._fmul.get(key)
        if hit is not None:
            return hit
        out = {}
        if not mono or i < mono[0] or (i == mono[0] and not self.parity[i]):
            _acc(out, (i,) + mono, ONE)
        elif i == mono[0]:  # odd square: f_i^2 = (1/2)[f_i, f_i]
            br = self.ff(i, i)
            if br is not None:
                k, c = br
                for m2, c2 in self.fmul(k, mono[1:]).items():
                    _acc(out, m2, HALF * c * c2)
        else:
            j, rest = mono[0], mono[1:]
            sign = -ONE if (self.parity[i] and self.parity[j]) else ONE
            for m2, c2 in self.fmul(i, rest).items():
                for m3, c3 in self.fmul(j, m2).items():
                    _acc(out, m3, sign * c2 * c3)
            br = self.ff(i, j)
            if br is not None:
                k, c = br
                for m2, c2 in self.fmul(k, rest).items():
                    _acc(out, m2, c * c2)
        self._fmul[key] = out
        return out

    def mono_weight(self, mono):
        wt = self.alg.zero
        for i in mono:
            wt = wadd(wt, self.coords[i])
        return wt

    def eapply(self, i, mono):
        """e_i . f^mono v as a combination of canonical monomial vectors."""
        key = (i, mono)
        hit = self._eapply.get(key)
        if hit is not None:
            return hit
        out = {}
        if mono:
            j, rest = mono[0], mono[1:]
            sign = -ONE if (self.parity[i] and self.parity[j]) else ONE
            for m2, c2 in self.eapply(i, rest).items():
                for m3, c3 in self.fmul(j, m2).items():
                    _acc(out, m3, sign * c2 * c3)
            br = self.ef(i, j)
            if br is not None:
                if br[0] == "h":
                    nu = wsub(self.lam, self.mono_weight(rest))
                    scalar = self.real.weight_eval(nu, br[1])
                    _acc(out, rest, scalar)
                elif br[0] == "f":
                    _, k, c = br
                    for m2, c2 in self.fmul(k, rest).items():
                        _acc(out, m2, c * c2)
                else:
                    _, k, c = br
                    for m2, c2 in self.eapply(k, rest).items():
                        _acc(out, m2, c * c2)
        self._eapply[key] = out
        return out

    # -- weight-space bases and evaluation matrices --------------------------

    def basis(self, mu):
        """Canonical monomials of simple-root weight mu (a coefficient tuple)."""
        mu = tuple(mu)
        hit = self._basis.get(mu)
        if hit is not None:
            return hit
        out = []
        npos = len(self.pos)

        def rec(idx, remaining, acc):
            if not any(remaining):
                out.append(tuple(acc))
                return
            if idx == npos:
                return
            v = self.coeffvec[idx]
            emax = None
            for k, vk in enumerate(v):
                if vk:
                    q = remaining[k] // vk
                    emax = q if emax is None else min(emax, q)
            if emax is None or emax < 1:
                rec(idx + 1, remaining, acc)
                return
            if self.parity[idx]:
                emax = 1
            rec(idx + 1, remaining, acc)
            cur = remaining
            for e in range(1, emax + 1):
                cur = tuple(a - b for a, b in zip(cur, v))
                rec(idx + 1, cur, acc + [idx] * e)

        if all(c >= 0 for c in mu):
            rec(0, mu, [])
        out = tuple(sorted(out))
        self._basis[mu] = out
        return out

    def gram(self, mu):
        """Evaluation matrix on the weight space at offset mu (rows/cols = basis)."""
        mu = tuple(mu)
        hit = self._gram.get(mu)
        if hit is not None:
            return hit
        basis = self.basis(mu)
        if not any(mu):
            g = [[ONE]]
            self._gram[mu] = g
            return g
        per_g = {}
        rows = []
        for A in basis:
            g = A[0]
            if g not in per_g:
                prev_mu = tuple(a - b for a, b in zip(mu, self.coeffvec[g]))
                prev_basis = self.basis(prev_mu)
                pidx = {m: k for k, m in enumerate(prev_basis)}
                prev_gram = self.gram(prev_mu)
                cols = []
                for B in basis:
                    exp = self.eapply(g, B)
                    cols.append([(pidx[m], c) for m, c in exp.items()])
                per_g[g] = (pidx, prev_gram, cols)
            pidx, prev_gram, cols = per_g[g]
            prev_row = prev_gram[pidx[A[1:]]]
            row = []
            for col in cols:
                v = ZERO
                for pi, c in col:
                    v += c * prev_row[pi]
                row.append(v)
            rows.append(row)
        self._gram[mu] = rows
        return rows

    def multiplicity(self, mu):
        """dim L(lambda) at weight lambda - mu (mu in simple-root coefficients)."""
        from lsbound._core import rational_rank

        mu = tuple(mu)
        hit = self._mult.get(mu)
        if hit is None:
            g = self.gram(mu)
            hit = rational_rank(g) if g else 0
            self._mult[mu] = hit
        return hit


_ENGINES = {}
_ENGINE_LIMIT = 24


def engine_for(alg, base, lam):
    key = (alg.display, getattr(alg, "gram", None) and alg.gram,
           frozenset(r.coords for r in simples_of(base)), tuple(lam))
    eng = _ENGINES.get(key)
    if eng is None:
        eng = VermaEngine(alg, base, lam)
        if len(_ENGINES) >= _ENGINE_LIMIT:
            _ENGINES.pop(next(iter(_ENGINES)))
        _ENGINES[key] = eng
    return eng
