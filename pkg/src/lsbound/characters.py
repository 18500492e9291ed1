"""Truncated formal characters on the weight lattice, and the strongly
typical product formula for osp(m|2n).

A character is stored relative to its leading weight: terms map offsets in
simple-root coefficients (integral and hashable even when the weight itself
is a general rational vector) to positive multiplicities, everything cut off
at a fixed height.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from lsbound.rootdata import (AlgebraError, expand_in_simples, parse_algebra,
                              positive_roots, rho_vectors, simples_of, wadd,
                              wsub)

ZERO = Fraction(0)


class HypothesisError(AlgebraError):
    """A character formula was invoked outside its hypotheses."""

    def __init__(self, which, message):
        super().__init__(message)
        self.which = which


@dataclass(frozen=True)
class FormalCharacter:
    origin: tuple            # leading weight, coordinate tuple
    depth: int
    terms: dict = field(default_factory=dict)  # offset tuple -> multiplicity

    def multiplicity(self, offset):
        return self.terms.get(tuple(offset), 0)

    def leading(self):
        rank = len(next(iter(self.terms), ()))
        return self.terms.get((0,) * rank, 0)

    def to_json(self):
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        return {
            "schema": "lsb/1",
            "origin": [str(c) for c in self.origin],
            "depth": self.depth,
            "terms": [{"offset": list(off), "mult": m} for off, m in items],
        }

    @staticmethod
    def from_json(data):
        return FormalCharacter(
            origin=tuple(Fraction(c) for c in data["origin"]),
            depth=int(data["depth"]),
            terms={tuple(t["offset"]): int(t["mult"]) for t in data["terms"]},
        )


def char_multiply(a, b, depth):
    """Cauchy product of truncated characters, cut at the given height."""
    terms = {}
    for off_a, ma in a.terms.items():
        ha = sum(off_a)
        if ha > depth:
            continue
        for off_b, mb in b.terms.items():
            if ha + sum(off_b) > depth:
                continue
            off = tuple(x + y for x, y in zip(off_a, off_b))
            terms[off] = terms.get(off, 0) + ma * mb
    return FormalCharacter(origin=wadd(a.origin, b.origin), depth=depth, terms=terms)


def degree_of(ch):
    """Max multiplicity over the truncation window (a lower bound of the degree)."""
    return max(ch.terms.values(), default=0)


def char_one(origin, rank, depth):
    return FormalCharacter(origin=tuple(origin), depth=depth, terms={(0,) * rank: 1})


def _offset_map(alg, base, sub_alg, sub_base, embed):
    """Matrix sending sub-algebra simple-root offsets to ambient offsets.

    embed maps a sub-algebra coordinate tuple to an ambient coordinate tuple.
    """
    simples = simples_of(base)
    cols = []
    for r in simples_of(sub_base):
        amb = embed(r.coords)
        coeffs = expand_in_simples(alg, simples, amb)
        if coeffs is None or any(c < 0 or c.denominator != 1 for c in coeffs):
            raise AlgebraError("sub-algebra simple root is not ambient-positive")
        cols.append(tuple(int(c) for c in coeffs))
    return cols


def _push_terms(cols, terms, rank, depth):
    out = {}
    for off, m in terms.items():
        amb = [0] * rank
        for c, col in zip(off, cols):
            if c:
                for k, v in enumerate(col):
                    amb[k] += c * v
        if sum(amb) <= depth:
            t = tuple(amb)
            out[t] = out.get(t, 0) + m
    return out


def typical_character(alg, base, lam, depth, lam_is_shifted=False):
    """Character of a strongly typical osp(m|2n) module as a product.

    The character factors as the free exterior part over the isotropic odd
    roots times the characters of the two nonisotropic factors (an o_m module
    on the epsilon block and an sp/osp(1|2n) module on the delta block,
    shifted by s on each delta coordinate).  Requires strong typicality and
    either a trivial stabilizer on the symplectic block or integral nonzero
    pairings with the long symplectic roots; everything is checked and a
    HypothesisError names the violated hypothesis.
    """
    from lsbound.oracle import shapovalov

    if alg.family != "osp" or alg.m < 1 or alg.n < 1:
        raise AlgebraError("the product formula applies to osp(m|2n)")
    from lsbound.basegraph import default_base
    base_obj = default_base(alg) if base is None else base
    simples = simples_of(base_obj)
    if frozenset(r.coords for r in simples) != frozenset(
            r.coords for r in alg.default_simples):
        raise AlgebraError("the product formula is stated in the default base")
    rho = rho_vectors(alg, simples)[0]
    lam = tuple(Fraction(c) for c in lam)
    if lam_is_shifted:
        lam = wsub(lam, rho)
    lr = wadd(lam, rho)
    for beta in alg.odd_roots:
        if alg.form(lr, beta.coords) == 0:
            raise HypothesisError(
                "typicality",
                "not strongly typical: the shifted weight pairs to zero with "
                f"the odd root {beta.coords}")
    y = alg.delta_part(lr)
    n = alg.n
    stab_trivial = (all(v != 0 for v in y)
                    and all(y[i] != y[j] and y[i] != -y[j]
                            for i in range(n) for j in range(i + 1, n)))
    integral = all((2 * v).denominator == 1 and v != 0 for v in y)
    if not (stab_trivial or integral):
        raise HypothesisError(
            "delta-integrality",
            "the symplectic block has a nontrivial stabilizer and the long "
            "root pairings are not nonzero integers")

    s, m = alg.s, alg.m
    rank = len(simples)
    # factor on the delta block, with the s-shift absorbed into its origin
    p = m % 2
    f1_alg = parse_algebra(f"osp(1|{2 * n})" if p else f"sp({2 * n})")
    f1_lam = tuple(v - s for v in alg.delta_part(lam))
    f1 = shapovalov.truncated_character(f1_alg, f1_alg.default_simples, f1_lam, depth)
    cols1 = _offset_map(alg, base_obj, f1_alg, f1_alg.default_simples,
                        lambda c: (ZERO,) * s + tuple(c))
    f1_amb = FormalCharacter(
        origin=tuple(alg.eps_part(alg.zero)) + tuple(alg.delta_part(lam)),
        depth=depth, terms=_push_terms(cols1, f1.terms, rank, depth))
    # factor on the epsilon block
    if m >= 3:
        f2_alg = parse_algebra(f"o({m})")
        f2_lam = alg.eps_part(lam)
        f2 = shapovalov.truncated_character(f2_alg, f2_alg.default_simples,
                                            f2_lam, depth)
        cols2 = _offset_map(alg, base_obj, f2_alg, f2_alg.default_simples,
                            lambda c: tuple(c) + (ZERO,) * n)
        f2_amb = FormalCharacter(
            origin=tuple(alg.eps_part(lam)) + (ZERO,) * n,
            depth=depth, terms=_push_terms(cols2, f2.terms, rank, depth))
    else:
        f2_amb = char_one(tuple(alg.eps_part(lam)) + (ZERO,) * n, rank, depth)
    # free exterior factor over the isotropic odd roots
    odd = char_one((ZERO,) * alg.dim_h, rank, depth)
    for beta in positive_roots(alg, simples):
        if not beta.isotropic:
            continue
        off = expand_in_simples(alg, simples, beta.coords)
        off = tuple(int(c) for c in off)
        factor = FormalCharacter(origin=(ZERO,) * alg.dim_h, depth=depth,
                                 terms={(0,) * rank: 1, off: 1})
        odd = char_multiply(odd, factor, depth)
    out = char_multiply(char_multiply(f1_amb, f2_amb, depth), odd, depth)
    assert out.origin == lam
    return out
