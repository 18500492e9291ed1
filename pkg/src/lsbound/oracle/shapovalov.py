"""Weight multiplicities of simple highest weight modules as exact matrix ranks.

The multiplicity dim L(lambda)_{lambda-mu} equals the rank of the evaluation
pairing between the Verma weight space at lambda-mu and the raising operators
of weight mu; a vector is in the maximal submodule exactly when every raising
word of the right weight kills its highest-weight coefficient.  All ranks are
computed by exact fraction-free elimination.

Job sizes are hard-capped (m <= 7, n <= 3, depth <= 12) and additionally
screened by a cost estimate, since Verma weight spaces grow combinatorially.
Results can be cached on disk: set LSB_CACHE_DIR to enable a line-delimited
JSON cache keyed by (algebra, form convention, base, weight, offset).
"""

import hashlib
import json
import os
from dataclasses import dataclass
from fractions import Fraction

from lsbound.characters import FormalCharacter
from lsbound.oracle.pbw import VermaEngine, engine_for
from lsbound.rootdata import (AlgebraError, expand_in_simples, format_weight,
                              simples_of, wadd)

MAX_M = 7
MAX_N = 3
MAX_DEPTH = 12
COST_LIMIT = 100_000_000


class OracleCapError(AlgebraError):
    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class ShapovalovReport:
    lam: tuple
    mu: tuple            # weight coordinates of the offset
    offset: tuple        # the same offset in simple-root coefficients
    dimension: int       # Verma weight-space dimension
    rank: int            # = dim L(lam) at lam - mu
    matrix_hash: str

    def to_json(self, alg=None):
        return {
            "schema": "lsb/1",
            "lam": [str(c) for c in self.lam],
            "mu": [str(c) for c in self.mu],
            "offset": list(self.offset),
            "dimension": self.dimension,
            "rank": self.rank,
            "matrixHash": self.matrix_hash,
        }


@dataclass(frozen=True)
class ProbeReport:
    depths: tuple
    max_mults: tuple
    status: str  # oracleBounded | oracleUnboundedEvidence | unknown

    def to_json(self):
        return {
            "schema": "lsb/1",
            "depths": list(self.depths),
            "maxMultiplicities": list(self.max_mults),
            "status": self.status,
        }


# ---------------------------------------------------------------------------
# caps and cost control

def check_caps(alg, depth):
    if alg.family not in ("gl", "osp"):
        raise OracleCapError(f"no oracle support for {alg.display}")
    if alg.m > MAX_M or alg.n > MAX_N:
        raise OracleCapError(
            f"{alg.display} exceeds the oracle range (m <= {MAX_M}, n <= {MAX_N})")
    if depth > MAX_DEPTH:
        raise OracleCapError(f"depth {depth} exceeds the cap {MAX_DEPTH}")
    if depth < 0:
        raise AlgebraError("depth must be nonnegative")


def weight_space_dims(alg, base, depth):
    """Verma weight-space dimensions by offset, from the product formula.

    Expands prod over even positives of 1/(1 - e^-a) times prod over odd
    positives of (1 + e^-a) truncated to the given height; independent of the
    PBW enumeration, so it doubles as a test oracle for the basis sizes.
    """
    from lsbound.rootdata import positive_roots
    simples = simples_of(base)
    rank = len(simples)
    dims = {(0,) * rank: 1}
    for root in positive_roots(alg, simples):
        vec = tuple(int(c) for c in expand_in_simples(alg, simples, root.coords))
        ht = sum(vec)
        if ht == 0 or ht > depth:
            continue
        new = {}
        for off, c in dims.items():
            e = 0
            cur = off
            while sum(cur) <= depth and (e <= 1 or root.parity == 0):
                new[cur] = new.get(cur, 0) + c
                e += 1
                cur = tuple(a + b for a, b in zip(cur, vec))
        dims = new
    return dims


def estimate_cost(alg, base, depth):
    """Rough unit count for a truncated character at this depth."""
    dims = weight_space_dims(alg, base, depth)
    return sum(d * d * (d + 8) for d in dims.values())


def _screen(alg, base, depth):
    check_caps(alg, depth)
    est = estimate_cost(alg, base, depth)
    if est > COST_LIMIT:
        raise OracleCapError(
            f"estimated cost {est} exceeds the limit {COST_LIMIT} for "
            f"{alg.display} at depth {depth}", estimate=est)
    return est


# ---------------------------------------------------------------------------
# disk cache (optional)

class _DiskCache:
    def __init__(self):
        self.dir = os.environ.get("LSB_CACHE_DIR")
        self.records = {}
        self.loaded = False

    def _path(self):
        return os.path.join(self.dir, "ranks.jsonl")

    def load(self):
        if self.loaded or not self.dir:
            self.loaded = True
            return
        self.loaded = True
        try:
            with open(self._path(), "r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    self.records[rec["key"]] = rec
        except FileNotFoundError:
            pass

    def get(self, key):
        if not self.dir:
            return None
        self.load()
        return self.records.get(key)

    def put(self, key, record):
        if not self.dir:
            return
        self.load()
        if key in self.records:
            return
        self.records[key] = record
        os.makedirs(self.dir, exist_ok=True)
        with open(self._path(), "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")


_CACHE = _DiskCache()


def _cache_key(alg, base, lam, offset):
    sig = "|".join([
        alg.display,
        str(alg.gram),
        ";".join(sorted(str(c) for c in frozenset(r.coords for r in simples_of(base)))),
        ",".join(str(c) for c in lam),
        ",".join(str(c) for c in offset),
    ])
    return hashlib.sha256(sig.encode()).hexdigest()


def _matrix_hash(rows):
    payload = ";".join(",".join(str(x) for x in row) for row in rows)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _mult_and_hash(alg, base, lam, engine, offset):
    key = _cache_key(alg, base, lam, offset)
    rec = _CACHE.get(key)
    if rec is not None:
        return rec["dimension"], rec["rank"], rec["matrixHash"]
    gram = engine.gram(offset)
    dim = len(engine.basis(offset))
    rank = engine.multiplicity(offset)
    mhash = _matrix_hash(gram)
    _CACHE.put(key, {
        "schema": "lsb/1", "key": key, "algebra": alg.display,
        "lam": [str(c) for c in lam], "offset": list(offset),
        "dimension": dim, "rank": rank, "matrixHash": mhash,
    })
    return dim, rank, mhash


# ---------------------------------------------------------------------------
# public operations

def _offset_of(alg, base, mu):
    coeffs = expand_in_simples(alg, simples_of(base), mu)
    if coeffs is None or any(c < 0 or c.denominator != 1 for c in coeffs):
        raise AlgebraError(
            f"mu = {format_weight(alg, tuple(mu))} is outside the positive cone")
    return tuple(int(c) for c in coeffs)


def verma_weight_basis(alg, base, mu):
    """All PBW monomials of weight -mu, as tuples of positive roots."""
    offset = _offset_of(alg, base, mu)
    check_caps(alg, sum(offset))
    eng = engine_for(alg, base, (Fraction(0),) * alg.dim_h)
    return tuple(tuple(eng.pos[i] for i in mono) for mono in eng.basis(offset))


def shapovalov_rank(alg, base, lam, mu, lam_is_shifted=False):
    """Rank report at the Verma weight space M(lam)_{lam - mu}."""
    offset = _offset_of(alg, base, mu)
    check_caps(alg, sum(offset))
    lam = _unshift(alg, base, lam, lam_is_shifted)
    eng = engine_for(alg, base, lam)
    dim, rank, mhash = _mult_and_hash(alg, base, lam, eng, offset)
    return ShapovalovReport(tuple(lam), tuple(mu), offset, dim, rank, mhash)


def _unshift(alg, base, lam, lam_is_shifted):
    if not lam_is_shifted:
        return tuple(Fraction(c) for c in lam)
    from lsbound.rootdata import rho_vectors, wsub
    rho = rho_vectors(alg, simples_of(base))[0]
    return wsub(tuple(Fraction(c) for c in lam), rho)


def truncated_character(alg, base, lam, depth, lam_is_shifted=False):
    """Multiplicities of L(lam) on the cone of height <= depth."""
    _screen(alg, base, depth)
    lam = _unshift(alg, base, lam, lam_is_shifted)
    eng = engine_for(alg, base, lam)
    terms = {}
    for offset in _cone(len(simples_of(base)), depth):
        if not eng.basis(offset):
            continue
        mult = eng.multiplicity(offset)
        if mult:
            terms[offset] = mult
    return FormalCharacter(origin=tuple(lam), depth=depth, terms=terms)


def _cone(rank, depth):
    """All nonnegative integer coefficient tuples of height <= depth."""
    out = []

    def rec(idx, budget, acc):
        if idx == rank:
            out.append(tuple(acc))
            return
        for v in range(budget + 1):
            rec(idx + 1, budget - v, acc + [v])

    rec(0, depth, [])
    out.sort(key=lambda t: (sum(t), t))
    return out


def boundedness_probe(alg, base, lam, depths=(6, 8, 10), lam_is_shifted=False):
    """Empirical boundedness evidence from the growth of max multiplicities.

    The running maximum of the multiplicities is computed for every height up
    to the last scheduled depth and reported at the scheduled depths.  If it
    never grows inside the scheduled window the module looks bounded; if it
    grows inside the window and has grown at least twice overall, that is
    genuine unbounded evidence (slowly growing modules step up their maximum
    only every few heights, so per-checkpoint strict increase would miss
    them); a single late growth event is inconclusive.  This is a
    semi-decision: no effective depth bound is known.
    """
    depths = tuple(depths)
    if len(depths) < 3 or list(depths) != sorted(set(depths)):
        raise AlgebraError("probe needs a strictly increasing schedule of length >= 3")
    top = depths[-1]
    ch = truncated_character(alg, base, lam, top, lam_is_shifted=lam_is_shifted)
    by_height = {}
    for off, m in ch.terms.items():
        h = sum(off)
        by_height[h] = max(by_height.get(h, 0), m)
    running = []
    cur = 0
    for h in range(top + 1):
        cur = max(cur, by_height.get(h, 0))
        running.append(cur)
    maxes = tuple(running[d] for d in depths)
    growth_events = [h for h in range(1, top + 1) if running[h] > running[h - 1]]
    grew_in_window = bool(growth_events) and growth_events[-1] > depths[0]
    if not grew_in_window:
        status = "oracleBounded"
    elif len(growth_events) >= 2:
        status = "oracleUnboundedEvidence"
    else:
        status = "unknown"
    return ProbeReport(depths, maxes, status)
