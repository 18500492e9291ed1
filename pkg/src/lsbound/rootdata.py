"""Root data for basic classical Lie superalgebras.

Weights are plain tuples of Fractions in the (epsilon | delta) coordinate
basis: the first ``eps_len`` entries are epsilon coordinates, the remaining
``delta_len`` are delta coordinates.  gl(m|n) uses m epsilon coordinates,
osp(m|2n) uses s = floor(m/2).  The exceptional algebras use a fixed basis:
D(2,1,a) three epsilon coordinates, F(4) (e1,e2,e3,d1), G(3) (e1,e2,d1) with
the third epsilon of the G2 plane equal to -e1-e2.

The invariant bilinear form is diagonal (epsilon, epsilon) = +1 and
(delta, delta) = delta_sign, where delta_sign is -1 whenever the algebra has
isotropic roots mixing the two blocks (gl with m,n >= 1 and osp with
m >= 2, n >= 1) and +1 for the purely even degenerations and osp(1|2n).
All arithmetic is exact rational; no floats anywhere.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from lsbound.linalg import solve_exact

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Root:
    coords: tuple
    parity: int  # 0 even, 1 odd
    isotropic: bool

    def __neg__(self):
        return Root(tuple(-c for c in self.coords), self.parity, self.isotropic)


@dataclass(frozen=True)
class AlgebraSpec:
    family: str  # gl | osp | D21a | F4 | G3
    m: int = 0
    n: int = 0
    a: Fraction = ZERO
    display: str = ""


class AlgebraError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing

_SPEC_RES = [
    (re.compile(r"^gl\((\d+)\|(\d+)\)$"), "gl"),
    (re.compile(r"^osp\((\d+)\|(\d+)\)$"), "osp"),
    (re.compile(r"^sp\((\d+)\)$"), "sp"),
    (re.compile(r"^o\((\d+)\)$"), "o"),
    (re.compile(r"^sl\((\d+)\)$"), "sl"),
    (re.compile(r"^D\(2,1,(?:a=)?(-?\d+(?:/\d+)?)\)$"), "D21a"),
    (re.compile(r"^F\(4\)$"), "F4"),
    (re.compile(r"^G\(3\)$"), "G3"),
]


def parse_rational(text):
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise AlgebraError(f"bad rational {text!r}") from exc


def parse_spec(text):
    """Parse an algebra spec string into an AlgebraSpec."""
    flat = re.sub(r"\s+", "", text)
    for rx, tag in _SPEC_RES:
        mt = rx.match(flat)
        if not mt:
            continue
        if tag == "gl":
            m, n = int(mt.group(1)), int(mt.group(2))
            if m + n < 2:
                raise AlgebraError("gl(m|n) needs m+n >= 2")
            return AlgebraSpec("gl", m, n, display=f"gl({m}|{n})")
        if tag == "osp":
            m, two_n = int(mt.group(1)), int(mt.group(2))
            if two_n % 2 or m < 1 or two_n < 2:
                raise AlgebraError("osp(m|2n) needs m >= 1 and an even second argument >= 2")
            return AlgebraSpec("osp", m, two_n // 2, display=f"osp({m}|{two_n})")
        if tag == "sp":
            two_n = int(mt.group(1))
            if two_n % 2 or two_n < 2:
                raise AlgebraError("sp(2n) needs an even argument >= 2")
            return AlgebraSpec("osp", 0, two_n // 2, display=f"sp({two_n})")
        if tag == "o":
            m = int(mt.group(1))
            if m < 1:
                raise AlgebraError("o(m) needs m >= 1")
            return AlgebraSpec("osp", m, 0, display=f"o({m})")
        if tag == "sl":
            k = int(mt.group(1))
            if k < 2:
                raise AlgebraError("sl(k) needs k >= 2")
            return AlgebraSpec("gl", k, 0, display=f"sl({k})")
        if tag == "D21a":
            a = parse_rational(mt.group(1))
            if a in (0, -1):
                raise AlgebraError("D(2,1,a) needs a not in {0, -1}")
            return AlgebraSpec("D21a", 2, 1, a, display=f"D(2,1,{a})")
        if tag == "F4":
            return AlgebraSpec("F4", display="F(4)")
        if tag == "G3":
            return AlgebraSpec("G3", display="G(3)")
    raise AlgebraError(f"cannot parse algebra spec {text!r}")


# ---------------------------------------------------------------------------
# construction

def _frac_tuple(values):
    return tuple(Fraction(v) for v in values)


def _unit(dim, i, value=1):
    v = [ZERO] * dim
    v[i] = Fraction(value)
    return tuple(v)


class Algebra:
    """Immutable root datum of one supported algebra."""

    def __init__(self, spec, delta_sign=None):
        self.spec = spec
        self.family = spec.family
        self.m = spec.m
        self.n = spec.n
        self.a = spec.a
        self.display = spec.display
        if spec.family == "gl":
            self._build_gl(delta_sign)
        elif spec.family == "osp":
            self._build_osp(delta_sign)
        elif spec.family == "D21a":
            self._build_d21a(delta_sign)
        elif spec.family == "F4":
            self._build_f4(delta_sign)
        elif spec.family == "G3":
            self._build_g3(delta_sign)
        else:
            raise AlgebraError(f"unknown family {spec.family}")
        self.dim_h = self.eps_len + self.delta_len
        self.units = tuple(f"e{i + 1}" for i in range(self.eps_len)) + tuple(
            f"d{j + 1}" for j in range(self.delta_len))
        self.roots = tuple(self._make_root(c, p) for c, p in self._raw_roots)
        self.root_by_coords = {r.coords: r for r in self.roots}
        self.even_roots = tuple(r for r in self.roots if r.parity == 0)
        self.odd_roots = tuple(r for r in self.roots if r.parity == 1)
        self.isotropic_roots = tuple(r for r in self.roots if r.isotropic)
        self.default_simples = tuple(self.root_by_coords[_frac_tuple(c)]
                                     for c in self._raw_base)
        self.rank = len(self.default_simples)
        self.zero = tuple([ZERO] * self.dim_h)
        del self._raw_roots, self._raw_base

    # -- family tables ------------------------------------------------------

    def _resolve_delta_sign(self, delta_sign, super_mix):
        """super_mix: the algebra has isotropic roots pairing the two blocks."""
        default = -1 if super_mix else 1
        if delta_sign is None:
            return default
        if delta_sign == 1 and super_mix:
            raise AlgebraError(
                "delta_sign=+1 is inconsistent for this algebra: the mixed odd "
                "roots would stop being isotropic")
        return delta_sign

    def _diag_gram(self, delta_sign):
        diag = [ONE] * self.eps_len + [Fraction(delta_sign)] * self.delta_len
        return tuple(tuple(diag[i] if i == j else ZERO for j in range(len(diag)))
                     for i in range(len(diag)))

    def _build_gl(self, delta_sign):
        m, n = self.m, self.n
        self.eps_len, self.delta_len = m, n
        sign = self._resolve_delta_sign(delta_sign, m >= 1 and n >= 1)
        self.gram = self._diag_gram(sign)
        dim = m + n
        roots = []
        for i in range(m):
            for j in range(m):
                if i != j:
                    roots.append((_sub(_unit(dim, i), _unit(dim, j)), 0))
        for i in range(n):
            for j in range(n):
                if i != j:
                    roots.append((_sub(_unit(dim, m + i), _unit(dim, m + j)), 0))
        for i in range(m):
            for j in range(n):
                v = _sub(_unit(dim, i), _unit(dim, m + j))
                roots.append((v, 1))
                roots.append((tuple(-c for c in v), 1))
        self._raw_roots = roots
        base = [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(m - 1)]
        if m and n:
            base.append(_sub(_unit(dim, m - 1), _unit(dim, m)))
        base += [_sub(_unit(dim, m + j), _unit(dim, m + j + 1)) for j in range(n - 1)]
        self._raw_base = base

    def _build_osp(self, delta_sign):
        m, n = self.m, self.n
        s = m // 2
        self.s = s
        self.eps_len, self.delta_len = s, n
        sign = self._resolve_delta_sign(delta_sign, m >= 2 and n >= 1)
        self.gram = self._diag_gram(sign)
        dim = s + n
        roots = []
        for i in range(s):
            for j in range(i + 1, s):
                for si in (1, -1):
                    for sj in (1, -1):
                        roots.append((_add(_unit(dim, i, si), _unit(dim, j, sj)), 0))
        if m % 2:
            for i in range(s):
                roots.append((_unit(dim, i), 0))
                roots.append((_unit(dim, i, -1), 0))
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        roots.append((_add(_unit(dim, s + i, si), _unit(dim, s + j, sj)), 0))
        for i in range(n):
            roots.append((_unit(dim, s + i, 2), 0))
            roots.append((_unit(dim, s + i, -2), 0))
        if m >= 1 and n >= 1:
            if m % 2:
                for j in range(n):
                    roots.append((_unit(dim, s + j), 1))
                    roots.append((_unit(dim, s + j, -1), 1))
            for j in range(n):
                for i in range(s):
                    for si in (1, -1):
                        for sd in (1, -1):
                            roots.append((_add(_unit(dim, s + j, sd), _unit(dim, i, si)), 1))
        # deduplicate (the two sign loops above generate each mixed root twice)
        seen, uniq = set(), []
        for c, p in roots:
            if c not in seen:
                seen.add(c)
                uniq.append((c, p))
        self._raw_roots = uniq
        self._raw_base = self._osp_base(dim, m, n, s)

    def _osp_base(self, dim, m, n, s):
        base = []
        if n == 0:
            base += [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(s - 1)]
            if m % 2 and s >= 1:
                base.append(_unit(dim, s - 1))
            elif m % 2 == 0 and s >= 2:
                base.append(_add(_unit(dim, s - 2), _unit(dim, s - 1)))
            return base
        base += [_sub(_unit(dim, s + j), _unit(dim, s + j + 1)) for j in range(n - 1)]
        if m == 0:
            base.append(_unit(dim, s + n - 1, 2))
        elif m == 1:
            base.append(_unit(dim, s + n - 1))
        elif m == 2:
            base.append(_sub(_unit(dim, s + n - 1), _unit(dim, 0)))
            base.append(_add(_unit(dim, s + n - 1), _unit(dim, 0)))
        else:
            base.append(_sub(_unit(dim, s + n - 1), _unit(dim, 0)))
            base += [_sub(_unit(dim, i), _unit(dim, i + 1)) for i in range(s - 1)]
            if m % 2:
                base.append(_unit(dim, s - 1))
            else:
                base.append(_add(_unit(dim, s - 2), _unit(dim, s - 1)))
        return base

    def _build_d21a(self, delta_sign):
        if delta_sign not in (None, -1):
            raise AlgebraError("D(2,1,a) has a fixed form; delta_sign is not configurable")
        a = self.a
        self.eps_len, self.delta_len = 3, 0
        self.gram = (
            (-(1 + a) / 2, ZERO, ZERO),
            (ZERO, HALF, ZERO),
            (ZERO, ZERO, a / 2),
        )
        roots = []
        for i in range(3):
            roots.append((_unit(3, i, 2), 0))
            roots.append((_unit(3, i, -2), 0))
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    roots.append(((Fraction(s1), Fraction(s2), Fraction(s3)), 1))
        self._raw_roots = roots
        self._raw_base = [
            (ONE, -ONE, -ONE),
            _unit(3, 1, 2),
            _unit(3, 2, 2),
        ]

    def _build_f4(self, delta_sign):
        if delta_sign not in (None, -1):
            raise AlgebraError("F(4) has a fixed form; delta_sign is not configurable")
        self.eps_len, self.delta_len = 3, 1
        diag = [ONE, ONE, ONE, Fraction(-3)]
        self.gram = tuple(tuple(diag[i] if i == j else ZERO for j in range(4))
                          for i in range(4))
        roots = []
        for i in range(3):
            for j in range(i + 1, 3):
                for si in (1, -1):
                    for sj in (1, -1):
                        roots.append((_add(_unit(4, i, si), _unit(4, j, sj)), 0))
        for i in range(3):
            roots.append((_unit(4, i), 0))
            roots.append((_unit(4, i, -1), 0))
        roots.append((_unit(4, 3), 0))
        roots.append((_unit(4, 3, -1), 0))
        for s1 in (1, -1):
            for s2 in (1, -1):
                for s3 in (1, -1):
                    for s4 in (1, -1):
                        roots.append(((HALF * s1, HALF * s2, HALF * s3, HALF * s4), 1))
        self._raw_roots = roots
        self._raw_base = [
            _sub(_unit(4, 0), _unit(4, 1)),
            _sub(_unit(4, 1), _unit(4, 2)),
            _unit(4, 2),
            (-HALF, -HALF, -HALF, HALF),
        ]

    def _build_g3(self, delta_sign):
        if delta_sign not in (None, -1):
            raise AlgebraError("G(3) has a fixed form; delta_sign is not configurable")
        # coordinates (e1, e2, d1); the G2 plane has a third unit -e1-e2
        self.eps_len, self.delta_len = 2, 1
        self.gram = (
            (Fraction(2), Fraction(-1), ZERO),
            (Fraction(-1), Fraction(2), ZERO),
            (ZERO, ZERO, Fraction(-2)),
        )
        e1, e2 = _unit(3, 0), _unit(3, 1)
        e3 = (-ONE, -ONE, ZERO)
        d = _unit(3, 2)
        g2 = [e1, e2, e3, _sub(e1, e2), _sub(e1, e3), _sub(e2, e3)]
        roots = []
        for v in g2:
            roots.append((v, 0))
            roots.append((tuple(-c for c in v), 0))
        roots.append((_unit(3, 2, 2), 0))
        roots.append((_unit(3, 2, -2), 0))
        roots.append((d, 1))
        roots.append((tuple(-c for c in d), 1))
        for v in (e1, e2, e3):
            for sv in (1, -1):
                for sd in (1, -1):
                    roots.append((_add(_scale(v, sv), _scale(d, sd)), 1))
        self._raw_roots = roots
        self._raw_base = [_add(d, e3), e1, _sub(e2, e1)]

    # -- basic operations ----------------------------------------------------

    def _make_root(self, coords, parity):
        coords = _frac_tuple(coords)
        norm = self.form(coords, coords)
        return Root(coords, parity, norm == 0)

    def form(self, v, w):
        """Invariant symmetric bilinear form in the coordinate basis."""
        if len(v) != self.dim_h or len(w) != self.dim_h:
            raise AlgebraError(
                f"dimension mismatch: expected {self.dim_h} coordinates")
        total = ZERO
        for i, row in enumerate(self.gram):
            vi = v[i]
            if vi:
                for j, g in enumerate(row):
                    if g and w[j]:
                        total += vi * g * w[j]
        return total

    def coroot_pair(self, lam, alpha):
        """2(lam, alpha)/(alpha, alpha), defined for nonisotropic alpha."""
        coords = alpha.coords if isinstance(alpha, Root) else alpha
        norm = self.form(coords, coords)
        if norm == 0:
            raise AlgebraError("coroot of an isotropic root is undefined")
        return 2 * self.form(lam, coords) / norm

    def reflect(self, mu, alpha):
        coords = alpha.coords if isinstance(alpha, Root) else alpha
        c = self.coroot_pair(mu, coords)
        return tuple(m - c * a for m, a in zip(mu, coords))

    def eps_part(self, w):
        return tuple(w[: self.eps_len])

    def delta_part(self, w):
        return tuple(w[self.eps_len:])

    def xi(self):
        """Sum of the delta units."""
        return tuple([ZERO] * self.eps_len + [ONE] * self.delta_len)

    def root(self, coords):
        r = self.root_by_coords.get(_frac_tuple(coords))
        if r is None:
            raise AlgebraError(f"{coords} is not a root")
        return r

    def __repr__(self):
        return f"Algebra({self.display})"


@lru_cache(maxsize=None)
def _algebra_cached(flat_text, delta_sign):
    return Algebra(parse_spec(flat_text), delta_sign)


def parse_algebra(text, delta_sign=None):
    """Parse a spec string ("osp(5|4)", "sp(4)", "D(2,1,1/2)", ...) into an Algebra."""
    return _algebra_cached(re.sub(r"\s+", "", text), delta_sign)


def _add(v, w):
    return tuple(a + b for a, b in zip(v, w))


def _sub(v, w):
    return tuple(a - b for a, b in zip(v, w))


def _scale(v, c):
    return tuple(Fraction(c) * a for a in v)


# public weight arithmetic aliases
wadd, wsub, wscale = _add, _sub, _scale


# ---------------------------------------------------------------------------
# bases, positivity, Weyl vectors

def simples_of(base):
    """Accept either a Base object or a plain sequence of roots."""
    return tuple(getattr(base, "simples", base))


def expand_in_simples(alg, simples, vector):
    """Coefficients of `vector` over the simple roots, or None."""
    cols = [r.coords for r in simples_of(simples)]
    return solve_exact(cols, tuple(Fraction(v) for v in vector))


def positive_roots(alg, base):
    """All roots that are nonnegative integer combinations of the base."""
    simples = simples_of(base)
    out = []
    for r in alg.roots:
        coeffs = expand_in_simples(alg, simples, r.coords)
        if coeffs is not None and all(c >= 0 for c in coeffs):
            ht = sum(coeffs)
            out.append((ht, r))
    out.sort(key=lambda t: (t[0], t[1].coords))
    return tuple(r for _, r in out)


def height(alg, base, vector):
    coeffs = expand_in_simples(alg, base, vector)
    if coeffs is None:
        return None
    return sum(coeffs)


def rho_vectors(alg, base):
    """(rho, rho0, rho1, xi) for the given base.

    rho0 and rho1 are the half sums of the even and odd positive roots and
    rho = rho0 - rho1; xi is the sum of the delta units.
    """
    pos = positive_roots(alg, base)
    rho0 = tuple([ZERO] * alg.dim_h)
    rho1 = tuple([ZERO] * alg.dim_h)
    for r in pos:
        if r.parity == 0:
            rho0 = _add(rho0, r.coords)
        else:
            rho1 = _add(rho1, r.coords)
    rho0 = _scale(rho0, HALF)
    rho1 = _scale(rho1, HALF)
    return _sub(rho0, rho1), rho0, rho1, alg.xi()


def integral_subsystem(alg, lam):
    """Even roots whose coroot pairing with lam is an integer."""
    out = set()
    for r in alg.even_roots:
        if alg.coroot_pair(lam, r).denominator == 1:
            out.add(r)
    return frozenset(out)


def simple_system(alg, subsys, positives):
    """Induced simple system of a root subsystem, by the stability test.

    A positive member beta is simple exactly when its reflection permutes the
    remaining positive members of the subsystem.
    """
    pos = [r for r in positives if r in subsys]
    pos_coords = {r.coords for r in pos}
    simples = []
    for beta in pos:
        rest = pos_coords - {beta.coords}
        image = {tuple(c for c in alg.reflect(v, beta)) for v in rest}
        if image == rest:
            simples.append(beta)
    simples.sort(key=lambda r: r.coords)
    return tuple(simples)


# ---------------------------------------------------------------------------
# dominant chamber on the delta block

def _delta_dominant(alg, nu):
    """nu lies in the chamber: no negative-integer pairing on the auxiliary
    B-type positive system of the delta block (y_i - y_j, y_i + y_j, 2 y_i)."""
    y = alg.delta_part(nu)
    n = len(y)
    vals = []
    for i in range(n):
        vals.append(2 * y[i])
        for j in range(i + 1, n):
            vals.append(y[i] - y[j])
            vals.append(y[i] + y[j])
    return all(v.denominator != 1 or v >= 0 for v in vals)


def dominant_representative(alg, mu):
    """Move mu into the delta-block dominant chamber.

    The reflections used are those of the integral subsystem of (mu - rho)
    supported on the delta block, i.e. the Weyl group elements the orbit
    theory allows.  Breadth-first search over the induced simple reflections
    in canonical order; the first chamber point found wins, so the result is
    deterministic.  Returns (word, nu) where word is the tuple of reflecting
    roots applied left to right.
    """
    rho = rho_vectors(alg, alg.default_simples)[0]
    lam = _sub(mu, rho)
    s = alg.eps_len
    delta_roots = frozenset(
        r for r in integral_subsystem(alg, lam)
        if all(c == 0 for c in r.coords[:s]))
    if _delta_dominant(alg, mu):
        return (), tuple(mu)
    pos = positive_roots(alg, alg.default_simples)
    gens = simple_system(alg, delta_roots, [r for r in pos if r in delta_roots])
    seen = {tuple(mu)}
    queue = [((), tuple(mu))]
    while queue:
        next_queue = []
        for word, nu in queue:
            for g in gens:
                im = alg.reflect(nu, g)
                if im in seen:
                    continue
                seen.add(im)
                nw = word + (g.coords,)
                if _delta_dominant(alg, im):
                    return nw, im
                next_queue.append((nw, im))
        queue = next_queue
    # the orbit is finite and meets the chamber; not reaching it means the
    # generators were insufficient, which cannot happen for valid input
    raise AlgebraError("no dominant representative found")


# ---------------------------------------------------------------------------
# printing / parsing of weights and roots

def format_rational(x):
    return str(Fraction(x))


def format_vector(alg, coords):
    """Human form of a coordinate vector, e.g. 'd2-e1' or '2d1+1/2e2'."""
    terms = []
    order = sorted(range(alg.dim_h), key=lambda i: (-1 if coords[i] > 0 else 1, i))
    for i in order:
        c = coords[i]
        if c == 0:
            continue
        unit = alg.units[i]
        if c == 1:
            term = unit
        elif c == -1:
            term = "-" + unit
        else:
            mag = format_rational(abs(c))
            term = ("-" if c < 0 else "") + (f"({mag})" if "/" in mag else mag) + unit
        if terms and not term.startswith("-"):
            terms.append("+" + term)
        else:
            terms.append(term)
    return "".join(terms) if terms else "0"


def format_weight(alg, w):
    eps = ",".join(format_rational(c) for c in alg.eps_part(w))
    del_ = ",".join(format_rational(c) for c in alg.delta_part(w))
    if alg.eps_len and alg.delta_len:
        return f"{eps}|{del_}"
    return eps or del_


def parse_root_expr(alg, text):
    """Parse a root expression like 'd1-d2', 'e3', '2d1' or '(1/2)e1+(1/2)d1'."""
    flat = re.sub(r"\s+", "", text)
    if not flat:
        raise AlgebraError("empty root expression")
    coords = [ZERO] * alg.dim_h
    unit_index = {u: i for i, u in enumerate(alg.units)}
    pos = 0
    term_rx = re.compile(r"([+-]?)(\((-?\d+(?:/\d+)?)\)|(-?\d+(?:/\d+)?))?([ed]\d+)")
    while pos < len(flat):
        mt = term_rx.match(flat, pos)
        if not mt:
            raise AlgebraError(f"cannot parse root expression {text!r}")
        sgn, _, paren_coef, bare_coef, unit = mt.groups()
        coef = parse_rational(paren_coef or bare_coef or "1")
        if sgn == "-":
            coef = -coef
        if unit not in unit_index:
            raise AlgebraError(f"unknown unit {unit!r} for {alg.display}")
        coords[unit_index[unit]] += coef
        pos = mt.end()
    return alg.root(tuple(coords))


def parse_weight(alg, text):
    """Parse 'x1,..,xs|y1,..,yn' (rationals allowed) into a coordinate tuple."""
    text = text.strip()
    if "|" in text:
        eps_txt, delta_txt = text.split("|", 1)
    elif alg.eps_len == 0:
        eps_txt, delta_txt = "", text
    elif alg.delta_len == 0:
        eps_txt, delta_txt = text, ""
    else:
        raise AlgebraError(
            f"weight for {alg.display} needs two blocks 'x1,..,x{alg.eps_len}"
            f"|y1,..,y{alg.delta_len}'")
    eps = [parse_rational(t) for t in eps_txt.split(",") if t.strip() != ""]
    del_ = [parse_rational(t) for t in delta_txt.split(",") if t.strip() != ""]
    if len(eps) != alg.eps_len or len(del_) != alg.delta_len:
        raise AlgebraError(
            f"weight arity mismatch for {alg.display}: expected "
            f"{alg.eps_len} epsilon and {alg.delta_len} delta coordinates, "
            f"got {len(eps)} and {len(del_)}")
    return tuple(eps + del_)
