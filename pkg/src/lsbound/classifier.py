"""Boundedness of simple highest weight modules.

The decision reduces to the connected components of the nonisotropic simple
roots: the module is bounded exactly when the induced highest weight module
over every component is bounded.  Components of rank one are always bounded;
symplectic and osp(1|2n) components have an exact arithmetic criterion on the
shifted delta coordinates; orthogonal components of rank at least three must
be finite-dimensional, with a special two-branch rule at o5; type A components
(and o6, which is type A in disguise) have no transcribed criterion here and
are probed by the rank oracle instead, so "unknown" is a legitimate verdict
for them.

All criteria are evaluated on coroot pairings or plain coordinates of the
shifted weight, which are independent of the delta-block sign convention.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from lsbound.basegraph import (NiComponent, default_base, find_base,
                               nonisotropic_components, transport_weight)
from lsbound.rootdata import (AlgebraError, format_weight, parse_algebra,
                              positive_roots, rho_vectors, simples_of, wadd,
                              wsub)

DEFAULT_DEPTH = 8

BOUNDED_STATUSES = ("finiteDim", "boundedInfinite", "oracleBounded")


@dataclass(frozen=True)
class ComponentVerdict:
    component: object        # NiComponent, or a label for reduction factors
    status: str              # finiteDim | boundedInfinite | unbounded |
                             # oracleBounded | oracleUnboundedEvidence | unknown
    witness: str
    transported_weight: tuple  # restriction of the transported weight

    def to_json(self):
        comp = self.component
        if isinstance(comp, NiComponent):
            desc = {"kind": comp.kind, "rank": comp.rank, "block": comp.block}
        else:
            desc = {"kind": str(comp)}
        return {
            **desc,
            "status": self.status,
            "witness": self.witness,
            "transportedWeight": [str(c) for c in self.transported_weight],
        }


@dataclass(frozen=True)
class Verdict:
    bounded: str             # yes | no | unknown
    decided_by: str          # rank_one | even_part | single_component |
                             # per_component | reduction
    components: tuple
    strongly_typical: bool
    degree_bound: int | None

    def to_json(self, alg=None):
        return {
            "schema": "lsb/1",
            **({"algebra": alg.display} if alg is not None else {}),
            "bounded": self.bounded,
            "decidedBy": self.decided_by,
            "stronglyTypical": self.strongly_typical,
            "degreeBound": self.degree_bound,
            "components": [c.to_json() for c in self.components],
        }


# ---------------------------------------------------------------------------
# exact criteria

def _pos_int(v):
    return v.denominator == 1 and v > 0


def is_bounded_sp_family(kind, n, lam_plus_rho):
    """Status of L over sp(2n) or osp(1|2n) from the shifted coordinates.

    lam_plus_rho is the coordinate tuple (y_1, ..., y_n) of the shifted
    weight.  For n = 1 every module in category O is bounded.  For n > 1 the
    module is bounded exactly when all consecutive differences and the last
    pairwise sum are positive integers and the final coordinate is a half
    integer: integral final coordinate means finite-dimensional for sp and
    bounded infinite for osp(1|2n), strictly half-odd means the reverse.
    """
    if kind not in ("sp2n", "osp1_2n"):
        raise AlgebraError(f"unknown family tag {kind}")
    y = tuple(Fraction(c) for c in lam_plus_rho)
    if len(y) != n:
        raise AlgebraError(f"expected {n} coordinates, got {len(y)}")
    if n == 1:
        yn = y[0]
        if kind == "sp2n":
            return "finiteDim" if _pos_int(yn) else "boundedInfinite"
        return "finiteDim" if (2 * yn).denominator == 1 and yn.denominator == 2 \
            and yn > 0 else "boundedInfinite"
    dede = all(_pos_int(y[i] - y[i + 1]) for i in range(n - 1)) \
        and _pos_int(y[-2] + y[-1])
    if not dede:
        return "unbounded"
    yn = y[-1]
    integral = yn.denominator == 1
    half_odd = yn.denominator == 2
    if kind == "sp2n":
        if integral and yn > 0:
            return "finiteDim"
        if half_odd:
            return "boundedInfinite"
    else:
        if half_odd and yn > 0:
            return "finiteDim"
        if integral:
            return "boundedInfinite"
    return "unbounded"


def _o5_status(x):
    """Bounded o5 modules from the shifted epsilon coordinates (x1, x2)."""
    x1, x2 = x
    if _pos_int(x1 - x2) and _pos_int(2 * x2):
        return "finiteDim"
    if _pos_int(2 * x1) and _pos_int(2 * x2) and (x1 - x2).denominator != 1:
        return "boundedInfinite"
    return "unbounded"


def _dominant_integral(alg, lam, simples):
    """(lam, alpha_vee) in Z_{>=0} for every listed simple root."""
    for r in simples:
        p = alg.coroot_pair(lam, r)
        if p.denominator != 1 or p < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# per-component verdicts

def _probe_component(comp, lam_block, depth):
    """Oracle probe for a type A (or o6) component, on its standalone model."""
    from lsbound.oracle import OracleCapError, boundedness_probe

    if depth < 1:
        raise AlgebraError("oracle-backed components need depth >= 1")
    spec = comp.standalone
    if spec is None:
        return "unknown", "no standalone oracle model"
    target = parse_algebra(spec)
    schedule = (max(2, depth - 4), max(3, depth - 2), max(4, depth))
    try:
        pr = boundedness_probe(target, default_base(target), lam_block,
                               depths=schedule)
    except OracleCapError as exc:
        return "unknown", f"oracle probe refused: {exc}"
    return pr.status, (f"probe depths {pr.depths} max multiplicities "
                       f"{pr.max_mults}")


def component_verdict(alg, comp, lam_t, depth=DEFAULT_DEPTH):
    """Verdict for one component; lam_t is the transported ambient weight."""
    host_rho = _host_rho(alg, comp.host_base)
    shifted = wadd(tuple(Fraction(c) for c in lam_t), host_rho)
    if comp.block == "eps":
        restricted = alg.eps_part(lam_t)
        shifted_block = alg.eps_part(shifted)
    else:
        restricted = alg.delta_part(lam_t)
        shifted_block = alg.delta_part(shifted)
    kind, rank = comp.kind, comp.rank
    if kind == "rank1":
        root = comp.simples[0]
        if root.parity == 0:
            p = alg.coroot_pair(lam_t, root)
            status = "finiteDim" if p.denominator == 1 and p >= 0 \
                else "boundedInfinite"
            witness = f"rank-1 pairing {p}"
        else:
            double = tuple(2 * c for c in root.coords)
            p = alg.coroot_pair(lam_t, double)
            status = "finiteDim" if p.denominator == 1 and p >= 0 \
                else "boundedInfinite"
            witness = f"rank-1 osp(1|2) pairing {p}"
    elif kind == "C":
        status = is_bounded_sp_family("sp2n", rank, shifted_block)
        witness = f"shifted delta coordinates {_fmt(shifted_block)}"
    elif kind == "BCsuper":
        status = is_bounded_sp_family("osp1_2n", rank, shifted_block)
        witness = f"shifted delta coordinates {_fmt(shifted_block)}"
    elif kind == "B" and rank == 2:
        status = _o5_status(shifted_block)
        witness = f"o5 rule on shifted epsilon coordinates {_fmt(shifted_block)}"
    elif kind in ("B", "D", "G2") and not (kind == "D" and rank == 3):
        fd = _dominant_integral(alg, lam_t, comp.simples)
        status = "finiteDim" if fd else "unbounded"
        witness = ("dominant integral on the component"
                   if fd else "not dominant integral; no infinite bounded "
                   "modules for this component type")
    else:  # type A, including o6 = D3
        status, witness = _probe_component(comp, restricted, depth)
    return ComponentVerdict(comp, status, witness, restricted)


@lru_cache(maxsize=None)
def _host_rho_cached(alg, key):
    base = find_base(alg, key)
    return rho_vectors(alg, base.simples)[0]


def _host_rho(alg, base):
    return _host_rho_cached(alg, base.key)


def _fmt(coords):
    return "(" + ",".join(str(c) for c in coords) + ")"


# ---------------------------------------------------------------------------
# whole-algebra classification

def is_strongly_typical(alg, base, lam):
    """(lam + rho, beta) != 0 for every odd root beta."""
    base = _as_base(alg, base)
    rho = _host_rho(alg, base)
    lr = wadd(tuple(Fraction(c) for c in lam), rho)
    return all(alg.form(lr, beta.coords) != 0 for beta in alg.odd_roots)


def _as_base(alg, base):
    if base is None:
        return default_base(alg)
    return find_base(alg, base)


def _decided_by(alg, comps):
    big = [c for c in comps if c.rank > 1]
    if alg.family == "D21a" or not big:
        return "rank_one"
    if alg.family in ("F4", "G3", "gl"):
        return "even_part"
    if len(big) == 1:
        return "single_component"
    return "per_component"


def classify(alg, base, lam, depth=DEFAULT_DEPTH):
    """Boundedness verdict for L(base, lam) with per-component evidence."""
    base = _as_base(alg, base)
    lam = tuple(Fraction(c) for c in lam)
    _, comps = nonisotropic_components(alg)
    verdicts = []
    for comp in comps:
        lam_t = transport_weight(alg, lam, base, comp.host_base)
        verdicts.append(component_verdict(alg, comp, lam_t, depth))
    statuses = [v.status for v in verdicts]
    if any(s == "unbounded" for s in statuses):
        bounded = "no"
    elif all(s in BOUNDED_STATUSES for s in statuses):
        bounded = "yes"
    else:
        bounded = "unknown"
    st = is_strongly_typical(alg, base, lam)
    verdict = Verdict(bounded, _decided_by(alg, comps), tuple(verdicts), st, None)
    if bounded == "yes":
        try:
            db = degree_bound(alg, lam, base=base, depth=depth, verdict=verdict)
        except AlgebraError:
            db = None
        verdict = Verdict(bounded, verdict.decided_by, verdict.components, st, db)
    return verdict


def classify_via_reduction(alg, lam, depth=DEFAULT_DEPTH):
    """Independent verdict for osp(m|2n), n > 2, through the n = 2 subalgebra.

    The module is bounded exactly when the even symplectic factor is bounded
    and the corank-two orthosymplectic subalgebra (simple roots inside the
    default base) gives a bounded module; the two checks run on plain
    coordinate restrictions, no transport needed.
    """
    if alg.family != "osp" or alg.n <= 2 or alg.m < 1:
        raise AlgebraError("the reduction applies to osp(m|2n) with n > 2")
    lam = tuple(Fraction(c) for c in lam)
    base = default_base(alg)
    rho_sp = tuple(Fraction(alg.n - j) for j in range(alg.n))
    y = wadd(alg.delta_part(lam), rho_sp)
    sp_status = is_bounded_sp_family("sp2n", alg.n, y)
    sub = parse_algebra(f"osp({alg.m}|4)")
    sub_lam = tuple(alg.eps_part(lam)) + tuple(alg.delta_part(lam)[-2:])
    sub_verdict = classify(sub, default_base(sub), sub_lam, depth)
    if sub_verdict.bounded == "yes":
        sub_status = ("finiteDim" if all(v.status == "finiteDim"
                                         for v in sub_verdict.components)
                      else "boundedInfinite")
    elif sub_verdict.bounded == "no":
        sub_status = "unbounded"
    else:
        sub_status = "unknown"
    factors = (
        ComponentVerdict("sp2n-factor", sp_status,
                         f"shifted delta coordinates {_fmt(y)}",
                         alg.delta_part(lam)),
        ComponentVerdict("osp-m4-factor", sub_status,
                         f"subalgebra verdict {sub_verdict.bounded}", sub_lam),
    )
    if sp_status == "unbounded" or sub_verdict.bounded == "no":
        bounded = "no"
    elif sp_status in BOUNDED_STATUSES and sub_verdict.bounded == "yes":
        bounded = "yes"
    else:
        bounded = "unknown"
    st = is_strongly_typical(alg, base, lam)
    verdict = Verdict(bounded, "reduction", factors, st, None)
    if bounded == "yes":
        try:
            db = degree_bound(alg, lam, base=base, depth=depth, verdict=verdict)
        except AlgebraError:
            db = None
        verdict = Verdict(bounded, "reduction", factors, st, db)
    return verdict


# ---------------------------------------------------------------------------
# degree bounds

def weyl_dimension(alg, lam):
    """Dimension of the finite-dimensional module by the product formula."""
    rho = _host_rho(alg, default_base(alg))
    lr = wadd(tuple(Fraction(c) for c in lam), rho)
    num = Fraction(1)
    for r in positive_roots(alg, alg.default_simples):
        if r.parity:
            raise AlgebraError("dimension formula implemented for even algebras")
        num *= alg.form(lr, r.coords) / alg.form(rho, r.coords)
    if num.denominator != 1 or num <= 0:
        raise AlgebraError("weight is not dominant integral")
    return int(num)


def _measured_degree(spec, lam, depth):
    """Max multiplicity of the standalone factor seen up to the given depth."""
    from lsbound.oracle import OracleCapError, truncated_character

    target = parse_algebra(spec)
    try:
        ch = truncated_character(target, default_base(target), lam, depth)
    except OracleCapError:
        return None
    return max(ch.terms.values(), default=1)


def _factor_degree(spec, lam, depth):
    """Upper bound (or oracle-measured value) for the degree of one factor."""
    target = parse_algebra(spec)
    lam = tuple(Fraction(c) for c in lam)
    if target.family == "osp" and target.n == 0:
        m = target.m
        if m <= 4:
            return 1
        rho = _host_rho(target, default_base(target))
        shifted = wadd(lam, rho)
        if m == 5:
            status = _o5_status(shifted)
        elif _dominant_integral(target, lam, target.default_simples):
            status = "finiteDim"
        elif m == 6:
            status = "typeA"
        else:
            status = "unbounded"
        if status == "finiteDim":
            return weyl_dimension(target, lam)
        if status == "unbounded":
            return None
        return _measured_degree(spec, lam, depth)
    # delta-side factor: sp(2n) or osp(1|2n)
    n = target.n
    if n == 1:
        return 1
    rho = _host_rho(target, default_base(target))
    shifted = wadd(lam, rho)
    kind = "osp1_2n" if target.m == 1 else "sp2n"
    status = is_bounded_sp_family(kind, n, shifted)
    if status == "unbounded":
        return None
    if status == "finiteDim":
        if target.m == 0:
            return weyl_dimension(target, lam)
        sp = parse_algebra(f"sp({2 * n})")
        return (1 << (2 * n)) * weyl_dimension(sp, lam)
    return _measured_degree(spec, lam, depth)


def degree_bound(alg, lam, base=None, depth=DEFAULT_DEPTH, verdict=None):
    """Best available upper bound for the degree of a bounded module.

    Combines the n = 1 bound 2^(2m) deg(o_m factor), the m = 3, 4 bound
    2^(2n) deg(delta factor) and, for strongly typical weights, the product
    bound 2^(2sn) deg(delta factor) deg(o_m factor); returns None when no
    bound applies.  Finite-dimensional factor degrees are bounded by their
    dimension; bounded infinite factors are oracle-measured, which is a best
    effort rather than a proven bound.
    """
    if alg.family != "osp" or alg.m < 1 or alg.n < 1:
        return None
    base = _as_base(alg, base)
    lam = tuple(Fraction(c) for c in lam)
    if verdict is None:
        verdict = classify(alg, base, lam, depth)
    if verdict.bounded == "no":
        raise AlgebraError("degree bound requested for an unbounded module")
    if verdict.bounded != "yes":
        return None
    m, n, s = alg.m, alg.n, alg.s
    p = m % 2
    delta_spec = f"osp(1|{2 * n})" if p else f"sp({2 * n})"
    lam_default = transport_weight(alg, lam, base, default_base(alg))
    candidates = []
    if n == 1:
        if m >= 3:
            deg = _factor_degree(f"o({m})", alg.eps_part(lam_default), depth)
        else:
            deg = 1
        if deg is not None:
            candidates.append((1 << (2 * m)) * deg)
    if m in (3, 4):
        _, comps = nonisotropic_components(alg)
        delta_comp = next(c for c in comps if c.block == "delta")
        lam_t = transport_weight(alg, lam, base, delta_comp.host_base)
        deg = _factor_degree(delta_spec, alg.delta_part(lam_t), depth)
        if deg is not None:
            candidates.append((1 << (2 * n)) * deg)
    if verdict.strongly_typical and s >= 1:
        lam_delta = tuple(v - s for v in alg.delta_part(lam_default))
        deg1 = _factor_degree(delta_spec, lam_delta, depth)
        if m >= 3:
            deg2 = _factor_degree(f"o({m})", alg.eps_part(lam_default), depth)
        else:
            deg2 = 1
        if deg1 is not None and deg2 is not None:
            candidates.append((1 << (2 * s * n)) * deg1 * deg2)
    return min(candidates) if candidates else None
