"""Bases compatible with a fixed even positive system, connected by odd reflections.

A base is a simple system of the full root system whose induced even positive
roots agree with those of the default base.  Reflecting at an isotropic simple
root alpha replaces alpha by -alpha and adds alpha to every other simple root
pairing nontrivially with it; the finitely many bases form a connected graph
under this move.  A base is distinguished when it carries at most one
isotropic simple root.
"""

from dataclasses import dataclass
from functools import lru_cache

from lsbound.rootdata import (AlgebraError, Root, format_vector,
                              positive_roots, simples_of, wadd, wsub)


@dataclass(frozen=True)
class Base:
    simples: tuple  # of Root, in canonical display order
    key: frozenset  # of coordinate tuples, the identity of the base

    @property
    def isotropic_count(self):
        return sum(1 for r in self.simples if r.isotropic)

    @property
    def distinguished(self):
        return self.isotropic_count <= 1

    def __contains__(self, root):
        coords = root.coords if isinstance(root, Root) else tuple(root)
        return coords in self.key


@dataclass(frozen=True)
class NiComponent:
    """One connected component of the nonisotropic simple roots."""
    simples: tuple          # of Root
    kind: str               # A | C | BCsuper | B | D | G2 | rank1
    rank: int
    host_base: Base         # a distinguished base containing the component
    block: str              # eps | delta
    standalone: str | None  # spec string of the standalone oracle model, if any


def canonical_order(alg, simples):
    """Deterministic display order for a simple system.

    Chains are walked from the endpoint of largest squared length (ties by
    descending coordinates); anything else is sorted delta-block first.
    """
    simples = list(simples)
    if len(simples) <= 1:
        return tuple(simples)
    adj = {r: [t for t in simples if t is not r and alg.form(r.coords, t.coords) != 0]
           for r in simples}
    degs = sorted(len(v) for v in adj.values())
    is_path = degs[-1] <= 2 and degs.count(1) == 2 and _connected(simples, adj)
    if is_path:
        ends = [r for r in simples if len(adj[r]) == 1]
        ends.sort(key=lambda r: (_is_difference(r), abs(alg.form(r.coords, r.coords)),
                                 r.coords),
                  reverse=True)
        walk = [ends[0]]
        while len(walk) < len(simples):
            nxt = [t for t in adj[walk[-1]] if t not in walk]
            if len(nxt) != 1:
                break
            walk.append(nxt[0])
        if len(walk) == len(simples):
            return tuple(walk)
    s = alg.eps_len
    return tuple(sorted(simples, key=lambda r: (r.coords[s:], r.coords[:s]),
                        reverse=True))


def _is_difference(root):
    """True for roots of the shape unit_a - unit_b (chain heads read naturally)."""
    nz = [c for c in root.coords if c != 0]
    return len(nz) == 2 and sorted(nz) == [-1, 1]


def _connected(nodes, adj):
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        for t in adj[stack.pop()]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return len(seen) == len(nodes)


def make_base(alg, simples):
    simples = tuple(simples)
    return Base(canonical_order(alg, simples), frozenset(r.coords for r in simples))


def default_base(alg):
    return make_base(alg, alg.default_simples)


def odd_reflect(alg, base, alpha):
    """Reflect a base at one of its isotropic simple roots."""
    if isinstance(alpha, Root):
        alpha_root = alpha
    else:
        alpha_root = alg.root(alpha)
    if alpha_root.coords not in base.key:
        raise AlgebraError("odd reflection root must be simple in the base")
    if not alpha_root.isotropic:
        raise AlgebraError("odd reflection needs an isotropic root")
    new = []
    for beta in base.simples:
        if beta.coords == alpha_root.coords:
            new.append(alg.root(tuple(-c for c in beta.coords)))
        elif alg.form(beta.coords, alpha_root.coords) != 0:
            new.append(alg.root(wadd(beta.coords, alpha_root.coords)))
        else:
            new.append(beta)
    return make_base(alg, new)


@lru_cache(maxsize=None)
def _base_graph(alg):
    """BFS closure of the default base under odd reflections.

    Returns (bases, adjacency) where adjacency maps a base key to the list of
    (alpha, neighbour key) edges, alpha being the reflected isotropic simple.
    """
    start = default_base(alg)
    by_key = {start.key: start}
    adjacency = {start.key: []}
    queue = [start]
    while queue:
        base = queue.pop(0)
        for alpha in base.simples:
            if not alpha.isotropic:
                continue
            image = odd_reflect(alg, base, alpha)
            adjacency[base.key].append((alpha, image.key))
            if image.key not in by_key:
                by_key[image.key] = image
                adjacency[image.key] = []
                queue.append(image)
    bases = tuple(sorted(by_key.values(),
                         key=lambda b: tuple(r.coords for r in b.simples)))
    return bases, adjacency, by_key


def all_bases(alg):
    """Every base compatible with the fixed even positive system."""
    return _base_graph(alg)[0]


def distinguished_bases(alg):
    return tuple(b for b in all_bases(alg) if b.distinguished)


def find_base(alg, key_or_base):
    if isinstance(key_or_base, Base):
        key = key_or_base.key
    else:
        key = frozenset(tuple(c) for c in key_or_base)
    base = _base_graph(alg)[2].get(key)
    if base is None:
        raise AlgebraError("not a compatible base of this algebra")
    return base


def _reflection_path(alg, base_from, base_to):
    """Chain of (base, alpha) odd reflections leading from base_from to base_to."""
    _, adjacency, by_key = _base_graph(alg)
    if base_from.key not in adjacency or base_to.key not in adjacency:
        raise AlgebraError("bases do not belong to this algebra")
    if base_from.key == base_to.key:
        return []
    prev = {base_from.key: None}
    queue = [base_from.key]
    while queue:
        key = queue.pop(0)
        for alpha, nxt in adjacency[key]:
            if nxt not in prev:
                prev[nxt] = (key, alpha)
                if nxt == base_to.key:
                    queue = []
                    break
                queue.append(nxt)
    if base_to.key not in prev:
        raise AlgebraError("bases are not connected")  # impossible for valid input
    path = []
    key = base_to.key
    while prev[key] is not None:
        pkey, alpha = prev[key]
        path.append((by_key[pkey], alpha))
        key = pkey
    path.reverse()
    return path


def transport_weight(alg, lam_from, base_from, base_to):
    """Highest weight of the same simple module with respect to another base.

    Across one odd reflection at an isotropic simple alpha the highest weight
    moves by -alpha exactly when (lam, alpha) != 0; the result does not depend
    on the chain used.
    """
    lam = tuple(lam_from)
    for _, alpha in _reflection_path(alg, find_base(alg, base_from),
                                     find_base(alg, base_to)):
        if alg.form(lam, alpha.coords) != 0:
            lam = wsub(lam, alpha.coords)
    return lam


# ---------------------------------------------------------------------------
# nonisotropic simple roots and their components

def _component_kind(alg, comp_roots):
    """Classify one connected component (family-aware)."""
    s = alg.eps_len
    in_eps = all(all(c == 0 for c in r.coords[s:]) for r in comp_roots)
    rank = len(comp_roots)
    has_odd = any(r.parity == 1 for r in comp_roots)
    if rank == 1:
        return "rank1", ("eps" if in_eps else "delta")
    if alg.family == "G3":
        return ("G2", "eps") if in_eps else ("rank1", "delta")
    if alg.family == "F4":
        return ("B", "eps") if in_eps else ("rank1", "delta")
    if alg.family == "gl":
        return "A", ("eps" if in_eps else "delta")
    # osp (including the purely even degenerations)
    if has_odd:
        return "BCsuper", "delta"
    if in_eps and alg.eps_len:
        return ("B" if alg.m % 2 else "D"), "eps"
    return "C", "delta"


def _standalone_spec(alg, kind, rank):
    """Spec string of the standalone model backing criteria and oracle probes."""
    if kind == "rank1":
        return None
    if alg.family == "osp":
        if kind in ("B", "D"):
            return f"o({alg.m})"
        if kind == "C":
            return f"sp({2 * alg.n})"
        if kind == "BCsuper":
            return f"osp(1|{2 * alg.n})"
    if alg.family == "gl":
        return f"sl({rank + 1})"
    return None


@lru_cache(maxsize=None)
def nonisotropic_components(alg):
    """(roots, components): the union over all bases of nonisotropic simple
    roots, split into connected components with a hosting distinguished base."""
    roots = set()
    for base in all_bases(alg):
        roots.update(r for r in base.simples if not r.isotropic)
    roots = sorted(roots, key=lambda r: r.coords)
    comps = []
    unassigned = set(roots)
    while unassigned:
        seed = min(unassigned, key=lambda r: r.coords)
        comp = {seed}
        grow = [seed]
        while grow:
            cur = grow.pop()
            for t in list(unassigned - comp):
                if alg.form(cur.coords, t.coords) != 0:
                    comp.add(t)
                    grow.append(t)
        unassigned -= comp
        comps.append(comp)

    dist = distinguished_bases(alg)
    out = []
    for comp in comps:
        hosts = [b for b in dist if all(r.coords in b.key for r in comp)]
        if not hosts:
            raise AlgebraError("component without a distinguished host base")
        if alg.family == "gl":
            delta_first = [b for b in dist
                           if any(r.isotropic and any(c > 0 for c in r.coords[alg.eps_len:])
                                  for r in b.simples)]
            host = delta_first[0] if delta_first else hosts[0]
        else:
            host = min(hosts, key=lambda b: tuple(sorted(r.coords for r in b.simples)))
        kind, block = _component_kind(alg, comp)
        rank = len(comp)
        standalone = _standalone_spec(alg, kind, rank)
        out.append(NiComponent(
            simples=canonical_order(alg, comp),
            kind=kind, rank=rank, host_base=host, block=block,
            standalone=standalone))
    out.sort(key=lambda c: (0 if c.block == "eps" else 1, c.simples[0].coords))
    return frozenset(roots), tuple(out)


def format_base(alg, base):
    return "{" + ", ".join(format_vector(alg, r.coords) for r in base.simples) + "}"


def base_positive_roots(alg, base):
    return positive_roots(alg, simples_of(base))
