"""Coxeter/Dynkin diagrams of root sets.

Vertices carry norms, edges carry the exact inner product together with a
bond class read off cos^2 of the angle.  Components are classified as
finite, affine or hyperbolic with a structural label; the module also
enumerates maximal pure-affine full subdiagrams and computes diagram
automorphisms by canonical backtracking (instances here have <= 36
vertices).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import ClassificationError

# bond class by cos^2 = p^2 / (n_i n_j)
_BONDS = {
    Fraction(1, 4): "simple",
    Fraction(1, 2): "double",
    Fraction(3, 4): "triple",
    Fraction(1, 1): "affine",
}


@dataclass(frozen=True)
class Diagram:
    vertices: tuple          # (id, norm)
    edges: tuple             # (i, j, product, bond), i < j
    origin: tuple | None = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def norm(self, i) -> Fraction:
        return self.vertices[i][1]

    def adjacency(self) -> dict:
        adj = {v[0]: {} for v in self.vertices}
        for i, j, p, bond in self.edges:
            adj[i][j] = (p, bond)
            adj[j][i] = (p, bond)
        return adj

    def gram(self, subset=None) -> list:
        """Gram matrix of the (sub)diagram's vertices, from norms and products."""
        ids = sorted(subset) if subset is not None else [v[0] for v in self.vertices]
        pos = {v: k for k, v in enumerate(ids)}
        norms = dict(self.vertices)
        g = [[Fraction(0)] * len(ids) for _ in ids]
        for v in ids:
            g[pos[v]][pos[v]] = Fraction(norms[v])
        for i, j, p, _bond in self.edges:
            if i in pos and j in pos:
                g[pos[i]][pos[j]] = Fraction(p)
                g[pos[j]][pos[i]] = Fraction(p)
        return g

    def induced(self, subset) -> "Diagram":
        ids = sorted(subset)
        keep = set(ids)
        verts = tuple(v for v in self.vertices if v[0] in keep)
        edges = tuple(e for e in self.edges if e[0] in keep and e[1] in keep)
        origin = None
        if self.origin is not None:
            by_id = dict(zip((v[0] for v in self.vertices), self.origin))
            origin = tuple(by_id[i] for i in ids)
        return Diagram(verts, edges, origin)


def bond_class(product: Fraction, ni: Fraction, nj: Fraction) -> str:
    cos2 = product * product / (ni * nj)
    if cos2 > 1:
        return "dotted"
    b = _BONDS.get(cos2)
    if b is None:
        raise ClassificationError(f"no bond class for cos^2 = {cos2}")
    return b


def build_diagram(roots) -> Diagram:
    """One vertex per root, one edge per nonorthogonal pair."""
    vecs = [r.vector for r in roots]
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            u, v = vecs[a], vecs[b]
            # proportional iff all 2x2 minors of the coordinate rows vanish
            if all(u.coords[i] * v.coords[j] == u.coords[j] * v.coords[i]
                   for i in range(len(u.coords)) for j in range(i + 1, len(u.coords))):
                raise ClassificationError("duplicate or proportional roots")
    verts = tuple((i, r.norm) for i, r in enumerate(roots))
    edges = []
    for a in range(len(roots)):
        for b in range(a + 1, len(roots)):
            p = vecs[a].dot(vecs[b])
            if p != 0:
                edges.append((a, b, p, bond_class(p, roots[a].norm, roots[b].norm)))
    return Diagram(verts, tuple(edges), tuple(roots))


# ---------------------------------------------------------------------------
# component classification

def _components(diag: Diagram) -> list:
    adj = diag.adjacency()
    seen, out = set(), []
    for v, _n in diag.vertices:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            w = stack.pop()
            comp.append(w)
            for u in adj[w]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        out.append(sorted(comp))
    return out


def _short_mark(diag: Diagram, comp) -> str:
    norms = dict(diag.vertices)
    return "^s" if all(norms[v] == Fraction(2, 3) for v in comp) else ""


def _arm_lengths(adj, comp, center):
    """Lengths of the paths hanging off the unique branch vertex of a tree."""
    arms = []
    for nxt in adj[center]:
        length, prev, cur = 1, center, nxt
        while True:
            ext = [u for u in adj[cur] if u != prev]
            if not ext:
                break
            prev, cur = cur, ext[0]
            length += 1
        arms.append(length)
    return sorted(arms)


def _label_finite(diag: Diagram, comp) -> str:
    adj = diag.adjacency()
    n = len(comp)
    bonds = [adj[a][b][1] for a in comp for b in adj[a] if b in comp and a < b]
    if "triple" in bonds:
        if n == 2:
            return "G2"
        raise ClassificationError("triple bond in a component of size > 2")
    if "double" in bonds:
        return _label_double(diag, comp, bonds)
    degs = sorted(len([b for b in adj[a] if b in comp]) for a in comp)
    if n == 1:
        return "A1" + _short_mark(diag, comp)
    if degs[-1] <= 2 and degs.count(1) == 2:
        return f"A{n}" + _short_mark(diag, comp)
    if degs[-1] == 3 and degs.count(3) == 1:
        center = next(a for a in comp if len([b for b in adj[a] if b in comp]) == 3)
        arms = _arm_lengths(adj, comp, center)
        if arms[0] == arms[1] == 1:
            return f"D{n}" + _short_mark(diag, comp)
        if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
            return f"E{n}" + _short_mark(diag, comp)
    raise ClassificationError(f"unrecognized finite component of size {n}")


def _label_double(diag: Diagram, comp, bonds) -> str:
    """B_n / C_n / F4: a path with a single double bond, two root lengths."""
    adj = diag.adjacency()
    n = len(comp)
    norms = dict(diag.vertices)
    degs = sorted(len([b for b in adj[a] if b in comp]) for a in comp)
    if bonds.count("double") != 1 or degs[-1] > 2 or degs.count(1) != 2:
        raise ClassificationError("unrecognized double-bond component")
    lo = min(norms[v] for v in comp)
    hi = max(norms[v] for v in comp)
    n_short = sum(1 for v in comp if norms[v] == lo)
    if hi != 2 * lo or n_short == n:
        raise ClassificationError("double bond without a 2:1 length ratio")
    if n == 2 or n_short == 1:
        return f"B{n}"
    if n_short == n - 1:
        return f"C{n}"
    if n == 4 and n_short == 2:
        return "F4"
    raise ClassificationError("unrecognized two-length component")


def _label_affine(diag: Diagram, comp) -> str:
    adj = diag.adjacency()
    n = len(comp)
    mark = _short_mark(diag, comp)
    bonds = [adj[a][b][1] for a in comp for b in adj[a] if b in comp and a < b]
    if "affine" in bonds:
        if n == 2:
            return "A~1" + mark
        raise ClassificationError("affine bond in a component of size > 2")
    if "triple" in bonds:
        if n == 3:
            return "G~2" + mark
        raise ClassificationError("triple bond in an affine component of size > 2")
    if "double" in bonds:
        raise ClassificationError("B/C/F classification not supported")
    degs = sorted(len([b for b in adj[a] if b in comp]) for a in comp)
    if degs[0] == 2 and degs[-1] == 2:
        return f"A~{n - 1}" + mark          # cycle
    if degs[-1] == 4:
        if n == 5:
            return "D~4" + mark
        raise ClassificationError("degree-4 vertex outside D~4")
    branch = [a for a in comp if len([b for b in adj[a] if b in comp]) == 3]
    if len(branch) == 2:
        return f"D~{n - 1}" + mark
    if len(branch) == 1:
        arms = _arm_lengths(adj, comp, branch[0])
        if arms == [2, 2, 2]:
            return "E~6" + mark
        if arms == [1, 3, 3]:
            return "E~7" + mark
        if arms == [1, 2, 5]:
            return "E~8" + mark
    raise ClassificationError(f"unrecognized affine component of size {n}")


def classify_components(diag: Diagram) -> list:
    """[(vertex list, kind, label)] with kind in finite/affine/hyperbolic."""
    out = []
    for comp in _components(diag):
        g = diag.gram(comp)
        if linalg.is_pos_def(g):
            out.append((comp, "finite", _label_finite(diag, comp)))
        elif linalg.is_pos_semidef(g):
            out.append((comp, "affine", _label_affine(diag, comp)))
        else:
            out.append((comp, "hyperbolic", "hyperbolic"))
    return out


def affine_null_vector(diag: Diagram, comp) -> list:
    """The positive primitive integer dependency of an affine component.

    Returned as [(vertex id, coefficient)]; the corresponding combination of
    root vectors is isotropic and orthogonal to every component vertex.
    """
    g = diag.gram(comp)
    ker = linalg.rational_kernel(linalg.frac_mat(g))
    if len(ker) != 1:
        raise ClassificationError("component radical is not one-dimensional")
    coeffs = linalg.primitivize(ker[0])
    if any(c < 0 for c in coeffs):
        coeffs = [-c for c in coeffs]
    if any(c <= 0 for c in coeffs):
        raise ClassificationError("null vector is not positive")
    return list(zip(sorted(comp), [int(c) for c in coeffs]))


# ---------------------------------------------------------------------------
# maximal pure-affine subdiagrams

def _connected_affine_catalog(diag: Diagram) -> list:
    """All vertex sets of connected affine full subdiagrams.

    Connected positive semidefinite subsets are grown neighbor by neighbor
    (every subset of a psd set is psd, so non-psd extensions prune the whole
    branch); the degenerate ones among them are the affine diagrams.
    """
    adj = diag.adjacency()
    ids = [v[0] for v in diag.vertices]
    catalog = []

    def grow(current, frontier, banned):
        g = diag.gram(current)
        if not linalg.is_pos_semidef(g):
            return
        if linalg.rank(linalg.frac_mat(g)) < len(current):
            catalog.append(frozenset(current))
            # affine components are maximal connected psd: no proper extension
            return
        local_ban = set(banned)
        for v in sorted(frontier):
            if v in local_ban:
                continue
            new_frontier = (frontier | set(adj[v])) - current - {v}
            grow(current | {v}, new_frontier, set(local_ban))
            local_ban.add(v)

    for start in ids:
        # subsets whose minimum vertex is `start`
        banned = {v for v in ids if v < start}
        grow({start}, set(adj[start]), banned)
    return catalog


def _maximal_cliques(compat: list) -> list:
    """Bron-Kerbosch with pivoting on an adjacency list of sets."""
    n = len(compat)
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot = max(p | x, key=lambda v: len(compat[v] & p))
        for v in sorted(p - compat[pivot]):
            bk(r | {v}, p & compat[v], x & compat[v])
            p = p - {v}
            x = x | {v}

    bk(set(), set(range(n)), set())
    return out


def maximal_pure_affine(diag: Diagram, lat) -> list:
    """Maximal full subdiagrams all of whose components are affine.

    Returns [(vertex set, sorted type tuple, corank)] where corank is
    rank(lat) minus the rank of the span of the vertex vectors.  Because a
    proper full subdiagram of a connected affine diagram is finite, affine
    components can only combine whole: maximal pure-affine sets are exactly
    the maximal cliques of the compatibility graph of the affine catalog.
    """
    if diag.origin is None:
        raise ClassificationError("diagram has no root vectors attached")
    if any(p > 0 for _i, _j, p, _b in diag.edges):
        # the catalog argument (affine components admit no psd extension)
        # needs a chamber root set: all pairwise products <= 0
        raise ClassificationError("pure-affine search needs nonpositive products")
    catalog = sorted(_connected_affine_catalog(diag), key=sorted)
    adj = diag.adjacency()
    compat = []
    for a in range(len(catalog)):
        s = set()
        for b in range(len(catalog)):
            if a == b:
                continue
            if catalog[a] & catalog[b]:
                continue
            if any(v in adj[u] for u in catalog[a] for v in catalog[b]):
                continue
            s.add(b)
        compat.append(s)
    by_id = dict(zip((v[0] for v in diag.vertices), diag.origin))
    out = []
    for clique in _maximal_cliques(compat):
        verts = sorted(set().union(*(catalog[c] for c in clique))) if clique else []
        if not verts:
            continue
        sub = diag.induced(verts)
        labels = tuple(sorted(lab for _c, _k, lab in classify_components(sub)))
        rows = [[c for c in by_id[v].vector.coords] for v in verts]
        corank = lat.rank - linalg.rank(linalg.frac_mat(rows))
        out.append((verts, labels, corank))
    out.sort(key=lambda t: (t[1], t[0]))
    return out


# ---------------------------------------------------------------------------
# isomorphism and automorphisms

def _invariants(diag: Diagram):
    adj = diag.adjacency()
    inv = {}
    for v, norm in diag.vertices:
        bonds = sorted((b, p) for _u, (p, b) in adj[v].items())
        inv[v] = (norm, len(adj[v]), tuple(bonds))
    return adj, inv


def _match(diag1, diag2, count_all=False):
    """Backtracking diagram isomorphism; returns one map or a total count."""
    if diag1.size != diag2.size or len(diag1.edges) != len(diag2.edges):
        return 0 if count_all else None
    adj1, inv1 = _invariants(diag1)
    adj2, inv2 = _invariants(diag2)
    if sorted(inv1.values()) != sorted(inv2.values()):
        return 0 if count_all else None
    # order vertices so each one touches the already-mapped prefix when the
    # graph allows: adjacency then constrains every placement immediately
    freq = {}
    for val in inv1.values():
        freq[val] = freq.get(val, 0) + 1
    ids1, placed = [], set()
    pool = set(inv1)
    while pool:
        touching = [v for v in pool if adj1[v].keys() & placed]
        cand = touching or sorted(pool, key=lambda v: (freq[inv1[v]], inv1[v], v))[:1]
        v = min(cand, key=lambda u: (freq[inv1[u]],
                                     -len(adj1[u].keys() & placed), inv1[u], u))
        ids1.append(v)
        placed.add(v)
        pool.discard(v)
    norms2 = dict(diag2.vertices)
    found = [0]
    mapping = {}

    def compatible(v1, v2):
        if inv1[v1] != inv2[v2]:
            return False
        for u1, (p, b) in adj1[v1].items():
            if u1 in mapping:
                got = adj2[v2].get(mapping[u1])
                if got != (p, b):
                    return False
        # mapped non-neighbors must stay non-neighbors
        for u1 in mapping:
            if u1 not in adj1[v1] and mapping[u1] in adj2[v2]:
                return False
        return True

    def bt(k):
        if k == len(ids1):
            found[0] += 1
            return not count_all
        v1 = ids1[k]
        for v2 in norms2:
            if v2 in mapping.values():
                continue
            if compatible(v1, v2):
                mapping[v1] = v2
                if bt(k + 1):
                    return True
                del mapping[v1]
        return False

    done = bt(0)
    if count_all:
        return found[0]
    return dict(mapping) if done else None


def is_isomorphic(diag1: Diagram, diag2: Diagram) -> bool:
    return _match(diag1, diag2) is not None


def isomorphism(diag1: Diagram, diag2: Diagram) -> dict | None:
    return _match(diag1, diag2)


def automorphism_order(diag: Diagram) -> int:
    return _match(diag, diag, count_all=True)


# ---------------------------------------------------------------------------
# serialization

def to_json(diag: Diagram) -> dict:
    return {
        "vertices": [{"id": v, "norm": str(n)} for v, n in diag.vertices],
        "edges": [{"a": i, "b": j, "product": str(p), "bond": b}
                  for i, j, p, b in diag.edges],
    }


_EDGE_STYLE = {
    "simple": "",
    "double": ' [label="2"]',
    "triple": ' [label="3"]',
    "affine": ' [label="inf"]',
    "dotted": ' [style=dotted]',
}


def to_dot(diag: Diagram) -> str:
    """Graphviz source; filled vertices are long roots, open ones short."""
    norms = [n for _v, n in diag.vertices]
    long_norm = max(norms) if norms else Fraction(2)
    lines = ["graph diagram {", "  node [shape=circle];"]
    for v, n in diag.vertices:
        style = "filled" if n == long_norm else "solid"
        lines.append(f'  v{v} [style={style}];')
    for i, j, _p, b in diag.edges:
        lines.append(f"  v{i} -- v{j}{_EDGE_STYLE[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
