"""Root system identification for positive definite lattices.

A simple system is extracted from the lexicographic chamber (a root is
positive when its first nonzero coordinate is positive, the limit of a
generic linear functional with rapidly decreasing weights) and the Cartan
types are read off the Dynkin diagram of the simple roots.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import dynkin, enumlib, linalg
from .errors import ClassificationError

_LABEL_RE = re.compile(r"^([A-G])(\d+)(\^s)?$")


def label_rank(label: str) -> int:
    m = _LABEL_RE.match(label)
    if not m:
        raise ClassificationError(f"bad component label {label!r}")
    return int(m.group(2))


@dataclass(frozen=True)
class RootSystemType:
    """Multiset of finite Cartan-type labels, e.g. ('E6', 'E6', 'E6')."""

    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))

    @property
    def rank(self) -> int:
        return sum(label_rank(l) for l in self.labels)

    @property
    def name(self) -> str:
        if not self.labels:
            return "trivial"
        counts = Counter(self.labels)
        parts = []
        for lab in sorted(counts, key=lambda l: (-label_rank(l), l)):
            k = counts[lab]
            parts.append(lab if k == 1 else f"{k}{lab}")
        return "+".join(parts)

    def stripped(self) -> "RootSystemType":
        """Drop G2 and short-A1 companions, keeping the long-root part."""
        return RootSystemType(tuple(l for l in self.labels
                                    if l != "G2" and not l.endswith("^s")))

    def to_json(self) -> list:
        counts = Counter(self.labels)
        return [{"label": lab, "rank": label_rank(lab), "count": counts[lab]}
                for lab in sorted(counts)]

    def __str__(self):
        return self.name


def _lex_positive(coords) -> bool:
    for c in coords:
        if c != 0:
            return c > 0
    return False


def simple_system(roots) -> list:
    """The indecomposable positive roots, with the base property verified."""
    if not roots:
        return []
    positive = [r for r in roots if _lex_positive(r.vector.coords)]
    if 2 * len(positive) != len(roots):
        raise ClassificationError("root set is not symmetric under negation")
    positive.sort(key=lambda r: r.vector.coords)
    pos_coords = {r.vector.coords for r in positive}
    simple = []
    for r in positive:
        decomposable = any((r.vector - p.vector).coords in pos_coords
                           for p in positive if p.vector.coords != r.vector.coords)
        if not decomposable:
            simple.append(r)
    _verify_base(simple, roots)
    return simple


def _verify_base(simple, roots):
    for a in range(len(simple)):
        for b in range(a + 1, len(simple)):
            if simple[a].vector.dot(simple[b].vector) > 0:
                raise ClassificationError("simple roots with positive product")
    if not simple:
        if roots:
            raise ClassificationError("no simple roots for a nonempty system")
        return
    mat = linalg.transpose(linalg.frac_mat(
        [list(r.vector.coords) for r in simple]))
    for r in roots:
        sol = linalg.solve(mat, list(r.vector.coords))
        if sol is None:
            raise ClassificationError("root outside the span of the base")
        if any(c.denominator != 1 for c in sol):
            raise ClassificationError("non-integral coefficient over the base")
        if not (all(c >= 0 for c in sol) or all(c <= 0 for c in sol)):
            raise ClassificationError("root with mixed-sign coefficients")


def cartan_matrix(simple) -> list:
    """a_ij = 2 (r_i . r_j) / (r_j . r_j), an integer matrix for a base."""
    out = []
    for ri in simple:
        row = []
        for rj in simple:
            c = 2 * ri.vector.dot(rj.vector) / rj.norm
            if c.denominator != 1:
                raise ClassificationError("non-integral Cartan entry")
            row.append(int(c))
        out.append(row)
    return out


def root_system_type(lat, budget=enumlib.DEFAULT_BUDGET) -> RootSystemType:
    """Cartan type of the full crystallographic root system of the lattice."""
    roots = enumlib.roots_of(lat, budget=budget)
    return type_of_roots(roots)


def type_of_roots(roots) -> RootSystemType:
    """Cartan type of an explicitly given finite root system."""
    simple = simple_system(roots)
    if not simple:
        return RootSystemType(())
    diag = dynkin.build_diagram(simple)
    labels = []
    for _comp, kind, lab in dynkin.classify_components(diag):
        if kind != "finite":
            raise ClassificationError(f"non-finite component {lab}")
        labels.append(lab)
    return RootSystemType(tuple(labels))
