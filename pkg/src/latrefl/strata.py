"""Boundary-stratification bookkeeping for the period compactification.

Eleven strata in eight printed levels; the three horizontal adjacencies of
the printed incidence array come with an order, the five vertical ones are
stored orientation-unresolved (the array is ordered by lattice embeddings,
which does not determine a closure order for them).
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import LatticeError

# level -> (member labels, dimension, defining data)
_LEVELS = (
    ("I0", ("I0",), 0, "singleton; isotropic rank 1, contraction over the arrangement divisor"),
    ("I1", ("I1",), 1, "curve; I(2E8+2U), contraction over the pairwise-intersection divisor"),
    ("II1", ("II(3E6)", "II(D7+A11)"), 1, "curves; root systems of rank 18"),
    ("II2", ("II(A17)", "II(E7+D10)"), 2, "surfaces; root systems of rank 17"),
    ("II3", ("II(2E8)", "II(D16)"), 3, "threefolds; root systems of rank 16"),
    ("III0", ("III0",), 0, "singleton; isotropic rank 2 data fully degenerate"),
    ("III1", ("III1",), 1, "curve"),
    ("III2", ("III2",), 2, "surface; III(2E8+U)"),
)

_ROOT_RANK = {
    "2E8": 16, "D16": 16, "A17": 17, "E7+D10": 17, "3E6": 18, "D7+A11": 18,
}

# which root-system strata meet the arrangement closure (special vectors in
# the perp of the corresponding isotropic plane)
_MEETS_ARRANGEMENT = {
    "2E8": True, "D16": True, "A17": True, "E7+D10": True,
    "3E6": False, "D7+A11": False,
}

# the printed incidence array: '<' rows resolved, '^' columns unresolved
_EDGES = (
    ("I0", "I1", "as-printed"),
    ("III0", "III1", "as-printed"),
    ("III1", "III2", "as-printed"),
    ("III1", "I0", "unresolved"),
    ("III2", "I1", "unresolved"),
    ("II1", "III0", "unresolved"),
    ("II2", "III1", "unresolved"),
    ("II3", "III2", "unresolved"),
)

# verbatim counts of the maximal strata as the text groups them
TEXT_COUNTS = {"curves": 3, "surfaces": 4, "threefolds": 2}


@dataclass(frozen=True)
class StratumNode:
    label: str
    level: str
    dim: int
    defining_data: str
    meets_arrangement: bool | None = None   # only set for the II strata

    @property
    def root_type(self) -> str | None:
        if self.label.startswith("II("):
            return self.label[3:-1]
        return None


@dataclass(frozen=True)
class IncidenceScheme:
    nodes: tuple            # StratumNode, fixed order
    edges: tuple            # (level a, level b, orientation); resolved: a < b

    def node(self, label: str) -> StratumNode:
        for n in self.nodes:
            if n.label == label:
                return n
        raise KeyError(label)

    def levels(self) -> dict:
        out = {}
        for n in self.nodes:
            out.setdefault(n.level, []).append(n.label)
        return out

    def minimal_levels(self) -> set:
        """Minimal elements under the resolved (printed '<') chains."""
        above = {b for a, b, o in self.edges if o == "as-printed"}
        chained = {x for a, b, o in self.edges if o == "as-printed" for x in (a, b)}
        return {lv for lv in chained if lv not in above}

    def maximal_strata(self) -> list:
        """The strata at the bottom and right of the printed array."""
        maximal_levels = ("I1", "II1", "II2", "II3", "III2")
        return [n for n in self.nodes if n.level in maximal_levels]


def build_strata() -> IncidenceScheme:
    nodes = []
    for level, members, dim, data in _LEVELS:
        for label in members:
            rt = label[3:-1] if label.startswith("II(") else None
            nodes.append(StratumNode(
                label=label, level=level, dim=dim, defining_data=data,
                meets_arrangement=_MEETS_ARRANGEMENT.get(rt)))
    return IncidenceScheme(tuple(nodes), _EDGES)


def dim_formula_check() -> dict:
    """dim(II(R)) = 1 + (18 - rk R) against the printed dimensions."""
    scheme = build_strata()
    report = {}
    for node in scheme.nodes:
        rt = node.root_type
        if rt is None:
            continue
        expected = 1 + (18 - _ROOT_RANK[rt])
        report[node.label] = {
            "rank": _ROOT_RANK[rt],
            "formula": expected,
            "printed": node.dim,
            "match": expected == node.dim,
        }
    if not all(v["match"] for v in report.values()):
        raise LatticeError("dimension formula disagrees with the printed list")
    return report


def to_json(scheme: IncidenceScheme) -> dict:
    return {
        "nodes": [
            {
                "label": n.label,
                "level": n.level,
                "dim": n.dim,
                "defining_data": n.defining_data,
                "meets_arrangement": n.meets_arrangement,
            }
            for n in scheme.nodes
        ],
        "edges": [
            {"a": a, "b": b, "orientation": o} for a, b, o in scheme.edges
        ],
        "minimal_levels": sorted(scheme.minimal_levels()),
        "maximal_strata": [n.label for n in scheme.maximal_strata()],
        "text_counts": dict(TEXT_COUNTS),
        "edge_semantics": {
            "as-printed": "a < b in the printed array (closure order)",
            "unresolved": "printed vertical adjacency; closure order vs "
                          "lattice-embedding order left undecided",
        },
    }


def emit(scheme: IncidenceScheme, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_json(scheme), indent=2, sort_keys=True) + "\n"
    if fmt == "dot":
        lines = ["digraph strata {", "  rankdir=LR;"]
        for n in scheme.nodes:
            lines.append(f'  "{n.label}" [label="{n.label}\\ndim {n.dim}"];')
        by_level = scheme.levels()
        for a, b, o in scheme.edges:
            for la in by_level[a]:
                for lb in by_level[b]:
                    if o == "as-printed":
                        lines.append(f'  "{la}" -> "{lb}";')
                    else:
                        lines.append(f'  "{la}" -> "{lb}" [dir=none, style=dashed];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
