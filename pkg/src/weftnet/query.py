"""Query operations over networks: pairwise checks, alters, traversal, summaries.

One-mode and two-mode layers answer the same pairwise questions through the
same signatures; for two-mode layers the answers come from membership
indexes (pseudo-projection), never from a materialized projection.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ProjectionOverflowError
from .model import (
    AttrType,
    EdgeTraversal,
    LayerOneMode,
    LayerTwoMode,
    Network,
    Nodeset,
    U64_MAX,
)


def _select_layers(net: Network, layers: Sequence[str] | None) -> list:
    """Resolve a list of layer names (None = all, in insertion order)."""
    if layers is None:
        return list(net.layers.values())
    out = []
    for name in layers:
        out.append(net.layer(name))
    return out


def check_edge_exists(net: Network, layer: str, a: int, b: int,
                      traversal: EdgeTraversal = EdgeTraversal.BOTH) -> bool:
    net._require_node(a)
    net._require_node(b)
    return net.layer(layer).has_edge(a, b, traversal)


def get_edge_value(net: Network, layer: str, a: int, b: int,
                   traversal: EdgeTraversal = EdgeTraversal.BOTH) -> float:
    net._require_node(a)
    net._require_node(b)
    return net.layer(layer).edge_value(a, b, traversal)


def get_node_alters(net: Network, node: int, layers: Sequence[str] | None = None,
                    traversal: EdgeTraversal = EdgeTraversal.BOTH) -> set[int]:
    """Union of the node's alters over the selected layers (None = all)."""
    net._require_node(node)
    selected = _select_layers(net, layers)
    result: set[int] = set()
    for layer in selected:
        result |= layer.alters(node, traversal)
    return result


def degree(net: Network, layer: str, node: int,
           traversal: EdgeTraversal = EdgeTraversal.BOTH,
           projected: bool = True) -> int:
    """Alter count on one-mode layers; on two-mode layers the distinct
    co-member count, or the membership count when projected is False."""
    net._require_node(node)
    target = net.layer(layer)
    if isinstance(target, LayerTwoMode):
        return target.degree(node, traversal, projected)
    return target.degree(node, traversal)


def density(net: Network, layer: str) -> float:
    """Edges over possible edges; memberships over n*h on two-mode layers."""
    target = net.layer(layer)
    n = len(net.nodeset)
    if isinstance(target, LayerTwoMode):
        possible = n * len(target.hyperedges)
        return target.membership_total / possible if possible else 0.0
    if target.spec.directed:
        possible = n * n if target.spec.allow_self_ties else n * (n - 1)
    else:
        if target.spec.allow_self_ties:
            possible = n * (n + 1) // 2
        else:
            possible = n * (n - 1) // 2
    return target.edge_count / possible if possible else 0.0


def projected_count_from_sizes(sizes: Iterable[int]) -> int:
    """Pairwise edge total for hyperedges of the given member counts.

    Each hyperedge of k members expands to k(k-1)/2 pairs; pairs shared by
    several hyperedges count once per hyperedge. Raises when the total
    exceeds the unsigned 64-bit range.
    """
    total = 0
    for k in sizes:
        total += k * (k - 1) // 2
    if total > U64_MAX:
        raise ProjectionOverflowError(
            f"projected edge count {total} exceeds unsigned 64-bit range"
        )
    return total


def projected_edge_count(net: Network, layer: str) -> int:
    """Size the materialized projection of a two-mode layer would have."""
    target = net.two_mode(layer)
    return projected_count_from_sizes(len(m) for m in target.hyperedges.values())


@dataclass
class PathResult:
    length: int
    nodes: list[int]


def _frontier_alters(layer, node: int, seen_hyperedges: set | None) -> Iterable[int]:
    """Alters of one node in one layer for BFS purposes.

    Directed layers are followed out-direction only. Two-mode layers mark
    hyperedges as visited so no member list is scanned twice across the
    whole search.
    """
    if isinstance(layer, LayerOneMode):
        return layer.out_edges.get(node, ())
    result: set[int] = set()
    for name in layer.memberships.get(node, ()):
        if name in seen_hyperedges:
            continue
        seen_hyperedges.add(name)
        result |= layer.hyperedges[name]
    return result


def shortest_path(net: Network, source: int, target: int,
                  layers: Sequence[str] | None = None) -> PathResult | None:
    """Unweighted breadth-first shortest path over the multilayer union.

    Every direct edge and every shared-hyperedge co-membership counts as one
    hop. Alters are expanded in ascending node-id order so the returned path
    is deterministic. Returns None when the target is unreachable.
    """
    net._require_node(source)
    net._require_node(target)
    selected = _select_layers(net, layers)
    if source == target:
        return PathResult(0, [source])
    seen_hyperedges: list[set] = [set() for _ in selected]
    parent: dict[int, int] = {source: source}
    frontier = deque([source])
    while frontier:
        node = frontier.popleft()
        candidates: set[int] = set()
        for layer, seen in zip(selected, seen_hyperedges):
            candidates.update(_frontier_alters(layer, node, seen))
        for alter in sorted(candidates):
            if alter in parent:
                continue
            parent[alter] = node
            if alter == target:
                path = [alter]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                path.reverse()
                return PathResult(len(path) - 1, path)
            frontier.append(alter)
    return None


class _UnionFind:
    def __init__(self):
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def add(self, x: int) -> None:
        if x not in self.parent:
            self.parent[x] = x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def connected_components(net: Network, layers: Sequence[str] | None = None) -> dict[int, int]:
    """Weak components over the union of the selected layers.

    Directed edges count as bidirectional; two-mode layers connect all
    co-members of each hyperedge. Every node of the nodeset gets a label,
    the smallest node id of its component.
    """
    selected = _select_layers(net, layers)
    uf = _UnionFind()
    for node in net.nodeset.node_ids():
        uf.add(node)
    for layer in selected:
        if isinstance(layer, LayerOneMode):
            for a, cell in layer.out_edges.items():
                for b in cell:
                    uf.union(a, b)
        else:
            for members in layer.hyperedges.values():
                it = iter(members)
                first = next(it, None)
                if first is None:
                    continue
                for other in it:
                    uf.union(first, other)
    smallest: dict[int, int] = {}
    for node in uf.parent:
        root = uf.find(node)
        cur = smallest.get(root)
        if cur is None or node < cur:
            smallest[root] = node
    return {node: smallest[uf.find(node)] for node in uf.parent}


def summarize_attribute(ns: Nodeset, name: str) -> dict:
    """Summary over the nodes that carry the attribute (sparse semantics).

    Int/Float: count, min, max, mean. Bool: count, true_count. Char: count
    plus a frequency table. An attribute carried by no node (or never
    written) reports count 0.
    """
    atype = ns.attribute_type(name)
    values = []
    for attrs in ns.attributed_nodes.values():
        v = attrs.get(name)
        if v is not None:
            values.append(v)
    summary: dict = {"count": len(values)}
    if atype is not None:
        summary["type"] = atype.value
    if not values:
        return summary
    if atype in (AttrType.INT, AttrType.FLOAT):
        summary["min"] = min(values)
        summary["max"] = max(values)
        summary["mean"] = sum(values) / len(values)
    elif atype is AttrType.BOOL:
        summary["true_count"] = sum(1 for v in values if v)
    else:
        freq: dict[str, int] = {}
        for v in values:
            freq[v] = freq.get(v, 0) + 1
        summary["frequencies"] = dict(sorted(freq.items()))
    return summary
