"""Core data structures: nodesets with sparse attributes, networks, and layers.

A Nodeset keeps nodes without attributes in a plain set and nodes with
attributes in a dictionary, migrating between the two automatically so that
no storage is spent on absent attributes.

Layers come in two kinds. One-mode layers hold node-to-node edges as per-node
adjacency (sets when binary, value maps when valued). Two-mode layers hold
named hyperedges (sets of member node ids) together with a reverse index from
node to the names of the hyperedges it belongs to; pairwise queries run
against these indexes directly instead of materializing the k(k-1)/2
projection.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Iterator

from .errors import (
    DuplicateHyperedgeError,
    DuplicateLayerError,
    DuplicateNodeError,
    InboundUnavailableError,
    SelfTieForbiddenError,
    TypeMismatchError,
    UnknownHyperedgeError,
    UnknownLayerError,
    UnknownNodeError,
    WrongLayerModeError,
)

U32_MAX = 0xFFFFFFFF
U64_MAX = 0xFFFFFFFFFFFFFFFF
I32_MIN = -(2**31)
I32_MAX = 2**31 - 1


def check_node_id(value) -> int:
    """Validate an unsigned 32-bit node id, returning it unchanged."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"node id must be an integer, got {value!r}")
    if not 0 <= value <= U32_MAX:
        raise ValueError(f"node id {value} outside unsigned 32-bit range")
    return value


def quantize_f32(x: float) -> float:
    """Round a float to the nearest 32-bit float value."""
    try:
        return struct.unpack("<f", struct.pack("<f", x))[0]
    except OverflowError:
        raise ValueError(f"value {x!r} does not fit a 32-bit float") from None


def check_edge_weight(value) -> float:
    """Validate and quantize an edge value (finite 32-bit float)."""
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"edge value must be a number, got {value!r}")
    v = float(value)
    if v != v or v in (float("inf"), float("-inf")):
        raise ValueError("edge value must be finite")
    return quantize_f32(v)


class AttrType(Enum):
    """The four compact attribute types."""

    INT = "int"
    FLOAT = "float"
    BOOL = "bool"
    CHAR = "char"

    @classmethod
    def from_label(cls, label: str) -> "AttrType":
        for t in cls:
            if t.value == label:
                return t
        raise ValueError(f"unknown attribute type {label!r}")


class _Absent:
    """Singleton marker for an attribute a node does not carry."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ABSENT"

    def __bool__(self):
        return False


ABSENT = _Absent()


def _classify_attr(value, declared: AttrType | None):
    """Map a Python value to (AttrType, stored value), honouring the schema.

    bool must be tested before int (bool is an int subclass). An int written
    into an established float attribute is coerced; everything else must
    match the declared type exactly.
    """
    if isinstance(value, bool):
        return AttrType.BOOL, value
    if isinstance(value, int):
        if declared is AttrType.FLOAT:
            return AttrType.FLOAT, quantize_f32(float(value))
        if not I32_MIN <= value <= I32_MAX:
            raise TypeMismatchError(f"{value} outside signed 32-bit range")
        return AttrType.INT, value
    if isinstance(value, float):
        if value != value or value in (float("inf"), float("-inf")):
            raise TypeMismatchError("float attribute must be finite")
        return AttrType.FLOAT, quantize_f32(value)
    if isinstance(value, str):
        if len(value) != 1 or 0xD800 <= ord(value) <= 0xDFFF:
            raise TypeMismatchError(
                f"char attribute must be one Unicode scalar, got {value!r}"
            )
        return AttrType.CHAR, value
    raise TypeMismatchError(f"unsupported attribute value {value!r}")


class Nodeset:
    """Set of node ids with sparse typed attributes.

    plain_nodes holds ids with no attributes at all; attributed_nodes maps
    id -> {attribute name -> value} for ids carrying at least one. The two
    never overlap. schema fixes each attribute name to the type of its first
    write.
    """

    def __init__(self):
        self.plain_nodes: set[int] = set()
        self.attributed_nodes: dict[int, dict[str, object]] = {}
        self.schema: dict[str, AttrType] = {}

    def __len__(self) -> int:
        return len(self.plain_nodes) + len(self.attributed_nodes)

    def __contains__(self, node: int) -> bool:
        return node in self.plain_nodes or node in self.attributed_nodes

    def node_ids(self) -> Iterator[int]:
        yield from self.plain_nodes
        yield from self.attributed_nodes

    def sorted_ids(self) -> list[int]:
        return sorted(self.node_ids())

    def add_node(self, node: int) -> None:
        check_node_id(node)
        if node in self:
            raise DuplicateNodeError(f"node {node} already present")
        self.plain_nodes.add(node)

    def _require(self, node: int) -> None:
        if node not in self:
            raise UnknownNodeError(f"node {node} not in nodeset")

    def set_attribute(self, node: int, name: str, value) -> None:
        """Set an attribute, migrating the node into dictionary storage.

        The value's type must match the type established by the first write
        of this attribute name anywhere in the nodeset.
        """
        self._require(node)
        declared = self.schema.get(name)
        vtype, stored = _classify_attr(value, declared)
        if declared is not None and declared is not vtype:
            raise TypeMismatchError(
                f"attribute {name!r} is {declared.value}, got {vtype.value}"
            )
        if declared is None:
            self.schema[name] = vtype
        attrs = self.attributed_nodes.get(node)
        if attrs is None:
            self.plain_nodes.discard(node)
            attrs = self.attributed_nodes[node] = {}
        attrs[name] = stored

    def get_attribute(self, node: int, name: str):
        """Return the stored value, or ABSENT if the node lacks it."""
        self._require(node)
        attrs = self.attributed_nodes.get(node)
        if attrs is None or name not in attrs:
            return ABSENT
        return attrs[name]

    def remove_attribute(self, node: int, name: str) -> None:
        """Drop an attribute; the node migrates back to the plain set when
        its last attribute goes. Removing an absent attribute is a no-op."""
        self._require(node)
        attrs = self.attributed_nodes.get(node)
        if attrs is None or name not in attrs:
            return
        del attrs[name]
        if not attrs:
            del self.attributed_nodes[node]
            self.plain_nodes.add(node)

    def attribute_type(self, name: str) -> AttrType | None:
        return self.schema.get(name)

    def attributes_of(self, node: int) -> dict[str, object]:
        return self.attributed_nodes.get(node, {})


def create_nodeset(count: int | None = None, ids: Iterable[int] | None = None) -> Nodeset:
    """Build a nodeset from a contiguous count (ids 0..count-1) or explicit ids."""
    if (count is None) == (ids is None):
        raise ValueError("provide exactly one of count= or ids=")
    ns = Nodeset()
    if count is not None:
        if count < 0 or count > U32_MAX + 1:
            raise ValueError(f"node count {count} out of range")
        ns.plain_nodes = set(range(count))
        return ns
    for node in ids:
        check_node_id(node)
        if node in ns.plain_nodes:
            raise DuplicateNodeError(f"duplicate node id {node}")
        ns.plain_nodes.add(node)
    return ns


class LayerMode(IntEnum):
    ONE = 1
    TWO = 2


class EdgeTraversal(Enum):
    """Direction filter for edge and alter queries on directed layers."""

    BOTH = "both"
    OUT = "out"
    IN = "in"

    @classmethod
    def from_label(cls, label: str) -> "EdgeTraversal":
        for t in cls:
            if t.value == label:
                return t
        raise ValueError(f"unknown traversal {label!r}")


@dataclass
class LayerSpec:
    """Configuration of a layer; flags beyond mode apply to one-mode only."""

    name: str
    mode: LayerMode
    directed: bool = False
    valued: bool = False
    allow_self_ties: bool = False
    store_inbound: bool = True

    def __post_init__(self):
        self.mode = LayerMode(self.mode)
        if self.mode is LayerMode.TWO:
            # two-mode layers have no meaningful flags; normalize so saved
            # headers are canonical
            self.directed = False
            self.valued = False
            self.allow_self_ties = False
            self.store_inbound = False
        elif not self.directed:
            self.store_inbound = False


class LayerOneMode:
    """Node-to-node edges stored as per-node adjacency.

    Binary layers keep sets of neighbour ids; valued layers keep id -> value
    maps. Symmetric layers store every edge under both endpoints. Directed
    layers keep outbound adjacency always and inbound adjacency only when
    store_inbound is set (in-direction alters are an error without it, but
    pairwise in-direction checks stay O(1) through the other node's
    outbound entry).
    """

    def __init__(self, spec: LayerSpec):
        if spec.mode is not LayerMode.ONE:
            raise WrongLayerModeError("LayerOneMode requires a one-mode spec")
        self.spec = spec
        self.out_edges: dict[int, set[int] | dict[int, float]] = {}
        self.in_edges: dict[int, set[int] | dict[int, float]] | None = (
            {} if spec.directed and spec.store_inbound else None
        )
        self.edge_count = 0

    def _fresh_cell(self):
        return {} if self.spec.valued else set()

    def _insert(self, table: dict, a: int, b: int, value: float) -> bool:
        cell = table.get(a)
        if cell is None:
            cell = table[a] = self._fresh_cell()
        if self.spec.valued:
            new = b not in cell
            cell[b] = value
        else:
            new = b not in cell
            cell.add(b)
        return new

    def _delete(self, table: dict, a: int, b: int) -> bool:
        cell = table.get(a)
        if cell is None or b not in cell:
            return False
        if self.spec.valued:
            del cell[b]
        else:
            cell.remove(b)
        if not cell:
            del table[a]
        return True

    def add_edge(self, a: int, b: int, value: float | None = None) -> bool:
        """Add or overwrite an edge; returns True when the edge is new.

        Binary layers ignore the value; valued layers default it to 1.0.
        """
        if a == b and not self.spec.allow_self_ties:
            raise SelfTieForbiddenError(f"self-tie {a} not allowed on {self.spec.name!r}")
        v = 1.0 if value is None else check_edge_weight(value)
        new = self._insert(self.out_edges, a, b, v)
        if not self.spec.directed and a != b:
            self._insert(self.out_edges, b, a, v)
        if self.in_edges is not None:
            self._insert(self.in_edges, b, a, v)
        if new:
            self.edge_count += 1
        return new

    def remove_edge(self, a: int, b: int) -> bool:
        """Remove an edge if present; returns True when something was removed."""
        removed = self._delete(self.out_edges, a, b)
        if not self.spec.directed and a != b:
            self._delete(self.out_edges, b, a)
        if self.in_edges is not None:
            self._delete(self.in_edges, b, a)
        if removed:
            self.edge_count -= 1
        return removed

    def _out_contains(self, a: int, b: int) -> bool:
        cell = self.out_edges.get(a)
        return cell is not None and b in cell

    def has_edge(self, a: int, b: int, traversal: EdgeTraversal = EdgeTraversal.BOTH) -> bool:
        if not self.spec.directed:
            return self._out_contains(a, b)
        if traversal is EdgeTraversal.OUT:
            return self._out_contains(a, b)
        if traversal is EdgeTraversal.IN:
            return self._out_contains(b, a)
        return self._out_contains(a, b) or self._out_contains(b, a)

    def edge_value(self, a: int, b: int, traversal: EdgeTraversal = EdgeTraversal.BOTH) -> float:
        """Stored value (1.0 on binary layers), 0.0 when the edge is absent.

        On directed layers BOTH prefers the out-direction value when both
        directions exist.
        """
        if not self.spec.valued:
            return 1.0 if self.has_edge(a, b, traversal) else 0.0
        if not self.spec.directed:
            cell = self.out_edges.get(a)
            return cell.get(b, 0.0) if cell else 0.0
        if traversal in (EdgeTraversal.OUT, EdgeTraversal.BOTH):
            cell = self.out_edges.get(a)
            if cell and b in cell:
                return cell[b]
            if traversal is EdgeTraversal.OUT:
                return 0.0
        cell = self.out_edges.get(b)
        return cell.get(a, 0.0) if cell else 0.0

    def alters(self, node: int, traversal: EdgeTraversal = EdgeTraversal.BOTH) -> set[int]:
        if not self.spec.directed or traversal is EdgeTraversal.OUT:
            cell = self.out_edges.get(node)
            return set(cell) if cell else set()
        if self.in_edges is None:
            raise InboundUnavailableError(
                f"layer {self.spec.name!r} does not store inbound edges"
            )
        inc = self.in_edges.get(node)
        if traversal is EdgeTraversal.IN:
            return set(inc) if inc else set()
        result = set(self.out_edges.get(node, ()))
        if inc:
            result.update(inc)
        return result

    def degree(self, node: int, traversal: EdgeTraversal = EdgeTraversal.BOTH) -> int:
        if not self.spec.directed or traversal is EdgeTraversal.OUT:
            return len(self.out_edges.get(node, ()))
        if traversal is EdgeTraversal.IN:
            if self.in_edges is None:
                raise InboundUnavailableError(
                    f"layer {self.spec.name!r} does not store inbound edges"
                )
            return len(self.in_edges.get(node, ()))
        return len(self.alters(node, EdgeTraversal.BOTH))

    def iter_edges(self) -> Iterator[tuple]:
        """Yield each edge once: (a, b) or (a, b, value).

        Symmetric layers yield the smaller endpoint first; directed layers
        yield stored direction. Order is whatever the dicts hold; callers
        needing canonical order sort.
        """
        if self.spec.valued:
            for a, cell in self.out_edges.items():
                for b, v in cell.items():
                    if self.spec.directed or a <= b:
                        yield a, b, v
        else:
            for a, cell in self.out_edges.items():
                for b in cell:
                    if self.spec.directed or a <= b:
                        yield a, b


class LayerTwoMode:
    """Named hyperedges plus the reverse node -> membership index.

    The two maps are kept consistent on every mutation; nodes with no
    memberships have no entry at all. probes counts set-membership tests
    done by pairwise queries, so tests can verify the
    min(|memberships(a)|, |memberships(b)|) cost bound.
    """

    def __init__(self, spec: LayerSpec):
        if spec.mode is not LayerMode.TWO:
            raise WrongLayerModeError("LayerTwoMode requires a two-mode spec")
        self.spec = spec
        self.hyperedges: dict[str, set[int]] = {}
        self.memberships: dict[int, set[str]] = {}
        self.membership_total = 0
        self.probes = 0

    def add_hyperedge(self, name: str, members: Iterable[int] = ()) -> None:
        if name in self.hyperedges:
            raise DuplicateHyperedgeError(f"hyperedge {name!r} already exists")
        self.hyperedges[name] = set()
        for node in members:
            self.add_member(name, node)

    def _require_hyperedge(self, name: str) -> set[int]:
        he = self.hyperedges.get(name)
        if he is None:
            raise UnknownHyperedgeError(f"no hyperedge {name!r}")
        return he

    def add_member(self, name: str, node: int) -> None:
        he = self._require_hyperedge(name)
        if node in he:
            return
        he.add(node)
        self.memberships.setdefault(node, set()).add(name)
        self.membership_total += 1

    def remove_member(self, name: str, node: int) -> None:
        he = self._require_hyperedge(name)
        if node not in he:
            return
        he.remove(node)
        mem = self.memberships[node]
        mem.remove(name)
        if not mem:
            del self.memberships[node]
        self.membership_total -= 1

    def membership_count(self, node: int) -> int:
        return len(self.memberships.get(node, ()))

    def has_edge(self, a: int, b: int, traversal: EdgeTraversal = EdgeTraversal.BOTH) -> bool:
        """True when a and b share at least one hyperedge.

        Iterates the smaller membership set and stops at the first hit, so
        the probe count never exceeds min of the two set sizes.
        """
        if a == b:
            return False
        ma = self.memberships.get(a)
        mb = self.memberships.get(b)
        if not ma or not mb:
            return False
        if len(mb) < len(ma):
            ma, mb = mb, ma
        for name in ma:
            self.probes += 1
            if name in mb:
                return True
        return False

    def edge_value(self, a: int, b: int, traversal: EdgeTraversal = EdgeTraversal.BOTH) -> float:
        """Number of shared hyperedges (the pseudo-projected edge value)."""
        if a == b:
            return 0.0
        ma = self.memberships.get(a)
        mb = self.memberships.get(b)
        if not ma or not mb:
            return 0.0
        if len(mb) < len(ma):
            ma, mb = mb, ma
        shared = 0
        for name in ma:
            self.probes += 1
            if name in mb:
                shared += 1
        return float(shared)

    def alters(self, node: int, traversal: EdgeTraversal = EdgeTraversal.BOTH) -> set[int]:
        """All co-members across the node's hyperedges, excluding the node."""
        result: set[int] = set()
        for name in self.memberships.get(node, ()):
            result |= self.hyperedges[name]
        result.discard(node)
        return result

    def degree(self, node: int, traversal: EdgeTraversal = EdgeTraversal.BOTH,
               projected: bool = True) -> int:
        if projected:
            return len(self.alters(node))
        return self.membership_count(node)

    def projected_pair_count(self) -> int:
        """Sum of k(k-1)/2 over hyperedges: size of the materialized projection."""
        return sum(len(m) * (len(m) - 1) // 2 for m in self.hyperedges.values())


Layer = LayerOneMode | LayerTwoMode


class Network:
    """A nodeset reference plus an ordered map of named layers."""

    def __init__(self, nodeset: Nodeset):
        self.nodeset = nodeset
        self.layers: dict[str, Layer] = {}

    def add_layer(self, name: str, mode: int | LayerMode, directed: bool = False,
                  valued: bool = False, allow_self_ties: bool = False,
                  store_inbound: bool = True) -> Layer:
        if name in self.layers:
            raise DuplicateLayerError(f"layer {name!r} already exists")
        spec = LayerSpec(name, LayerMode(mode), directed, valued,
                         allow_self_ties, store_inbound)
        layer: Layer
        if spec.mode is LayerMode.ONE:
            layer = LayerOneMode(spec)
        else:
            layer = LayerTwoMode(spec)
        self.layers[name] = layer
        return layer

    def delete_layer(self, name: str) -> None:
        if name not in self.layers:
            raise UnknownLayerError(f"no layer {name!r}")
        del self.layers[name]

    def layer(self, name: str) -> Layer:
        layer = self.layers.get(name)
        if layer is None:
            raise UnknownLayerError(f"no layer {name!r}")
        return layer

    def one_mode(self, name: str) -> LayerOneMode:
        layer = self.layer(name)
        if not isinstance(layer, LayerOneMode):
            raise WrongLayerModeError(f"layer {name!r} is not one-mode")
        return layer

    def two_mode(self, name: str) -> LayerTwoMode:
        layer = self.layer(name)
        if not isinstance(layer, LayerTwoMode):
            raise WrongLayerModeError(f"layer {name!r} is not two-mode")
        return layer

    def _require_node(self, node: int) -> None:
        if node not in self.nodeset:
            raise UnknownNodeError(f"node {node} not in nodeset")

    def add_edge(self, layer: str, a: int, b: int, value: float | None = None) -> None:
        target = self.one_mode(layer)
        self._require_node(a)
        self._require_node(b)
        target.add_edge(a, b, value)

    def remove_edge(self, layer: str, a: int, b: int) -> None:
        self.one_mode(layer).remove_edge(a, b)

    def add_hyperedge(self, layer: str, name: str, members: Iterable[int] = ()) -> None:
        target = self.two_mode(layer)
        members = list(members)
        for node in members:
            self._require_node(node)
        target.add_hyperedge(name, members)

    def add_to_hyperedge(self, layer: str, name: str, node: int) -> None:
        target = self.two_mode(layer)
        self._require_node(node)
        target.add_member(name, node)

    def remove_from_hyperedge(self, layer: str, name: str, node: int) -> None:
        target = self.two_mode(layer)
        self._require_node(node)
        target.remove_member(name, node)
