"""Serialization: .tsv, .tsv.gz, .bin, .bin.gz for nodesets and networks.

Output is canonical: node ids ascending, attribute columns and hyperedges
sorted by name, layers in insertion order, gzip members written with a
pinned compression level and zeroed metadata. Saving the same object twice
therefore produces byte-identical files.

Binary layout (little-endian throughout): magic "WFT1", u16 format version,
u8 object kind (0 nodeset, 1 network), then counted sections. Strings are
u16-length-prefixed UTF-8. Nodeset: sorted plain ids (u32), attribute schema
(name + u8 type tag), attributed nodes (u32 id, u16 attr count, pairs of u16
schema index + 4-byte value). Network: per layer a name, u8 mode and flags,
then u64-counted edge rows (u32 src, u32 dst[, f32 value]) or, for two-mode
layers, the sorted hyperedge names (u16 count) and u64-counted membership
rows (u16 name index, u32 node id).
"""

from __future__ import annotations

import gzip
import io as _io
import struct
from contextlib import contextmanager
from enum import Enum

import numpy as np

from .errors import (
    DuplicateNodeError,
    FormatError,
    NonEmptyLayerError,
    TypeMismatchError,
    UnknownNodeError,
    WrongLayerModeError,
)
from .model import (
    AttrType,
    LayerMode,
    LayerOneMode,
    LayerTwoMode,
    Network,
    Nodeset,
    check_node_id,
    quantize_f32,
)

MAGIC = b"WFT1"
VERSION = 1
KIND_NODESET = 0
KIND_NETWORK = 1
GZIP_LEVEL = 6

_TYPE_TAGS = {AttrType.INT: 0, AttrType.FLOAT: 1, AttrType.BOOL: 2, AttrType.CHAR: 3}
_TAG_TYPES = {v: k for k, v in _TYPE_TAGS.items()}

_MEMBER_ROW = np.dtype([("h", "<u2"), ("n", "<u4")])


class FileFormat(Enum):
    TSV = "tsv"
    TSV_GZ = "tsv.gz"
    BIN = "bin"
    BIN_GZ = "bin.gz"

    @property
    def compressed(self) -> bool:
        return self in (FileFormat.TSV_GZ, FileFormat.BIN_GZ)

    @property
    def textual(self) -> bool:
        return self in (FileFormat.TSV, FileFormat.TSV_GZ)


def detect_format(path: str) -> FileFormat:
    lower = str(path).lower()
    for fmt in (FileFormat.TSV_GZ, FileFormat.BIN_GZ, FileFormat.TSV, FileFormat.BIN):
        if lower.endswith("." + fmt.value):
            return fmt
    raise FormatError(f"cannot infer file format from {path!r} "
                      "(expected .tsv, .tsv.gz, .bin or .bin.gz)")


def format_f32(x: float) -> str:
    """Shortest decimal string that parses back to the same 32-bit float."""
    packed = struct.pack("<f", x)
    for precision in range(1, 10):
        s = "%.*g" % (precision, x)
        try:
            if struct.pack("<f", float(s)) == packed:
                return s
        except OverflowError:
            # near the f32 maximum a rounded candidate can overflow
            continue
    return repr(x)


def parse_f32(s: str) -> float:
    return quantize_f32(float(s))


_ESCAPES = {"\\": "\\\\", "\t": "\\t", "\n": "\\n", "\r": "\\r", "#": "\\#"}
_UNESCAPES = {"\\": "\\", "t": "\t", "n": "\n", "r": "\r", "#": "#"}


def escape_field(s: str) -> str:
    return "".join(_ESCAPES.get(ch, ch) for ch in s)


def unescape_field(s: str) -> str:
    if "\\" not in s:
        return s
    out = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch != "\\":
            out.append(ch)
            i += 1
            continue
        if i + 1 >= len(s) or s[i + 1] not in _UNESCAPES:
            raise FormatError(f"bad escape in field {s!r}")
        out.append(_UNESCAPES[s[i + 1]])
        i += 2
    return "".join(out)


@contextmanager
def _sink(path: str, fmt: FileFormat):
    with open(path, "wb") as raw:
        if fmt.compressed:
            # fixed level and zeroed mtime keep the output reproducible
            with gzip.GzipFile(filename="", mode="wb", fileobj=raw,
                               compresslevel=GZIP_LEVEL, mtime=0) as gz:
                yield gz
        else:
            yield raw


def _read_bytes(path: str, fmt: FileFormat) -> bytes:
    with open(path, "rb") as raw:
        if fmt.compressed:
            try:
                with gzip.GzipFile(fileobj=raw) as gz:
                    return gz.read()
            except (OSError, EOFError) as exc:
                raise FormatError(f"bad gzip stream in {path!r}: {exc}") from None
        return raw.read()


def _read_lines(path: str, fmt: FileFormat) -> list[str]:
    data = _read_bytes(path, fmt)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path!r} is not UTF-8 text: {exc}") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


# ---------------------------------------------------------------------------
# nodeset TSV

def _bool_cell(v: bool) -> str:
    return "true" if v else "false"


_CELL_WRITERS = {
    AttrType.INT: str,
    AttrType.FLOAT: format_f32,
    AttrType.BOOL: _bool_cell,
    AttrType.CHAR: escape_field,
}


def _write_nodeset_tsv(ns: Nodeset, out) -> None:
    names = sorted(ns.schema)
    header = ["nodeid"] + [f"{escape_field(n)}:{ns.schema[n].value}" for n in names]
    out.write("\t".join(header) + "\n")
    writers = [_CELL_WRITERS[ns.schema[n]] for n in names]
    for node in ns.sorted_ids():
        attrs = ns.attributes_of(node)
        cells = [str(node)]
        for name, writer in zip(names, writers):
            v = attrs.get(name)
            cells.append("" if v is None else writer(v))
        out.write("\t".join(cells) + "\n")


def _parse_cell(cell: str, atype: AttrType, lineno: int):
    try:
        if atype is AttrType.INT:
            return int(cell)
        if atype is AttrType.FLOAT:
            return parse_f32(cell)
        if atype is AttrType.BOOL:
            if cell == "true":
                return True
            if cell == "false":
                return False
            raise ValueError(cell)
        return unescape_field(cell)
    except (ValueError, FormatError):
        raise FormatError(f"bad {atype.value} value {cell!r}", lineno) from None


def _load_nodeset_tsv(lines: list[str]) -> Nodeset:
    if not lines:
        raise FormatError("empty nodeset file (missing header)")
    header = lines[0].split("\t")
    if header[0] != "nodeid":
        raise FormatError("first header column must be 'nodeid'", 1)
    names: list[str] = []
    types: list[AttrType] = []
    for col in header[1:]:
        name, sep, label = col.rpartition(":")
        if not sep:
            raise FormatError(f"attribute column {col!r} lacks a :type suffix", 1)
        try:
            atype = AttrType.from_label(label)
        except ValueError:
            raise FormatError(f"unknown attribute type {label!r}", 1) from None
        name = unescape_field(name)
        if name in names:
            raise FormatError(f"duplicate attribute column {name!r}", 1)
        names.append(name)
        types.append(atype)
    ns = Nodeset()
    ns.schema = dict(zip(names, types))
    width = len(header)
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split("\t")
        if len(cells) != width:
            raise FormatError(f"expected {width} columns, got {len(cells)}", lineno)
        try:
            node = check_node_id(int(cells[0]))
        except ValueError:
            raise FormatError(f"bad node id {cells[0]!r}", lineno) from None
        if node in ns:
            raise DuplicateNodeError(f"line {lineno}: duplicate node id {node}")
        ns.plain_nodes.add(node)
        for name, atype, cell in zip(names, types, cells[1:]):
            if cell == "":
                continue
            try:
                ns.set_attribute(node, name, _parse_cell(cell, atype, lineno))
            except TypeMismatchError as exc:
                raise FormatError(str(exc), lineno) from None
    return ns


# ---------------------------------------------------------------------------
# network TSV

def _flag(v: bool) -> str:
    return "t" if v else "f"


def _layer_header(layer) -> str:
    spec = layer.spec
    parts = ["#layer", escape_field(spec.name), f"mode={spec.mode.value}"]
    if spec.mode is LayerMode.ONE:
        parts.append(f"directed={_flag(spec.directed)}")
        parts.append(f"valued={_flag(spec.valued)}")
        parts.append(f"selfties={_flag(spec.allow_self_ties)}")
        if spec.directed:
            parts.append(f"inbound={_flag(spec.store_inbound)}")
    return "\t".join(parts)


def _write_one_mode_rows(layer: LayerOneMode, out) -> None:
    valued = layer.spec.valued
    for edge in sorted(layer.iter_edges()):
        if valued:
            out.write(f"{edge[0]}\t{edge[1]}\t{format_f32(edge[2])}\n")
        else:
            out.write(f"{edge[0]}\t{edge[1]}\n")


def _write_two_mode_rows(layer: LayerTwoMode, out) -> None:
    for name in sorted(layer.hyperedges):
        members = layer.hyperedges[name]
        if not members:
            out.write(f"#hyperedge\t{escape_field(name)}\n")
            continue
        label = escape_field(name)
        for node in sorted(members):
            out.write(f"{label}\t{node}\n")


def _write_network_tsv(net: Network, out) -> None:
    for layer in net.layers.values():
        out.write(_layer_header(layer) + "\n")
        if isinstance(layer, LayerOneMode):
            _write_one_mode_rows(layer, out)
        else:
            _write_two_mode_rows(layer, out)


class _NodeChecker:
    """Validates edge endpoints against the nodeset, optionally creating them."""

    def __init__(self, nodeset: Nodeset, create_missing: bool):
        self.nodeset = nodeset
        self.create_missing = create_missing

    def ensure(self, node: int, lineno: int | None = None) -> int:
        if node in self.nodeset:
            return node
        if self.create_missing:
            self.nodeset.add_node(node)
            return node
        where = f" (line {lineno})" if lineno is not None else ""
        raise UnknownNodeError(f"edge references node {node} missing from nodeset{where}")


_HEADER_KEYS = {"directed", "valued", "selfties", "inbound"}


def _parse_layer_header(net: Network, cells: list[str], lineno: int):
    if len(cells) < 3:
        raise FormatError("layer header needs a name and mode", lineno)
    name = unescape_field(cells[1])
    fields: dict[str, str] = {}
    for cell in cells[2:]:
        key, sep, value = cell.partition("=")
        if not sep or (key != "mode" and key not in _HEADER_KEYS):
            raise FormatError(f"unknown layer header field {cell!r}", lineno)
        fields[key] = value
    if fields.get("mode") not in ("1", "2"):
        raise FormatError("bad or missing mode in layer header", lineno)
    mode = int(fields.pop("mode"))
    flags = {}
    for key, value in fields.items():
        if value not in ("t", "f"):
            raise FormatError(f"bad flag value {key}={value}", lineno)
        flags[key] = value == "t"
    try:
        return net.add_layer(
            name, mode,
            directed=flags.get("directed", False),
            valued=flags.get("valued", False),
            allow_self_ties=flags.get("selfties", False),
            store_inbound=flags.get("inbound", True),
        )
    except Exception as exc:
        raise FormatError(str(exc), lineno) from None


def _load_network_tsv(lines: list[str], nodeset: Nodeset, create_missing: bool) -> Network:
    net = Network(nodeset)
    checker = _NodeChecker(nodeset, create_missing)
    layer = None
    for lineno, line in enumerate(lines, start=1):
        cells = line.split("\t")
        if cells[0] == "#layer":
            layer = _parse_layer_header(net, cells, lineno)
            continue
        if cells[0] == "#hyperedge":
            if not isinstance(layer, LayerTwoMode) or len(cells) != 2:
                raise FormatError("misplaced #hyperedge marker", lineno)
            name = unescape_field(cells[1])
            if name in layer.hyperedges:
                raise FormatError(f"duplicate hyperedge {name!r}", lineno)
            layer.add_hyperedge(name)
            continue
        if layer is None:
            raise FormatError("edge row before any layer header", lineno)
        if isinstance(layer, LayerOneMode):
            expected = 3 if layer.spec.valued else 2
            if len(cells) != expected:
                raise FormatError(f"expected {expected} columns, got {len(cells)}", lineno)
            try:
                a, b = int(cells[0]), int(cells[1])
            except ValueError:
                raise FormatError(f"bad edge endpoints {line!r}", lineno) from None
            value = None
            if layer.spec.valued:
                try:
                    value = parse_f32(cells[2])
                except ValueError:
                    raise FormatError(f"bad edge value {cells[2]!r}", lineno) from None
            layer.add_edge(checker.ensure(a, lineno), checker.ensure(b, lineno), value)
        else:
            if len(cells) != 2:
                raise FormatError(f"expected 2 columns, got {len(cells)}", lineno)
            name = unescape_field(cells[0])
            try:
                node = int(cells[1])
            except ValueError:
                raise FormatError(f"bad member node id {cells[1]!r}", lineno) from None
            if name not in layer.hyperedges:
                layer.add_hyperedge(name)
            layer.add_member(name, checker.ensure(node, lineno))
    return net


# ---------------------------------------------------------------------------
# binary format

def _write_str(buf, s: str) -> None:
    data = s.encode("utf-8")
    if len(data) > 0xFFFF:
        raise FormatError(f"name too long for binary format ({len(data)} bytes)")
    buf.write(struct.pack("<H", len(data)))
    buf.write(data)


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, n: int) -> bytes:
        chunk = self.data[self.pos:self.pos + n]
        if len(chunk) < n:
            raise FormatError("truncated file")
        self.pos += n
        return chunk

    def u8(self) -> int:
        return self.take(1)[0]

    def u16(self) -> int:
        return struct.unpack("<H", self.take(2))[0]

    def u32(self) -> int:
        return struct.unpack("<I", self.take(4))[0]

    def u64(self) -> int:
        return struct.unpack("<Q", self.take(8))[0]

    def string(self) -> str:
        n = self.u16()
        try:
            return self.take(n).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"bad UTF-8 in name: {exc}") from None

    def done(self) -> bool:
        return self.pos == len(self.data)


def _attr_bytes(atype: AttrType, value) -> bytes:
    if atype is AttrType.INT:
        return struct.pack("<i", value)
    if atype is AttrType.FLOAT:
        return struct.pack("<f", value)
    if atype is AttrType.BOOL:
        return struct.pack("<I", 1 if value else 0)
    return struct.pack("<I", ord(value))


def _attr_from_bytes(atype: AttrType, raw: bytes):
    if atype is AttrType.INT:
        return struct.unpack("<i", raw)[0]
    if atype is AttrType.FLOAT:
        return struct.unpack("<f", raw)[0]
    v = struct.unpack("<I", raw)[0]
    if atype is AttrType.BOOL:
        if v not in (0, 1):
            raise FormatError(f"bad boolean encoding {v}")
        return bool(v)
    if v > 0x10FFFF or 0xD800 <= v <= 0xDFFF:
        raise FormatError(f"bad char scalar {v}")
    return chr(v)


def _write_nodeset_bin(ns: Nodeset, out) -> None:
    out.write(MAGIC)
    out.write(struct.pack("<HB", VERSION, KIND_NODESET))
    plain = np.fromiter(ns.plain_nodes, dtype="<u4", count=len(ns.plain_nodes))
    plain.sort()
    out.write(struct.pack("<I", len(plain)))
    out.write(plain.tobytes())
    names = sorted(ns.schema)
    index = {name: i for i, name in enumerate(names)}
    out.write(struct.pack("<I", len(names)))
    for name in names:
        _write_str(out, name)
        out.write(struct.pack("<B", _TYPE_TAGS[ns.schema[name]]))
    out.write(struct.pack("<I", len(ns.attributed_nodes)))
    for node in sorted(ns.attributed_nodes):
        attrs = ns.attributed_nodes[node]
        out.write(struct.pack("<IH", node, len(attrs)))
        for name in sorted(attrs, key=index.__getitem__):
            out.write(struct.pack("<H", index[name]))
            out.write(_attr_bytes(ns.schema[name], attrs[name]))


def _load_nodeset_bin(r: _Reader) -> Nodeset:
    ns = Nodeset()
    plain_count = r.u32()
    ids = np.frombuffer(r.take(4 * plain_count), dtype="<u4")
    ns.plain_nodes = set(ids.tolist())
    if len(ns.plain_nodes) != plain_count:
        raise FormatError("duplicate plain node ids")
    schema_count = r.u32()
    names: list[str] = []
    for _ in range(schema_count):
        name = r.string()
        tag = r.u8()
        if tag not in _TAG_TYPES:
            raise FormatError(f"unknown attribute type tag {tag}")
        if name in ns.schema:
            raise FormatError(f"duplicate attribute {name!r}")
        ns.schema[name] = _TAG_TYPES[tag]
        names.append(name)
    attributed_count = r.u32()
    for _ in range(attributed_count):
        node, attr_count = struct.unpack("<IH", r.take(6))
        if node in ns:
            raise DuplicateNodeError(f"duplicate node id {node}")
        if attr_count == 0:
            raise FormatError(f"attributed node {node} carries no attributes")
        attrs: dict[str, object] = {}
        for _ in range(attr_count):
            idx = r.u16()
            if idx >= len(names):
                raise FormatError(f"attribute index {idx} out of range")
            name = names[idx]
            attrs[name] = _attr_from_bytes(ns.schema[name], r.take(4))
        ns.attributed_nodes[node] = attrs
    return ns


def _packed_edges(layer: LayerOneMode) -> np.ndarray:
    """Binary edges as sorted (src << 32 | dst) values, one per canonical edge."""
    symmetric = not layer.spec.directed
    gen = ((a << 32) | b
           for a, cell in layer.out_edges.items()
           for b in cell
           if not symmetric or b >= a)
    packed = np.fromiter(gen, dtype="<u8", count=layer.edge_count)
    packed.sort()
    return packed


def _write_one_mode_bin(layer: LayerOneMode, out) -> None:
    flags = (
        (1 if layer.spec.directed else 0)
        | (2 if layer.spec.valued else 0)
        | (4 if layer.spec.allow_self_ties else 0)
        | (8 if layer.spec.store_inbound else 0)
    )
    out.write(struct.pack("<BQ", flags, layer.edge_count))
    if layer.spec.valued:
        rows = sorted(layer.iter_edges())
        for a, b, v in rows:
            out.write(struct.pack("<IIf", a, b, v))
        return
    packed = _packed_edges(layer)
    pairs = np.empty((len(packed), 2), dtype="<u4")
    pairs[:, 0] = packed >> np.uint64(32)
    pairs[:, 1] = packed & np.uint64(0xFFFFFFFF)
    out.write(pairs.tobytes())


def _write_two_mode_bin(layer: LayerTwoMode, out) -> None:
    names = sorted(layer.hyperedges)
    if len(names) > 0xFFFF:
        raise FormatError(f"too many hyperedges for binary format ({len(names)})")
    out.write(struct.pack("<H", len(names)))
    for name in names:
        _write_str(out, name)
    index = {name: i for i, name in enumerate(names)}
    gen = ((index[name] << 32) | node
           for name in names
           for node in layer.hyperedges[name])
    packed = np.fromiter(gen, dtype="<u8", count=layer.membership_total)
    packed.sort()
    rows = np.empty(len(packed), dtype=_MEMBER_ROW)
    rows["h"] = (packed >> np.uint64(32)).astype("<u4")
    rows["n"] = packed & np.uint64(0xFFFFFFFF)
    out.write(struct.pack("<Q", len(rows)))
    out.write(rows.tobytes())


def _write_network_bin(net: Network, out) -> None:
    out.write(MAGIC)
    out.write(struct.pack("<HB", VERSION, KIND_NETWORK))
    if len(net.layers) > 0xFFFF:
        raise FormatError("too many layers for binary format")
    out.write(struct.pack("<H", len(net.layers)))
    for layer in net.layers.values():
        _write_str(out, layer.spec.name)
        out.write(struct.pack("<B", layer.spec.mode.value))
        if isinstance(layer, LayerOneMode):
            _write_one_mode_bin(layer, out)
        else:
            _write_two_mode_bin(layer, out)


def _check_endpoints(values: np.ndarray, checker: _NodeChecker) -> None:
    for node in np.unique(values).tolist():
        checker.ensure(node)


def _load_one_mode_bin(r: _Reader, net: Network, name: str, checker: _NodeChecker) -> None:
    flags = r.u8()
    count = r.u64()
    layer = net.add_layer(
        name, 1,
        directed=bool(flags & 1),
        valued=bool(flags & 2),
        allow_self_ties=bool(flags & 4),
        store_inbound=bool(flags & 8),
    )
    if layer.spec.valued:
        payload = r.take(12 * count)
        for a, b, v in struct.iter_unpack("<IIf", payload):
            checker.ensure(a)
            checker.ensure(b)
            layer.add_edge(a, b, v)
        return
    pairs = np.frombuffer(r.take(8 * count), dtype="<u4").reshape(-1, 2)
    _check_endpoints(pairs, checker)
    out = layer.out_edges
    symmetric = not layer.spec.directed
    inbound = layer.in_edges
    for a, b in pairs.tolist():
        cell = out.get(a)
        if cell is None:
            cell = out[a] = set()
        cell.add(b)
        if symmetric and a != b:
            cell = out.get(b)
            if cell is None:
                cell = out[b] = set()
            cell.add(a)
        if inbound is not None:
            cell = inbound.get(b)
            if cell is None:
                cell = inbound[b] = set()
            cell.add(a)
    layer.edge_count = count


def _load_two_mode_bin(r: _Reader, net: Network, name: str, checker: _NodeChecker) -> None:
    layer = net.add_layer(name, 2)
    hyper_count = r.u16()
    names = [r.string() for _ in range(hyper_count)]
    if len(set(names)) != hyper_count:
        raise FormatError("duplicate hyperedge names")
    member_sets: list[set[int]] = [set() for _ in range(hyper_count)]
    row_count = r.u64()
    rows = np.frombuffer(r.take(6 * row_count), dtype=_MEMBER_ROW)
    _check_endpoints(rows["n"], checker)
    memberships = layer.memberships
    total = 0
    for idx, node in zip(rows["h"].tolist(), rows["n"].tolist()):
        if idx >= hyper_count:
            raise FormatError(f"hyperedge index {idx} out of range")
        if node not in member_sets[idx]:
            member_sets[idx].add(node)
            memberships.setdefault(node, set()).add(names[idx])
            total += 1
    layer.hyperedges = dict(zip(names, member_sets))
    layer.membership_total = total


def _load_network_bin(r: _Reader, nodeset: Nodeset, create_missing: bool) -> Network:
    net = Network(nodeset)
    checker = _NodeChecker(nodeset, create_missing)
    layer_count = r.u16()
    for _ in range(layer_count):
        name = r.string()
        mode = r.u8()
        if mode == LayerMode.ONE.value:
            _load_one_mode_bin(r, net, name, checker)
        elif mode == LayerMode.TWO.value:
            _load_two_mode_bin(r, net, name, checker)
        else:
            raise FormatError(f"bad layer mode {mode}")
    return net


# ---------------------------------------------------------------------------
# public entry points

def save_nodeset(ns: Nodeset, path: str) -> None:
    fmt = detect_format(path)
    with _sink(path, fmt) as out:
        if fmt.textual:
            text = _io.TextIOWrapper(out, encoding="utf-8", newline="\n")
            with text:
                _write_nodeset_tsv(ns, text)
        else:
            _write_nodeset_bin(ns, out)


def save_network(net: Network, path: str) -> None:
    fmt = detect_format(path)
    with _sink(path, fmt) as out:
        if fmt.textual:
            text = _io.TextIOWrapper(out, encoding="utf-8", newline="\n")
            with text:
                _write_network_tsv(net, text)
        else:
            _write_network_bin(net, out)


def save_any(obj, path: str) -> None:
    if isinstance(obj, Nodeset):
        save_nodeset(obj, path)
    elif isinstance(obj, Network):
        save_network(obj, path)
    else:
        raise FormatError(f"cannot save object of type {type(obj).__name__}")


def load_any(path: str, nodeset: Nodeset | None = None,
             create_missing_nodes: bool = False):
    """Load whichever object the file holds (Nodeset or Network).

    Network files need a nodeset= to resolve edge endpoints against, or
    create_missing_nodes=True to build one (or extend the given one) with
    plain nodes.
    """
    fmt = detect_format(path)
    if fmt.textual:
        lines = _read_lines(path, fmt)
        if lines and lines[0].split("\t")[0] == "nodeid":
            return _load_nodeset_tsv(lines)
        if lines and not lines[0].startswith("#layer"):
            raise FormatError("file starts with neither a nodeset header nor a layer header", 1)
        if nodeset is None and not create_missing_nodes:
            raise FormatError("loading a network requires nodeset= or create_missing_nodes")
        ns = nodeset if nodeset is not None else Nodeset()
        return _load_network_tsv(lines, ns, create_missing_nodes)
    data = _read_bytes(path, fmt)
    r = _Reader(data)
    if r.take(4) != MAGIC:
        raise FormatError("bad magic bytes (not a weftnet binary file)")
    version = r.u16()
    if version != VERSION:
        raise FormatError(f"unsupported format version {version}")
    kind = r.u8()
    if kind == KIND_NODESET:
        obj = _load_nodeset_bin(r)
    elif kind == KIND_NETWORK:
        if nodeset is None and not create_missing_nodes:
            raise FormatError("loading a network requires nodeset= or create_missing_nodes")
        ns = nodeset if nodeset is not None else Nodeset()
        obj = _load_network_bin(r, ns, create_missing_nodes)
    else:
        raise FormatError(f"bad object kind {kind}")
    if not r.done():
        raise FormatError("trailing bytes after object")
    return obj


def load_nodeset(path: str) -> Nodeset:
    obj = load_any(path, create_missing_nodes=True)
    if not isinstance(obj, Nodeset):
        raise FormatError(f"{path!r} holds a network, not a nodeset")
    return obj


def load_network(path: str, nodeset: Nodeset | None = None,
                 create_missing_nodes: bool = False) -> Network:
    obj = load_any(path, nodeset, create_missing_nodes)
    if not isinstance(obj, Network):
        raise FormatError(f"{path!r} holds a nodeset, not a network")
    return obj


# ---------------------------------------------------------------------------
# layer edgelists

def export_layer(net: Network, layer: str, path: str) -> None:
    """Write one layer as a plain edgelist (one-mode) or membership list
    (two-mode), text formats only."""
    fmt = detect_format(path)
    if not fmt.textual:
        raise FormatError("layer export supports .tsv and .tsv.gz only")
    target = net.layer(layer)
    with _sink(path, fmt) as out:
        text = _io.TextIOWrapper(out, encoding="utf-8", newline="\n")
        with text:
            if isinstance(target, LayerOneMode):
                _write_one_mode_rows(target, text)
            else:
                _write_two_mode_rows(target, text)


def import_layer(net: Network, layer: str, path: str) -> None:
    """Read an edgelist/membership file into an existing empty layer."""
    fmt = detect_format(path)
    if not fmt.textual:
        raise FormatError("layer import supports .tsv and .tsv.gz only")
    target = net.layer(layer)
    checker = _NodeChecker(net.nodeset, False)
    lines = _read_lines(path, fmt)
    if isinstance(target, LayerOneMode):
        if target.edge_count:
            raise NonEmptyLayerError(f"layer {layer!r} already has edges")
        for lineno, line in enumerate(lines, start=1):
            cells = line.split("\t")
            if cells[0] == "#hyperedge":
                raise WrongLayerModeError(
                    f"line {lineno}: membership data into one-mode layer {layer!r}")
            if len(cells) not in (2, 3):
                raise FormatError(f"expected 2 or 3 columns, got {len(cells)}", lineno)
            try:
                a, b = int(cells[0]), int(cells[1])
            except ValueError:
                raise FormatError(f"bad edge endpoints {line!r}", lineno) from None
            value = None
            if len(cells) == 3:
                try:
                    value = parse_f32(cells[2])
                except ValueError:
                    raise FormatError(f"bad edge value {cells[2]!r}", lineno) from None
            target.add_edge(checker.ensure(a, lineno), checker.ensure(b, lineno), value)
    else:
        if target.hyperedges or target.membership_total:
            raise NonEmptyLayerError(f"layer {layer!r} is not empty")
        for lineno, line in enumerate(lines, start=1):
            cells = line.split("\t")
            if cells[0] == "#hyperedge":
                if len(cells) != 2:
                    raise FormatError("bad #hyperedge marker", lineno)
                target.add_hyperedge(unescape_field(cells[1]))
                continue
            if len(cells) != 2:
                raise FormatError(f"expected 2 columns, got {len(cells)}", lineno)
            name = unescape_field(cells[0])
            try:
                node = int(cells[1])
            except ValueError:
                raise FormatError(f"bad member node id {cells[1]!r}", lineno) from None
            if name not in target.hyperedges:
                target.add_hyperedge(name)
            target.add_member(name, checker.ensure(node, lineno))
