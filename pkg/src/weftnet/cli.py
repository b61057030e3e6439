"""Scripting front end with a text mode and a JSON line protocol.

Statements look like `result = command(arg, name = value, ...)`. Values are
numbers, true/false, quoted strings, bare words, or semicolon-separated
lists. A bare word names a session object when one is bound under it and is
otherwise a plain string, so layer names can be written unquoted.

In JSON mode every statement produces exactly one line holding an object
with the keys status, command, result and error (see PROTOCOL_SCHEMA).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass

from . import __version__
from .errors import (
    CommandError,
    ScriptSyntaxError,
    UnknownCommandError,
    WeftError,
)
from .model import (
    ABSENT,
    EdgeTraversal,
    LayerOneMode,
    Network,
    Nodeset,
    U32_MAX,
    U64_MAX,
    create_nodeset,
)
from . import generators, processing, query
from . import io as wio

PROTOCOL_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "weftnet JSON mode statement response",
    "type": "object",
    "required": ["status", "command", "result", "error"],
    "additionalProperties": False,
    "properties": {
        "status": {"enum": ["ok", "error"]},
        "command": {"type": ["string", "null"]},
        "result": {},
        "error": {"type": ["string", "null"]},
    },
}


# ---------------------------------------------------------------------------
# tokenizer and parser

@dataclass(frozen=True)
class Bareword:
    text: str


@dataclass
class Token:
    kind: str  # word | string | punct
    text: str
    column: int


@dataclass
class Statement:
    target: str | None
    command: str
    args: list  # (name or None, value) pairs


_PUNCT = "=(),;"
_STRING_ESCAPES = {"\\": "\\", '"': '"', "t": "\t", "n": "\n", "r": "\r"}
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_INT_RE = re.compile(r"[+-]?[0-9]+\Z")
_FLOAT_RE = re.compile(
    r"[+-]?(?:[0-9]+\.[0-9]*(?:[eE][+-]?[0-9]+)?"
    r"|\.[0-9]+(?:[eE][+-]?[0-9]+)?"
    r"|[0-9]+[eE][+-]?[0-9]+)\Z"
)


def tokenize(line: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(line)
    while i < n:
        ch = line[i]
        if ch == "#":
            break
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token("punct", ch, i + 1))
            i += 1
            continue
        if ch == '"':
            start = i
            i += 1
            out = []
            while i < n and line[i] != '"':
                if line[i] == "\\":
                    if i + 1 >= n or line[i + 1] not in _STRING_ESCAPES:
                        raise ScriptSyntaxError("bad string escape", i + 1)
                    out.append(_STRING_ESCAPES[line[i + 1]])
                    i += 2
                else:
                    out.append(line[i])
                    i += 1
            if i >= n:
                raise ScriptSyntaxError("unterminated string", start + 1)
            i += 1
            tokens.append(Token("string", "".join(out), start + 1))
            continue
        start = i
        while i < n and not (line[i].isspace() or line[i] in _PUNCT or line[i] in '"#'):
            i += 1
        tokens.append(Token("word", line[start:i], start + 1))
    return tokens


def _classify_word(text: str):
    if _INT_RE.match(text):
        return int(text)
    if _FLOAT_RE.match(text):
        return float(text)
    if text == "true":
        return True
    if text == "false":
        return False
    return Bareword(text)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1]
            raise ScriptSyntaxError("unexpected end of statement",
                                    last.column + len(last.text))
        self.pos += 1
        return tok

    def expect_punct(self, ch: str) -> None:
        tok = self.next()
        if tok.kind != "punct" or tok.text != ch:
            raise ScriptSyntaxError(f"expected {ch!r}, got {tok.text!r}", tok.column)

    def at_punct(self, ch: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == "punct" and tok.text == ch

    def ident(self, what: str) -> str:
        tok = self.next()
        if tok.kind != "word" or not _IDENT_RE.match(tok.text):
            raise ScriptSyntaxError(f"expected {what}, got {tok.text!r}", tok.column)
        return tok.text

    def value(self):
        first = self._single_value()
        if not self.at_punct(";"):
            return first
        items = [first]
        while self.at_punct(";"):
            self.next()
            items.append(self._single_value())
        return items

    def _single_value(self):
        tok = self.next()
        if tok.kind == "string":
            return tok.text
        if tok.kind == "word":
            return _classify_word(tok.text)
        raise ScriptSyntaxError(f"expected a value, got {tok.text!r}", tok.column)


def parse_line(line: str) -> Statement | None:
    """Parse one script line; blank lines and pure comments give None."""
    tokens = tokenize(line)
    if not tokens:
        return None
    p = _Parser(tokens)
    first = p.ident("a command name")
    target = None
    if p.at_punct("="):
        p.next()
        target = first
        first = p.ident("a command name")
    p.expect_punct("(")
    args: list = []
    if not p.at_punct(")"):
        while True:
            tok = p.peek()
            name = None
            if (tok is not None and tok.kind == "word" and _IDENT_RE.match(tok.text)
                    and p.pos + 1 < len(p.tokens)
                    and p.tokens[p.pos + 1].kind == "punct"
                    and p.tokens[p.pos + 1].text == "="):
                name = p.next().text
                p.next()
            args.append((name, p.value()))
            if p.at_punct(","):
                p.next()
                continue
            break
    p.expect_punct(")")
    extra = p.peek()
    if extra is not None:
        raise ScriptSyntaxError(f"unexpected {extra.text!r} after statement", extra.column)
    return Statement(target, first, args)


# ---------------------------------------------------------------------------
# session and argument coercion

class Session:
    """CLI state: named objects, output mode, and invalidation bookkeeping."""

    def __init__(self, quiet: bool = False):
        self.objects: dict[str, object] = {}
        self.json_mode = False
        self.quiet = quiet
        self.broken: dict[int, str] = {}
        self.finished = False
        self.script_depth = 0


def _describe(v) -> str:
    if isinstance(v, Bareword):
        return f"unbound name {v.text!r}"
    if isinstance(v, bool):
        return "a boolean"
    if isinstance(v, int):
        return "an integer"
    if isinstance(v, float):
        return "a float"
    if isinstance(v, str):
        return "a string"
    if isinstance(v, list):
        return "a list"
    return f"a {type(v).__name__.lower()}"


def _resolve(session: Session, v):
    if isinstance(v, Bareword):
        obj = session.objects.get(v.text)
        if obj is not None:
            return obj
        return v.text
    return v


def _check_usable(session: Session, obj) -> None:
    reason = session.broken.get(id(obj))
    if reason:
        raise CommandError(reason)


def _as_network(session: Session, v) -> Network:
    r = _resolve(session, v)
    if not isinstance(r, Network):
        raise CommandError(f"expected a network, got {_describe(r)}")
    _check_usable(session, r)
    return r


def _as_nodeset(session: Session, v) -> Nodeset:
    r = _resolve(session, v)
    if not isinstance(r, Nodeset):
        raise CommandError(f"expected a nodeset, got {_describe(r)}")
    return r


def _as_name(v, what: str = "a name") -> str:
    if isinstance(v, Bareword):
        return v.text
    if isinstance(v, str):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return str(v)
    raise CommandError(f"expected {what}, got {_describe(v)}")


def _as_node(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise CommandError(f"expected a node id, got {_describe(v)}")
    if not 0 <= v <= U32_MAX:
        raise CommandError(f"node id {v} outside unsigned 32-bit range")
    return v


def _as_int(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise CommandError(f"{what} must be an integer, got {_describe(v)}")
    return v


def _as_float(v, what: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise CommandError(f"{what} must be a number, got {_describe(v)}")
    return float(v)


def _as_bool(v, what: str) -> bool:
    if not isinstance(v, bool):
        raise CommandError(f"{what} must be true or false, got {_describe(v)}")
    return v


def _as_seed(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise CommandError(f"seed must be an integer, got {_describe(v)}")
    if not 0 <= v <= U64_MAX:
        raise CommandError(f"seed {v} outside unsigned 64-bit range")
    return v


def _as_traversal(v) -> EdgeTraversal:
    label = _as_name(v, "a traversal (both, out, in)")
    try:
        return EdgeTraversal.from_label(label.lower())
    except ValueError:
        raise CommandError(f"traversal must be both, out or in, got {label!r}") from None


def _as_name_list(v) -> list[str]:
    items = v if isinstance(v, list) else [v]
    return [_as_name(item, "a layer name") for item in items]


class _Args:
    """Positional/named argument view with arity and leftover checking."""

    def __init__(self, stmt: Statement):
        self.command = stmt.command
        self.pos = [v for name, v in stmt.args if name is None]
        self.named: dict[str, object] = {}
        for name, v in stmt.args:
            if name is None:
                continue
            if name in self.named:
                raise CommandError(f"duplicate argument {name!r}")
            self.named[name] = v
        self._pos_taken = 0

    def take(self, what: str):
        if self._pos_taken >= len(self.pos):
            raise CommandError(f"{self.command} needs {what}")
        v = self.pos[self._pos_taken]
        self._pos_taken += 1
        return v

    def take_optional(self):
        if self._pos_taken >= len(self.pos):
            return None
        v = self.pos[self._pos_taken]
        self._pos_taken += 1
        return v

    def take_or_named(self, name: str, what: str):
        if name in self.named:
            v = self.named.pop(name)
            if self._pos_taken < len(self.pos):
                raise CommandError(f"{name!r} given both positionally and by name")
            return v
        return self.take(what)

    def opt(self, name: str, default=None):
        return self.named.pop(name, default)

    def finish(self) -> None:
        if self._pos_taken < len(self.pos):
            raise CommandError(
                f"{self.command} got {len(self.pos) - self._pos_taken} extra argument(s)")
        if self.named:
            extras = ", ".join(sorted(self.named))
            raise CommandError(f"unknown argument(s) for {self.command}: {extras}")


# ---------------------------------------------------------------------------
# commands

_COMMANDS: dict[str, tuple] = {}


def command(name: str, usage: str):
    def deco(fn):
        _COMMANDS[name] = (fn, usage)
        return fn
    return deco


def _clean_float(v: float) -> float:
    """Collapse an f32 value to its shortest decimal for JSON output."""
    return float(wio.format_f32(v))


def _object_summary(obj) -> dict:
    if isinstance(obj, Nodeset):
        return {
            "type": "nodeset",
            "nodes": len(obj),
            "attributes": {name: t.value for name, t in sorted(obj.schema.items())},
        }
    layers = []
    for layer in obj.layers.values():
        entry: dict = {"name": layer.spec.name, "mode": layer.spec.mode.value}
        if isinstance(layer, LayerOneMode):
            entry["directed"] = layer.spec.directed
            entry["valued"] = layer.spec.valued
            entry["edges"] = layer.edge_count
        else:
            entry["hyperedges"] = len(layer.hyperedges)
            entry["memberships"] = layer.membership_total
        layers.append(entry)
    return {"type": "network", "nodes": len(obj.nodeset), "layers": layers}


@command("createnodeset", "createnodeset(createnodes = N | ids = id;id;...)")
def _cmd_createnodeset(session: Session, args: _Args):
    count = args.opt("createnodes")
    ids = args.opt("ids")
    args.finish()
    if (count is None) == (ids is None):
        raise CommandError("createnodeset needs exactly one of createnodes= or ids=")
    if count is not None:
        count = _as_int(count, "createnodes")
        if count < 0:
            raise CommandError("createnodes must be non-negative")
        return create_nodeset(count=count)
    items = ids if isinstance(ids, list) else [ids]
    return create_nodeset(ids=[_as_node(v) for v in items])


@command("createnetwork", "createnetwork(nodeset = ns)")
def _cmd_createnetwork(session: Session, args: _Args):
    ns = _as_nodeset(session, args.take_or_named("nodeset", "a nodeset"))
    args.finish()
    return Network(ns)


@command("addlayer", "addlayer(net, name, mode = 1|2, directed = b, valued = b, "
                     "selfties = b, inbound = b)")
def _cmd_addlayer(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    name = _as_name(args.take("a layer name"), "a layer name")
    mode = _as_int(args.take_or_named("mode", "mode = 1 or 2"), "mode")
    if mode not in (1, 2):
        raise CommandError("mode must be 1 (one-mode) or 2 (two-mode)")
    directed = _as_bool(args.opt("directed", False), "directed")
    valued = _as_bool(args.opt("valued", False), "valued")
    selfties = _as_bool(args.opt("selfties", False), "selfties")
    inbound = _as_bool(args.opt("inbound", True), "inbound")
    args.finish()
    net.add_layer(name, mode, directed=directed, valued=valued,
                  allow_self_ties=selfties, store_inbound=inbound)
    return None


@command("deletelayer", "deletelayer(net, name)")
def _cmd_deletelayer(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    name = _as_name(args.take("a layer name"), "a layer name")
    args.finish()
    net.delete_layer(name)
    return None


@command("generate", "generate(net, layer, type = er|ws|ba|2mode, "
                     "p|k;beta|m|h;a = ..., seed = s)")
def _cmd_generate(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    kind = _as_name(args.take_or_named("type", "type = er, ws, ba or 2mode"),
                    "a generator type").lower()
    seed = args.opt("seed")
    seed = time.time_ns() & U64_MAX if seed is None else _as_seed(seed)
    result: dict = {"layer": layer, "type": kind, "seed": seed}
    if kind == "er":
        p = _as_float(args.take_or_named("p", "p = probability"), "p")
        args.finish()
        generators.generate_er(net, layer, p, seed)
        result["edges"] = net.one_mode(layer).edge_count
    elif kind == "ws":
        k = _as_int(args.take_or_named("k", "k = even degree"), "k")
        beta = _as_float(args.take_or_named("beta", "beta = probability"), "beta")
        args.finish()
        generators.generate_ws(net, layer, k, beta, seed)
        result["edges"] = net.one_mode(layer).edge_count
    elif kind == "ba":
        m = _as_int(args.take_or_named("m", "m = edges per node"), "m")
        args.finish()
        generators.generate_ba(net, layer, m, seed)
        result["edges"] = net.one_mode(layer).edge_count
    elif kind == "2mode":
        h = _as_int(args.take_or_named("h", "h = hyperedge count"), "h")
        a = _as_float(args.take_or_named("a", "a = mean affiliations"), "a")
        args.finish()
        generators.generate_two_mode(net, layer, h, a, seed)
        target = net.two_mode(layer)
        result["hyperedges"] = len(target.hyperedges)
        result["memberships"] = target.membership_total
    else:
        raise CommandError(f"unknown generator type {kind!r}")
    return result


@command("addedge", "addedge(net, layer, a, b, value = v)")
def _cmd_addedge(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    a = _as_node(args.take("a node id"))
    b = _as_node(args.take("a node id"))
    value = args.take_optional()
    if value is None:
        value = args.opt("value")
    if value is not None:
        value = _as_float(value, "value")
    args.finish()
    net.add_edge(layer, a, b, value)
    return None


@command("removeedge", "removeedge(net, layer, a, b)")
def _cmd_removeedge(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    a = _as_node(args.take("a node id"))
    b = _as_node(args.take("a node id"))
    args.finish()
    net.remove_edge(layer, a, b)
    return None


@command("addhyperedge", "addhyperedge(net, layer, name, members = id;id;...)")
def _cmd_addhyperedge(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    name = _as_name(args.take("a hyperedge name"), "a hyperedge name")
    members = args.opt("members")
    args.finish()
    if members is None:
        member_ids: list[int] = []
    else:
        items = members if isinstance(members, list) else [members]
        member_ids = [_as_node(v) for v in items]
    net.add_hyperedge(layer, name, member_ids)
    return None


@command("addtohyperedge", "addtohyperedge(net, layer, name, node)")
def _cmd_addtohyperedge(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    name = _as_name(args.take("a hyperedge name"), "a hyperedge name")
    node = _as_node(args.take("a node id"))
    args.finish()
    net.add_to_hyperedge(layer, name, node)
    return None


@command("removefromhyperedge", "removefromhyperedge(net, layer, name, node)")
def _cmd_removefromhyperedge(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    name = _as_name(args.take("a hyperedge name"), "a hyperedge name")
    node = _as_node(args.take("a node id"))
    args.finish()
    net.remove_from_hyperedge(layer, name, node)
    return None


@command("checkedge", "checkedge(net, layer, a, b, traversal = both|out|in)")
def _cmd_checkedge(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    a = _as_node(args.take("a node id"))
    b = _as_node(args.take("a node id"))
    traversal = args.opt("traversal")
    traversal = EdgeTraversal.BOTH if traversal is None else _as_traversal(traversal)
    args.finish()
    return query.check_edge_exists(net, layer, a, b, traversal)


@command("getedge", "getedge(net, layer, a, b, traversal = both|out|in)")
def _cmd_getedge(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    a = _as_node(args.take("a node id"))
    b = _as_node(args.take("a node id"))
    traversal = args.opt("traversal")
    traversal = EdgeTraversal.BOTH if traversal is None else _as_traversal(traversal)
    args.finish()
    return _clean_float(query.get_edge_value(net, layer, a, b, traversal))


def _layer_selection(args: _Args) -> list[str] | None:
    v = args.opt("layernames")
    if v is None:
        v = args.opt("layername")
    if v is None:
        return None
    return _as_name_list(v)


@command("getnodealters", "getnodealters(net, node, layernames = L;L;..., "
                          "traversal = both|out|in)")
def _cmd_getnodealters(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    node = _as_node(args.take("a node id"))
    layers = _layer_selection(args)
    traversal = args.opt("traversal")
    traversal = EdgeTraversal.BOTH if traversal is None else _as_traversal(traversal)
    args.finish()
    return sorted(query.get_node_alters(net, node, layers, traversal))


@command("degree", "degree(net, layer, node, traversal = both|out|in, projected = b)")
def _cmd_degree(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    node = _as_node(args.take("a node id"))
    traversal = args.opt("traversal")
    traversal = EdgeTraversal.BOTH if traversal is None else _as_traversal(traversal)
    projected = _as_bool(args.opt("projected", True), "projected")
    args.finish()
    return query.degree(net, layer, node, traversal, projected)


@command("density", "density(net, layer)")
def _cmd_density(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    args.finish()
    return query.density(net, layer)


@command("components", "components(net, layernames = L;L;...)")
def _cmd_components(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layers = _layer_selection(args)
    args.finish()
    labels = query.connected_components(net, layers)
    sizes: dict[int, int] = {}
    for label in labels.values():
        sizes[label] = sizes.get(label, 0) + 1
    return {"count": len(sizes), "largest": max(sizes.values(), default=0)}


@command("shortestpath", "shortestpath(net, a, b, layernames = L;L;...)")
def _cmd_shortestpath(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    a = _as_node(args.take("a node id"))
    b = _as_node(args.take("a node id"))
    layers = _layer_selection(args)
    args.finish()
    result = query.shortest_path(net, a, b, layers)
    if result is None:
        return {"unreachable": True}
    return {"length": result.length, "nodes": result.nodes}


@command("projectedsize", "projectedsize(net, layer)")
def _cmd_projectedsize(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    args.finish()
    return query.projected_edge_count(net, layer)


@command("setattribute", "setattribute(nodes, node, name, value)")
def _cmd_setattribute(session: Session, args: _Args):
    ns = _as_nodeset(session, args.take("a nodeset"))
    node = _as_node(args.take("a node id"))
    name = _as_name(args.take("an attribute name"), "an attribute name")
    value = args.take_or_named("value", "a value")
    args.finish()
    if isinstance(value, Bareword):
        value = value.text
    if isinstance(value, list):
        raise CommandError("attribute value cannot be a list")
    ns.set_attribute(node, name, value)
    return None


@command("getattribute", "getattribute(nodes, node, name)")
def _cmd_getattribute(session: Session, args: _Args):
    ns = _as_nodeset(session, args.take("a nodeset"))
    node = _as_node(args.take("a node id"))
    name = _as_name(args.take("an attribute name"), "an attribute name")
    args.finish()
    value = ns.get_attribute(node, name)
    if value is ABSENT:
        return {"present": False}
    atype = ns.attribute_type(name)
    if atype.value == "float":
        value = _clean_float(value)
    return {"present": True, "type": atype.value, "value": value}


@command("removeattribute", "removeattribute(nodes, node, name)")
def _cmd_removeattribute(session: Session, args: _Args):
    ns = _as_nodeset(session, args.take("a nodeset"))
    node = _as_node(args.take("a node id"))
    name = _as_name(args.take("an attribute name"), "an attribute name")
    args.finish()
    ns.remove_attribute(node, name)
    return None


@command("summarizeattribute", "summarizeattribute(nodes, name)")
def _cmd_summarizeattribute(session: Session, args: _Args):
    ns = _as_nodeset(session, args.take("a nodeset"))
    name = _as_name(args.take("an attribute name"), "an attribute name")
    args.finish()
    summary = query.summarize_attribute(ns, name)
    if summary.get("type") == "float":
        for key in ("min", "max"):
            if key in summary:
                summary[key] = _clean_float(summary[key])
    return summary


@command("symmetrize", "symmetrize(net, layer, method = max|min|sum|or)")
def _cmd_symmetrize(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    method = _as_name(args.take_or_named("method", "method = max, min, sum or or"),
                      "a method")
    args.finish()
    processing.symmetrize(net, layer, method)
    return None


@command("dichotomize", "dichotomize(net, layer, threshold, keepatorabove = b)")
def _cmd_dichotomize(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    threshold = _as_float(args.take_or_named("threshold", "a threshold"), "threshold")
    keep = _as_bool(args.opt("keepatorabove", True), "keepatorabove")
    args.finish()
    processing.dichotomize(net, layer, threshold, keep)
    return None


@command("filteredges", "filteredges(net, layer, min = v, max = v)")
def _cmd_filteredges(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    lo = args.opt("min")
    hi = args.opt("max")
    args.finish()
    lo = None if lo is None else _as_float(lo, "min")
    hi = None if hi is None else _as_float(hi, "max")
    processing.filter_edges(net, layer, lo, hi)
    return None


@command("savefile", "savefile(obj, file = path)")
def _cmd_savefile(session: Session, args: _Args):
    obj = _resolve(session, args.take("a nodeset or network"))
    if not isinstance(obj, (Nodeset, Network)):
        raise CommandError(f"expected a nodeset or network, got {_describe(obj)}")
    if isinstance(obj, Network):
        _check_usable(session, obj)
    path = _as_name(args.take_or_named("file", "file = path"), "a file path")
    args.finish()
    wio.save_any(obj, path)
    return {"file": path}


@command("loadfile", "loadfile(file = path, nodeset = ns, createnodes = b)")
def _cmd_loadfile(session: Session, args: _Args):
    path = _as_name(args.take_or_named("file", "file = path"), "a file path")
    nodeset = args.opt("nodeset")
    create = _as_bool(args.opt("createnodes", False), "createnodes")
    args.finish()
    ns = None if nodeset is None else _as_nodeset(session, nodeset)
    try:
        return wio.load_any(path, ns, create)
    except FileNotFoundError:
        raise CommandError(f"no such file {path!r}") from None


@command("exportlayer", "exportlayer(net, layer, file = path)")
def _cmd_exportlayer(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    path = _as_name(args.take_or_named("file", "file = path"), "a file path")
    args.finish()
    wio.export_layer(net, layer, path)
    return {"file": path}


@command("importlayer", "importlayer(net, layer, file = path)")
def _cmd_importlayer(session: Session, args: _Args):
    net = _as_network(session, args.take("a network"))
    layer = _as_name(args.take("a layer name"), "a layer name")
    path = _as_name(args.take_or_named("file", "file = path"), "a file path")
    args.finish()
    try:
        wio.import_layer(net, layer, path)
    except FileNotFoundError:
        raise CommandError(f"no such file {path!r}") from None
    return None


@command("info", "info([obj])")
def _cmd_info(session: Session, args: _Args):
    if args.pos:
        obj = _resolve(session, args.take("an object"))
        args.finish()
        if not isinstance(obj, (Nodeset, Network)):
            raise CommandError(f"expected a nodeset or network, got {_describe(obj)}")
        return _object_summary(obj)
    args.finish()
    return {
        "engine": "weftnet",
        "version": __version__,
        "mode": "json" if session.json_mode else "text",
        "objects": len(session.objects),
    }


@command("listobjects", "listobjects()")
def _cmd_listobjects(session: Session, args: _Args):
    args.finish()
    out = []
    for name in sorted(session.objects):
        obj = session.objects[name]
        kind = "nodeset" if isinstance(obj, Nodeset) else "network"
        out.append({"name": name, "type": kind})
    return out


@command("deleteobject", "deleteobject(name)")
def _cmd_deleteobject(session: Session, args: _Args):
    name = _as_name(args.take("an object name"), "an object name")
    args.finish()
    obj = session.objects.pop(name, None)
    if obj is None:
        raise CommandError(f"no object named {name!r}")
    if isinstance(obj, Nodeset):
        for other, candidate in session.objects.items():
            if isinstance(candidate, Network) and candidate.nodeset is obj:
                session.broken[id(candidate)] = (
                    f"network {other!r} references deleted nodeset {name!r}")
    return None


@command("outputmode", "outputmode(mode = text|json)")
def _cmd_outputmode(session: Session, args: _Args):
    mode = _as_name(args.take_or_named("mode", "mode = text or json"), "a mode").lower()
    args.finish()
    if mode not in ("text", "json"):
        raise CommandError(f"mode must be text or json, got {mode!r}")
    session.json_mode = mode == "json"
    return {"mode": mode}


@command("runscript", "runscript(file = path)")
def _cmd_runscript(session: Session, args: _Args):
    path = _as_name(args.take_or_named("file", "file = path"), "a file path")
    args.finish()
    if session.script_depth >= 16:
        raise CommandError("scripts nested too deeply")
    try:
        with open(path, encoding="utf-8") as f:
            lines = f.read().split("\n")
    except OSError as exc:
        raise CommandError(f"cannot read script {path!r}: {exc}") from None
    session.script_depth += 1
    try:
        ok = _run_lines(session, lines)
    finally:
        session.script_depth -= 1
    if not ok and not session.json_mode:
        raise CommandError(f"script {path!r} aborted on error")
    return {"file": path}


@command("help", "help([command])")
def _cmd_help(session: Session, args: _Args):
    if args.pos:
        name = _as_name(args.take("a command name"), "a command name")
        args.finish()
        entry = _COMMANDS.get(name)
        if entry is None:
            raise CommandError(f"unknown command {name!r}")
        return {"command": name, "usage": entry[1]}
    args.finish()
    return sorted(_COMMANDS)


@command("quit", "quit()")
def _cmd_quit(session: Session, args: _Args):
    args.finish()
    session.finished = True
    return None


# ---------------------------------------------------------------------------
# execution and rendering

def execute(session: Session, stmt: Statement):
    """Run one parsed statement, returning its raw result."""
    entry = _COMMANDS.get(stmt.command)
    if entry is None:
        raise UnknownCommandError(f"unknown command {stmt.command!r}")
    args = _Args(stmt)
    result = entry[0](session, args)
    if stmt.target is not None:
        if not isinstance(result, (Nodeset, Network)):
            raise CommandError(
                f"{stmt.command} does not produce an object to assign to {stmt.target!r}")
        session.objects[stmt.target] = result
    return result


def _jsonable(result):
    if isinstance(result, (Nodeset, Network)):
        return _object_summary(result)
    return result


def _render_json(command: str | None, result, error: str | None) -> str:
    payload = {
        "status": "ok" if error is None else "error",
        "command": command,
        "result": _jsonable(result) if error is None else None,
        "error": error,
    }
    return json.dumps(payload, separators=(",", ":"))


def _render_text(result) -> str:
    if result is None:
        return "ok"
    if isinstance(result, bool):
        return "true" if result else "false"
    if isinstance(result, (int, float, str)):
        return str(result)
    if isinstance(result, (Nodeset, Network)):
        return json.dumps(_object_summary(result))
    if isinstance(result, list):
        if not result:
            return "(none)"
        if all(isinstance(x, (int, float, str)) and not isinstance(x, bool)
               for x in result):
            return " ".join(str(x) for x in result)
        return json.dumps(result)
    return json.dumps(result)


def process_line(session: Session, line: str) -> tuple[bool, str | None]:
    """Parse and run one line; returns (ok, rendered output or None)."""
    try:
        stmt = parse_line(line)
    except ScriptSyntaxError as exc:
        if session.json_mode:
            return False, _render_json(None, None, str(exc))
        return False, f"syntax error: {exc}"
    if stmt is None:
        return True, None
    try:
        result = execute(session, stmt)
    except (WeftError, ValueError, OSError) as exc:
        if session.json_mode:
            return False, _render_json(stmt.command, None, str(exc))
        return False, f"error: {exc}"
    if session.json_mode:
        return True, _render_json(stmt.command, result, None)
    if result is None and session.quiet:
        return True, None
    return True, _render_text(result)


def _emit(line: str | None) -> None:
    if line is None:
        return
    sys.stdout.write(line + "\n")
    sys.stdout.flush()


def _run_lines(session: Session, lines: list[str]) -> bool:
    """Run script lines. Text mode stops at the first error; JSON mode
    reports every statement and keeps going. Returns False if anything
    failed."""
    all_ok = True
    for lineno, line in enumerate(lines, start=1):
        ok, output = process_line(session, line)
        if not ok:
            all_ok = False
            if not session.json_mode:
                _emit(f"line {lineno}: {output}")
                return False
        _emit(output)
        if session.finished:
            break
    return all_ok


def run_script(session: Session, path: str) -> bool:
    with open(path, encoding="utf-8") as f:
        lines = f.read().split("\n")
    return _run_lines(session, lines)


def _repl(session: Session) -> None:
    interactive = sys.stdin.isatty() and not session.json_mode
    if interactive and not session.quiet:
        print(f"weftnet {__version__} (type help() for commands, quit() to leave)")
    while not session.finished:
        if interactive:
            sys.stdout.write("> ")
            sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            break
        _, output = process_line(session, line.rstrip("\n"))
        _emit(output)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="weftnet",
        description="Multilayer mixed-mode network engine scripting front end.",
    )
    parser.add_argument("--json", action="store_true",
                        help="start in JSON output mode (one object per statement)")
    parser.add_argument("--script", metavar="PATH",
                        help="run a script file instead of reading stdin")
    parser.add_argument("--quiet", action="store_true",
                        help="suppress ok lines and the banner in text mode")
    args = parser.parse_args(argv)
    session = Session(quiet=args.quiet)
    session.json_mode = args.json
    if args.script:
        try:
            ok = run_script(session, args.script)
        except OSError as exc:
            print(f"cannot read script {args.script!r}: {exc}", file=sys.stderr)
            return 1
        return 0 if ok or session.json_mode else 1
    _repl(session)
    return 0


if __name__ == "__main__":
    sys.exit(main())
