"""In-place layer transformations: symmetrize, dichotomize, filter edges."""

from __future__ import annotations

from .errors import UnsupportedMethodError, WrongLayerModeError
from .model import LayerOneMode, Network

SYMMETRIZE_METHODS = ("max", "min", "sum", "or")


def _one_mode(net: Network, layer: str) -> LayerOneMode:
    target = net.layer(layer)
    if not isinstance(target, LayerOneMode):
        raise WrongLayerModeError(f"layer {layer!r} is not one-mode")
    return target


def _ordered_edges(target: LayerOneMode):
    """Yield every stored (a, b, value) pair, value 1.0 on binary layers."""
    if target.spec.valued:
        for a, cell in target.out_edges.items():
            for b, v in cell.items():
                yield a, b, v
    else:
        for a, cell in target.out_edges.items():
            for b in cell:
                yield a, b, 1.0


def _rebuild_inbound(target: LayerOneMode) -> None:
    if target.in_edges is None:
        return
    new_in: dict = {}
    if target.spec.valued:
        for a, cell in target.out_edges.items():
            for b, v in cell.items():
                new_in.setdefault(b, {})[a] = v
    else:
        for a, cell in target.out_edges.items():
            for b in cell:
                new_in.setdefault(b, set()).add(a)
    target.in_edges = new_in


def symmetrize(net: Network, layer: str, method: str) -> None:
    """Make a directed layer symmetric by combining the two directions.

    Valued layers combine with max, min, or sum; binary layers with or.
    Absent directions count as 0 and pairs whose combined value is 0 are
    dropped (so min removes one-directional edges). Already-symmetric
    layers are left untouched.
    """
    target = _one_mode(net, layer)
    method = method.lower()
    if method not in SYMMETRIZE_METHODS:
        raise UnsupportedMethodError(f"unknown symmetrize method {method!r}")
    if target.spec.valued:
        if method == "or":
            raise UnsupportedMethodError("method or applies to binary layers only")
    elif method != "or":
        raise UnsupportedMethodError(f"method {method} applies to valued layers only")
    if not target.spec.directed:
        return

    out = target.out_edges
    pairs: dict[tuple[int, int], float] = {}
    for a, b, v in _ordered_edges(target):
        key = (a, b) if a <= b else (b, a)
        if key in pairs:
            continue
        if target.spec.valued:
            reverse_cell = out.get(b)
            rv = reverse_cell.get(a, 0.0) if reverse_cell and a != b else (v if a == b else 0.0)
            if method == "max":
                combined = max(v, rv)
            elif method == "min":
                combined = min(v, rv)
            else:
                combined = v + rv
            if combined != 0.0:
                pairs[key] = combined
        else:
            pairs[key] = 1.0

    new_out: dict = {}
    for (a, b), v in pairs.items():
        if target.spec.valued:
            new_out.setdefault(a, {})[b] = v
            if a != b:
                new_out.setdefault(b, {})[a] = v
        else:
            new_out.setdefault(a, set()).add(b)
            if a != b:
                new_out.setdefault(b, set()).add(a)
    target.out_edges = new_out
    target.in_edges = None
    target.edge_count = len(pairs)
    target.spec.directed = False
    target.spec.store_inbound = False


def dichotomize(net: Network, layer: str, threshold: float,
                keep_at_or_above: bool = True) -> None:
    """Turn a layer binary, keeping edges with value >= threshold (or
    < threshold when keep_at_or_above is False). Binary input edges count
    as 1.0."""
    target = _one_mode(net, layer)
    threshold = float(threshold)
    new_out: dict = {}
    count = 0
    for a, b, v in _ordered_edges(target):
        keep = v >= threshold if keep_at_or_above else v < threshold
        if not keep:
            continue
        new_out.setdefault(a, set()).add(b)
        if target.spec.directed or a <= b:
            count += 1
    target.out_edges = new_out
    target.edge_count = count
    target.spec.valued = False
    _rebuild_inbound(target)


def filter_edges(net: Network, layer: str, min_value: float | None = None,
                 max_value: float | None = None) -> None:
    """Remove edges whose value lies outside [min_value, max_value].

    Missing bounds are open. Binary edges count as 1.0; the layer keeps its
    binary/valued storage either way.
    """
    target = _one_mode(net, layer)
    valued = target.spec.valued
    new_out: dict = {}
    count = 0
    for a, b, v in _ordered_edges(target):
        if min_value is not None and v < min_value:
            continue
        if max_value is not None and v > max_value:
            continue
        if valued:
            new_out.setdefault(a, {})[b] = v
        else:
            new_out.setdefault(a, set()).add(b)
        if target.spec.directed or a <= b:
            count += 1
    target.out_edges = new_out
    target.edge_count = count
    _rebuild_inbound(target)
