"""Random layer generators: ER, WS, BA one-mode models and a two-mode model.

All four write directly into an empty layer of the right kind and are
deterministic for a given (parameters, seed) pair. Node ids need not be
contiguous: the models run over positions 0..n-1 of the sorted id list and
positions are mapped to ids on emission.
"""

from __future__ import annotations

import math
import random

import numpy as np

from .errors import GeneratorParameterError, NonEmptyLayerError, WrongLayerModeError
from .model import LayerOneMode, LayerTwoMode, Network, U64_MAX


def _check_seed(seed) -> int:
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise GeneratorParameterError(f"seed must be an integer, got {seed!r}")
    if not 0 <= seed <= U64_MAX:
        raise GeneratorParameterError(f"seed {seed} outside unsigned 64-bit range")
    return seed


def _symmetric_target(net: Network, layer: str) -> LayerOneMode:
    target = net.layer(layer)
    if not isinstance(target, LayerOneMode):
        raise WrongLayerModeError(f"layer {layer!r} is not one-mode")
    if target.spec.directed:
        raise WrongLayerModeError(f"layer {layer!r} is directed; generators fill symmetric layers")
    if target.edge_count:
        raise NonEmptyLayerError(f"layer {layer!r} already has edges")
    return target


def _edge_writer(target: LayerOneMode):
    """Fast path writing a symmetric edge; callers guarantee no duplicates."""
    out = target.out_edges
    if target.spec.valued:
        def emit(a: int, b: int) -> None:
            out.setdefault(a, {})[b] = 1.0
            out.setdefault(b, {})[a] = 1.0
    else:
        def emit(a: int, b: int) -> None:
            cell = out.get(a)
            if cell is None:
                cell = out[a] = set()
            cell.add(b)
            cell = out.get(b)
            if cell is None:
                cell = out[b] = set()
            cell.add(a)
    return emit


def generate_er(net: Network, layer: str, p: float, seed: int) -> None:
    """Erdos-Renyi G(n, p) by geometric skipping over lexicographic pair order.

    Draws the gap to the next present pair as floor(log(u) / log(1 - p)), so
    runtime scales with the number of edges rather than the n(n-1)/2
    candidate pairs.
    """
    target = _symmetric_target(net, layer)
    if not 0.0 <= p <= 1.0:
        raise GeneratorParameterError(f"p must be in [0, 1], got {p}")
    rng = random.Random(_check_seed(seed))
    ids = net.nodeset.sorted_ids()
    n = len(ids)
    emit = _edge_writer(target)
    count = 0
    if p >= 1.0:
        for v in range(1, n):
            for w in range(v):
                emit(ids[w], ids[v])
                count += 1
        target.edge_count = count
        return
    if p <= 0.0 or n < 2:
        return
    log_q = math.log(1.0 - p)
    v, w = 1, -1
    while v < n:
        u = 1.0 - rng.random()
        w = w + 1 + int(math.log(u) / log_q)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            emit(ids[w], ids[v])
            count += 1
    target.edge_count = count


def generate_ws(net: Network, layer: str, k: int, beta: float, seed: int) -> None:
    """Watts-Strogatz ring lattice with per-edge rewiring.

    Each lattice edge (i, i+d) is rewired with probability beta: endpoint i
    stays and the partner is redrawn uniformly, rejecting self-loops and
    existing edges; after n failed draws the original edge stays. The edge
    count is exactly n*k/2 either way.
    """
    target = _symmetric_target(net, layer)
    if isinstance(k, bool) or not isinstance(k, int) or k <= 0 or k % 2:
        raise GeneratorParameterError(f"k must be a positive even integer, got {k!r}")
    if not 0.0 <= beta <= 1.0:
        raise GeneratorParameterError(f"beta must be in [0, 1], got {beta}")
    ids = net.nodeset.sorted_ids()
    n = len(ids)
    if k >= n:
        raise GeneratorParameterError(f"k={k} must be smaller than node count {n}")
    rng = random.Random(_check_seed(seed))
    out = target.out_edges
    emit = _edge_writer(target)

    for d in range(1, k // 2 + 1):
        for i in range(n):
            emit(ids[i], ids[(i + d) % n])

    def connected(a: int, b: int) -> bool:
        cell = out.get(a)
        return cell is not None and b in cell

    for d in range(1, k // 2 + 1):
        for i in range(n):
            if rng.random() >= beta:
                continue
            a = ids[i]
            b = ids[(i + d) % n]
            for _ in range(n):
                t = ids[rng.randrange(n)]
                if t != a and not connected(a, t):
                    target.remove_edge(a, b)
                    target.add_edge(a, t)
                    break
    target.edge_count = n * k // 2


def generate_ba(net: Network, layer: str, m: int, seed: int) -> None:
    """Barabasi-Albert preferential attachment.

    Nodes 0..m-1 start isolated; node m connects to all of them; every later
    node connects to m distinct existing nodes drawn from a list that holds
    each edge endpoint once per incident edge, which makes a uniform draw
    degree-proportional. Edge count is exactly m*(n-m).
    """
    target = _symmetric_target(net, layer)
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise GeneratorParameterError(f"m must be a positive integer, got {m!r}")
    ids = net.nodeset.sorted_ids()
    n = len(ids)
    if m >= n:
        raise GeneratorParameterError(f"m={m} must be smaller than node count {n}")
    rng = random.Random(_check_seed(seed))
    emit = _edge_writer(target)
    repeated: list[int] = []
    for i in range(m, n):
        if i == m:
            chosen = list(range(m))
        else:
            chosen = []
            seen: set[int] = set()
            while len(chosen) < m:
                t = repeated[rng.randrange(len(repeated))]
                if t not in seen:
                    seen.add(t)
                    chosen.append(t)
        for t in chosen:
            emit(ids[i], ids[t])
        repeated.extend(chosen)
        repeated.extend([i] * m)
    target.edge_count = m * (n - m)


def generate_two_mode(net: Network, layer: str, h: int, a: float, seed: int) -> None:
    """Random affiliation layer: h hyperedges named "0".."h-1"; each node
    joins c ~ Poisson(a) distinct hyperedges chosen uniformly, with c capped
    at h."""
    target = net.layer(layer)
    if not isinstance(target, LayerTwoMode):
        raise WrongLayerModeError(f"layer {layer!r} is not two-mode")
    if target.hyperedges or target.membership_total:
        raise NonEmptyLayerError(f"layer {layer!r} is not empty")
    if isinstance(h, bool) or not isinstance(h, int) or h < 1:
        raise GeneratorParameterError(f"h must be a positive integer, got {h!r}")
    if not isinstance(a, (int, float)) or isinstance(a, bool) or a < 0:
        raise GeneratorParameterError(f"a must be a non-negative number, got {a!r}")
    if a > h:
        raise GeneratorParameterError(f"mean affiliations a={a} exceeds hyperedge count h={h}")
    rng = np.random.default_rng(_check_seed(seed))
    ids = net.nodeset.sorted_ids()
    names = [str(j) for j in range(h)]
    member_sets: list[set[int]] = [set() for _ in range(h)]
    memberships = target.memberships
    counts = np.minimum(rng.poisson(a, size=len(ids)), h)
    total = 0
    for node, c in zip(ids, counts):
        if not c:
            continue
        chosen = rng.choice(h, int(c), replace=False, shuffle=False)
        mem = set()
        for j in chosen:
            member_sets[j].add(node)
            mem.add(names[j])
        memberships[node] = mem
        total += int(c)
    target.hyperedges = {names[j]: member_sets[j] for j in range(h)}
    target.membership_total = total
