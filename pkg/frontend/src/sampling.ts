import { Engine, NamedArgs, ref } from "./client.js";

/**
 * Traversal workflows composed from engine queries. Nothing here looks at
 * stored structure directly; every hop is a getnodealters round trip, so
 * two-mode layers come back pseudo-projected exactly like direct queries.
 */

export interface EgoNetworkResult {
  /** Every node within the radius, ascending. */
  nodes: number[];
  /** Induced edges among those nodes as [low, high] pairs, sorted. */
  edges: Array<[number, number]>;
}

async function fetchAlters(
  engine: Engine,
  net: string,
  node: number,
  layers: string[] | null,
): Promise<number[]> {
  const args: Array<number | NamedArgs> = [node];
  if (layers !== null) {
    if (layers.length === 0) return [];
    args.push({ layernames: layers });
  }
  const result = await engine.call("getnodealters", ref(net), ...args);
  return result as number[];
}

/**
 * Breadth-first ball of the given radius around a node, over the named
 * layers (null = all layers), plus the edges induced among the collected
 * nodes.
 */
export async function egoNetwork(
  engine: Engine,
  net: string,
  node: number,
  layers: string[] | null,
  radius: number,
): Promise<EgoNetworkResult> {
  if (!Number.isInteger(radius) || radius < 0) {
    throw new RangeError(`radius must be a non-negative integer, got ${radius}`);
  }
  const dist = new Map<number, number>([[node, 0]]);
  const alters = new Map<number, number[]>();
  let frontier = [node];
  for (let r = 0; r < radius && frontier.length > 0; r++) {
    const next: number[] = [];
    for (const v of frontier) {
      const found = await fetchAlters(engine, net, v, layers);
      alters.set(v, found);
      for (const w of found) {
        if (!dist.has(w)) {
          dist.set(w, r + 1);
          next.push(w);
        }
      }
    }
    frontier = next;
  }
  // boundary nodes were discovered but never expanded; their alters are
  // still needed for edges between two boundary nodes
  for (const v of dist.keys()) {
    if (!alters.has(v)) alters.set(v, await fetchAlters(engine, net, v, layers));
  }

  const edges: Array<[number, number]> = [];
  const seen = new Set<string>();
  for (const [v, found] of alters) {
    for (const w of found) {
      if (!dist.has(w)) continue;
      const a = Math.min(v, w);
      const b = Math.max(v, w);
      const key = `${a},${b}`;
      if (!seen.has(key)) {
        seen.add(key);
        edges.push([a, b]);
      }
    }
  }
  edges.sort((p, q) => p[0] - q[0] || p[1] - q[1]);
  return { nodes: [...dist.keys()].sort((a, b) => a - b), edges };
}

/** Small deterministic PRNG (mulberry32); good enough for walk sampling. */
export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/**
 * Uniform random walk: each step fetches the current node's alters from
 * the engine and moves to one chosen uniformly at random. Stops early at a
 * node with no alters. Returns the visited sequence, starting node first.
 */
export async function randomWalk(
  engine: Engine,
  net: string,
  start: number,
  layers: string[] | null,
  steps: number,
  seed: number,
): Promise<number[]> {
  if (!Number.isInteger(steps) || steps < 0) {
    throw new RangeError(`steps must be a non-negative integer, got ${steps}`);
  }
  const rand = mulberry32(seed);
  const path = [start];
  let current = start;
  for (let i = 0; i < steps; i++) {
    const found = await fetchAlters(engine, net, current, layers);
    if (found.length === 0) break;
    // the engine sorts alters, but the draw must not depend on that detail
    const sorted = [...found].sort((a, b) => a - b);
    current = sorted[Math.floor(rand() * sorted.length)]!;
    path.push(current);
  }
  return path;
}
