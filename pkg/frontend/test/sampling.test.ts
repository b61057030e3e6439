import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Engine, egoNetwork, mulberry32, randomWalk, ref } from "../src/index.js";
import { connectEngine } from "./helpers.js";

type Adjacency = Map<number, Set<number>>;

function addPair(adj: Adjacency, a: number, b: number): void {
  if (!adj.has(a)) adj.set(a, new Set());
  if (!adj.has(b)) adj.set(b, new Set());
  adj.get(a)!.add(b);
  adj.get(b)!.add(a);
}

/** BFS ball of the given radius plus the edges induced among its nodes. */
function oracleBall(adj: Adjacency, start: number, radius: number) {
  const dist = new Map<number, number>([[start, 0]]);
  let frontier = [start];
  for (let r = 0; r < radius && frontier.length > 0; r++) {
    const next: number[] = [];
    for (const v of frontier) {
      for (const w of adj.get(v) ?? []) {
        if (!dist.has(w)) {
          dist.set(w, r + 1);
          next.push(w);
        }
      }
    }
    frontier = next;
  }
  const nodes = [...dist.keys()].sort((a, b) => a - b);
  const edges: Array<[number, number]> = [];
  for (const a of nodes) {
    for (const b of adj.get(a) ?? []) {
      if (a <= b && dist.has(b)) edges.push([a, b]);
    }
  }
  edges.sort((p, q) => p[0] - q[0] || p[1] - q[1]);
  return { nodes, edges };
}

describe("ego networks and random walks", () => {
  let engine: Engine;
  // oracle adjacency per layer selection, built alongside the fixture
  const tiesAdj: Adjacency = new Map();
  const clubsAdj: Adjacency = new Map();
  const allAdj: Adjacency = new Map();

  beforeAll(async () => {
    engine = await connectEngine();
    await engine.assign("ns", "createnodeset", { createnodes: 100 });
    await engine.assign("fix", "createnetwork", { nodeset: ref("ns") });
    await engine.call("addlayer", ref("fix"), "ties", { mode: 1 });
    await engine.call("addlayer", ref("fix"), "follows", { mode: 1, directed: true });
    await engine.call("addlayer", ref("fix"), "clubs", { mode: 2 });

    const rand = mulberry32(7);
    const draw = (n: number) => Math.floor(rand() * n);

    for (let i = 0; i < 180; i++) {
      const a = draw(100);
      const b = draw(100);
      if (a === b) continue;
      await engine.call("addedge", ref("fix"), "ties", a, b);
      addPair(tiesAdj, a, b);
      addPair(allAdj, a, b);
    }
    for (let i = 0; i < 120; i++) {
      const a = draw(100);
      const b = draw(100);
      if (a === b) continue;
      await engine.call("addedge", ref("fix"), "follows", a, b);
      // alters use both directions, so the oracle is undirected
      addPair(allAdj, a, b);
    }
    for (let c = 0; c < 12; c++) {
      const size = 3 + draw(8);
      const members = new Set<number>();
      while (members.size < size) members.add(draw(100));
      const list = [...members];
      await engine.call("addhyperedge", ref("fix"), "clubs", `club${c}`, {
        members: list,
      });
      for (let i = 0; i < list.length; i++) {
        for (let j = i + 1; j < list.length; j++) {
          addPair(clubsAdj, list[i]!, list[j]!);
          addPair(allAdj, list[i]!, list[j]!);
        }
      }
    }
  });

  afterAll(async () => {
    await engine.close();
  });

  it("radius 0 is just the focal node", async () => {
    const ego = await egoNetwork(engine, "fix", 42, null, 0);
    expect(ego).toEqual({ nodes: [42], edges: [] });
  });

  it("radius 1 is the alters plus induced edges", async () => {
    const direct = (await engine.call("getnodealters", ref("fix"), 17)) as number[];
    const ego = await egoNetwork(engine, "fix", 17, null, 1);
    expect(ego.nodes).toEqual([17, ...direct].sort((a, b) => a - b));
    expect(ego).toEqual(oracleBall(allAdj, 17, 1));
  });

  it("radius 2 matches the oracle ball on the fixture", async () => {
    for (const start of [0, 17, 42, 77]) {
      const ego = await egoNetwork(engine, "fix", start, null, 2);
      expect(ego).toEqual(oracleBall(allAdj, start, 2));
    }
  });

  it("restricting layers restricts the ball", async () => {
    for (const start of [5, 42]) {
      expect(await egoNetwork(engine, "fix", start, ["ties"], 2)).toEqual(
        oracleBall(tiesAdj, start, 2),
      );
      expect(await egoNetwork(engine, "fix", start, ["clubs"], 2)).toEqual(
        oracleBall(clubsAdj, start, 2),
      );
    }
  });

  it("rejects a bad radius", async () => {
    await expect(egoNetwork(engine, "fix", 0, null, -1)).rejects.toBeInstanceOf(RangeError);
    await expect(egoNetwork(engine, "fix", 0, null, 1.5)).rejects.toBeInstanceOf(RangeError);
  });

  it("walks stay on edges and are seed-deterministic", async () => {
    const walk = await randomWalk(engine, "fix", 17, null, 500, 1234);
    expect(walk.length).toBeGreaterThan(1);
    for (let i = 1; i < walk.length; i++) {
      expect(allAdj.get(walk[i - 1]!)!.has(walk[i]!)).toBe(true);
    }
    const again = await randomWalk(engine, "fix", 17, null, 500, 1234);
    expect(again).toEqual(walk);
    const other = await randomWalk(engine, "fix", 17, null, 500, 4321);
    expect(other).not.toEqual(walk);
  });

  it("zero steps or an isolated start end immediately", async () => {
    expect(await randomWalk(engine, "fix", 31, null, 0, 1)).toEqual([31]);
    await engine.assign("tiny", "createnetwork", { nodeset: ref("ns") });
    await engine.call("addlayer", ref("tiny"), "t", { mode: 1 });
    await engine.call("addedge", ref("tiny"), "t", 0, 1);
    expect(await randomWalk(engine, "tiny", 99, null, 50, 1)).toEqual([99]);
  });

  it("visits a 4-regular ring uniformly over 100,000 steps", async () => {
    const n = 20;
    await engine.assign("rns", "createnodeset", { createnodes: n });
    await engine.assign("ring", "createnetwork", { nodeset: ref("rns") });
    await engine.call("addlayer", ref("ring"), "r", { mode: 1 });
    for (let i = 0; i < n; i++) {
      for (const d of [1, 2]) {
        await engine.call("addedge", ref("ring"), "r", i, (i + d) % n);
      }
    }

    const steps = 100_000;
    const walk = await randomWalk(engine, "ring", 0, null, steps, 99);
    expect(walk).toHaveLength(steps + 1);
    const counts = new Array<number>(n).fill(0);
    for (const v of walk.slice(1)) counts[v]! += 1;

    // The walk's successive visits are correlated, so the tolerance uses
    // the Markov-chain asymptotic variance of the per-node visit count:
    //   sigma^2 = pi(1-pi) + 2 * sum_k pi * (P^k(0,0) - pi)
    // computed from the transition matrix (circulant, so row 0 suffices).
    const pi = 1 / n;
    let v = new Array<number>(n).fill(0);
    v[0] = 1;
    let sigma2 = pi * (1 - pi);
    for (let k = 1; k <= 500; k++) {
      const next = new Array<number>(n).fill(0);
      for (let j = 0; j < n; j++) {
        next[j] =
          (v[(j + 1) % n]! + v[(j + n - 1) % n]! + v[(j + 2) % n]! + v[(j + n - 2) % n]!) / 4;
      }
      v = next;
      sigma2 += 2 * pi * (v[0]! - pi);
    }
    const bound = 5 * Math.sqrt(steps * sigma2);
    for (let node = 0; node < n; node++) {
      expect(Math.abs(counts[node]! - steps * pi)).toBeLessThan(bound);
    }
  });
});
