// Small force-directed layout for the board. Cosmetic only: vertex ids
// and labels come from the server, geometry is invented here. Seeded,
// so a given board always lands in the same arrangement.

import type { Face } from "./api.js";

export interface Point {
  x: number;
  y: number;
}

// mulberry32: tiny deterministic PRNG, good enough for jitter
function makeRng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface LayoutOptions {
  width?: number;
  height?: number;
  iterations?: number;
  seed?: number;
}

export function forceLayout(
  vertexCount: number,
  edges: Face[],
  opts: LayoutOptions = {},
): Point[] {
  const width = opts.width ?? 640;
  const height = opts.height ?? 480;
  const iterations = opts.iterations ?? 200;
  const rng = makeRng(opts.seed ?? 42);

  // start on a circle with a little jitter so symmetric graphs do not
  // collapse onto degenerate axes
  const pos: Point[] = [];
  const radius = Math.min(width, height) * 0.35;
  for (let i = 0; i < vertexCount; i++) {
    const angle = (2 * Math.PI * i) / Math.max(vertexCount, 1);
    pos.push({
      x: width / 2 + radius * Math.cos(angle) + (rng() - 0.5) * 10,
      y: height / 2 + radius * Math.sin(angle) + (rng() - 0.5) * 10,
    });
  }
  if (vertexCount <= 1) return pos;

  const springLength = radius * (1.5 / Math.sqrt(vertexCount));
  const fx = new Array<number>(vertexCount);
  const fy = new Array<number>(vertexCount);

  for (let iter = 0; iter < iterations; iter++) {
    fx.fill(0);
    fy.fill(0);
    const temperature = 1 - iter / iterations;

    // pairwise repulsion
    for (let i = 0; i < vertexCount; i++) {
      for (let j = i + 1; j < vertexCount; j++) {
        const dx = pos[j]!.x - pos[i]!.x;
        const dy = pos[j]!.y - pos[i]!.y;
        const d2 = dx * dx + dy * dy || 0.01;
        const d = Math.sqrt(d2);
        const force = (springLength * springLength) / d2;
        fx[i]! -= (dx / d) * force * 40;
        fy[i]! -= (dy / d) * force * 40;
        fx[j]! += (dx / d) * force * 40;
        fy[j]! += (dy / d) * force * 40;
      }
    }

    // springs along edges
    for (const e of edges) {
      const [u, v] = [e[0]!, e[1]!];
      const dx = pos[v]!.x - pos[u]!.x;
      const dy = pos[v]!.y - pos[u]!.y;
      const d = Math.sqrt(dx * dx + dy * dy) || 0.1;
      const force = (d - springLength) * 0.08;
      fx[u]! += (dx / d) * force * springLength;
      fy[u]! += (dy / d) * force * springLength;
      fx[v]! -= (dx / d) * force * springLength;
      fy[v]! -= (dy / d) * force * springLength;
    }

    // gentle pull to the center keeps disconnected pieces on screen
    for (let i = 0; i < vertexCount; i++) {
      fx[i]! += (width / 2 - pos[i]!.x) * 0.005;
      fy[i]! += (height / 2 - pos[i]!.y) * 0.005;
      const step = Math.min(12 * temperature + 1, Math.hypot(fx[i]!, fy[i]!));
      const norm = Math.hypot(fx[i]!, fy[i]!) || 1;
      pos[i]!.x += (fx[i]! / norm) * step;
      pos[i]!.y += (fy[i]! / norm) * step;
    }
  }

  // clamp into the viewport with a margin
  const margin = 24;
  for (const p of pos) {
    p.x = Math.max(margin, Math.min(width - margin, p.x));
    p.y = Math.max(margin, Math.min(height - margin, p.y));
  }
  return pos;
}

export function centroid(points: Point[]): Point {
  const sum = points.reduce(
    (acc, p) => ({ x: acc.x + p.x, y: acc.y + p.y }),
    { x: 0, y: 0 },
  );
  return { x: sum.x / points.length, y: sum.y / points.length };
}

// vertices of a face ordered by angle around its centroid, for hulls
export function hullOrder(face: number[], pos: Point[]): number[] {
  const c = centroid(face.map((v) => pos[v]!));
  return [...face].sort((a, b) => {
    const aa = Math.atan2(pos[a]!.y - c.y, pos[a]!.x - c.x);
    const bb = Math.atan2(pos[b]!.y - c.y, pos[b]!.x - c.x);
    return aa - bb;
  });
}
