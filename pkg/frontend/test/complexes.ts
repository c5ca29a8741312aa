// Board definitions used by the mock server: the two instances the
// reconciliation tests play on, built the same way the backend builds
// them (vertices labelled, faces as sorted id lists).

import type { Face } from "../src/api.js";

export interface BoardDef {
  spec: string;
  vertices: string[];
  faces: Face[];
  nim: number;
  provenance: string;
}

function pairs(n: number): number[][] {
  const out: number[][] = [];
  for (let j = 1; j <= n; j++) {
    for (let i = 1; i < j; i++) {
      out.push([i, j]);
    }
  }
  return out;
}

// kneser:5,2,0 is the Petersen graph: vertices are the 2-subsets of
// {1..5}, adjacent when disjoint
export function petersen(): BoardDef {
  const subsets = pairs(5);
  const vertices = subsets.map((s) => `{${s.join(",")}}`);
  const faces: Face[] = vertices.map((_, i) => [i]);
  for (let i = 0; i < subsets.length; i++) {
    for (let j = i + 1; j < subsets.length; j++) {
      const overlap = subsets[i]!.filter((v) => subsets[j]!.includes(v));
      if (overlap.length === 0) faces.push([i, j]);
    }
  }
  return {
    spec: "kneser:5,2,0",
    vertices,
    faces,
    nim: 2,
    provenance: "kneser-product-formula",
  };
}

// skeleton(s=3):complete:4 is the clique 3-skeleton of K_4: every
// nonempty subset of its four vertices up to size three
export function cliqueSkeletonK4(): BoardDef {
  const vertices = ["1", "2", "3", "4"];
  const faces: Face[] = [];
  for (let mask = 1; mask < 16; mask++) {
    const face: number[] = [];
    for (let v = 0; v < 4; v++) {
      if (mask & (1 << v)) face.push(v);
    }
    if (face.length <= 3) faces.push(face);
  }
  faces.sort((a, b) => a.length - b.length || a.join().localeCompare(b.join()));
  return {
    spec: "skeleton(s=3):complete:4",
    vertices,
    faces,
    nim: 0,
    provenance: "skeleton-engine",
  };
}

export const BOARDS: BoardDef[] = [petersen(), cliqueSkeletonK4()];
