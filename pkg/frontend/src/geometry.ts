// Pure board geometry: primal edge ids to line segments, faces to label
// anchors. The wire format carries topology; pixels are computed here
// from the spec alone.

import type { SpecWire } from "./wire.js";

export interface Segment {
  edge: string;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface FaceAnchor {
  face: number;
  x: number;
  y: number;
}

export interface Dot {
  x: number;
  y: number;
}

const CELL = 80;
export const MARGIN = 20;

export function boardSize(spec: SpecWire): { width: number; height: number } {
  return {
    width: spec.n * CELL + 2 * MARGIN,
    height: CELL + 2 * MARGIN,
  };
}

export function dots(spec: SpecWire): Dot[] {
  const out: Dot[] = [];
  if (spec.game === "boxes") {
    for (let j = 0; j <= spec.n; j++) {
      out.push({ x: MARGIN + j * CELL, y: MARGIN });
      out.push({ x: MARGIN + j * CELL, y: MARGIN + CELL });
    }
  } else {
    for (let j = 0; j <= spec.n; j++) {
      out.push({ x: MARGIN + j * CELL, y: MARGIN + CELL });
    }
    for (let i = 0; i < spec.n; i++) {
      out.push({ x: MARGIN + i * CELL + CELL / 2, y: MARGIN });
    }
  }
  return out;
}

export function edgeSegments(spec: SpecWire): Segment[] {
  const segs: Segment[] = [];
  const m = MARGIN;
  const n = spec.n;
  if (spec.game === "boxes") {
    for (let i = 0; i < n; i++) {
      segs.push({ edge: `top:${i}`, x1: m + i * CELL, y1: m, x2: m + (i + 1) * CELL, y2: m });
      segs.push({ edge: `bottom:${i}`, x1: m + i * CELL, y1: m + CELL, x2: m + (i + 1) * CELL, y2: m + CELL });
    }
    for (let j = 0; j <= n; j++) {
      segs.push({ edge: `vert:${j}`, x1: m + j * CELL, y1: m, x2: m + j * CELL, y2: m + CELL });
    }
    return segs;
  }
  const top = (i: number): Dot => ({ x: m + i * CELL + CELL / 2, y: m });
  const bottom = (j: number): Dot => ({ x: m + j * CELL, y: m + CELL });
  for (let i = 0; i < n; i++) {
    segs.push({ edge: `base:${i}`, x1: bottom(i).x, y1: bottom(i).y, x2: bottom(i + 1).x, y2: bottom(i + 1).y });
  }
  for (let j = 0; j < n - 1; j++) {
    segs.push({ edge: `top:${j}`, x1: top(j).x, y1: top(j).y, x2: top(j + 1).x, y2: top(j + 1).y });
  }
  for (let s = 0; s < 2 * n - 2; s++) {
    const j = Math.floor(s / 2);
    const apex = s % 2 === 0 ? top(j) : top(j + 1);
    const foot = bottom(j + 1);
    segs.push({ edge: `slant:${s}`, x1: apex.x, y1: apex.y, x2: foot.x, y2: foot.y });
  }
  segs.push({ edge: "side:left", x1: bottom(0).x, y1: bottom(0).y, x2: top(0).x, y2: top(0).y });
  segs.push({ edge: "side:right", x1: bottom(n).x, y1: bottom(n).y, x2: top(n - 1).x, y2: top(n - 1).y });
  return segs;
}

export function faceAnchors(spec: SpecWire): FaceAnchor[] {
  const out: FaceAnchor[] = [];
  const m = MARGIN;
  if (spec.game === "boxes") {
    for (let i = 0; i < spec.n; i++) {
      out.push({ face: i, x: m + i * CELL + CELL / 2, y: m + CELL / 2 });
    }
    return out;
  }
  for (let face = 0; face < 2 * spec.n - 1; face++) {
    if (face % 2 === 0) {
      const i = face / 2;
      out.push({ face, x: m + i * CELL + CELL / 2, y: m + 0.7 * CELL });
    } else {
      const j = (face - 1) / 2;
      out.push({ face, x: m + (j + 1) * CELL, y: m + 0.3 * CELL });
    }
  }
  return out;
}
