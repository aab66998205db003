// Board model: the bar as stacked top-down layers, one per height level.
//
// The column at (u, w) is min(floor((u + w) / k), y) + 1 boxes tall, so
// layer L (0 = table level) shows exactly the cells whose column height
// exceeds L. Everything here derives from the (k, position) pair the
// service reported; the view never invents cells.

import type { PositionDto } from "./types.js";

export function slopeHeight(k: number, u: number, w: number): number {
  return Math.floor((u + w) / k);
}

export function columnHeight(k: number, pos: PositionDto, u: number, w: number): number {
  return Math.min(slopeHeight(k, u, w), pos.y) + 1;
}

export interface BoardCell {
  u: number;
  w: number;
  bitter: boolean;
}

export interface BoardLayer {
  level: number;
  cells: BoardCell[];
}

export function boardLayers(k: number, pos: PositionDto): BoardLayer[] {
  const layers: BoardLayer[] = [];
  for (let level = 0; level <= pos.y; level++) {
    const cells: BoardCell[] = [];
    for (let u = 0; u <= pos.x; u++) {
      for (let w = 0; w <= pos.z; w++) {
        if (columnHeight(k, pos, u, w) > level) {
          cells.push({ u, w, bitter: level === 0 && u === 0 && w === 0 });
        }
      }
    }
    layers.push({ level, cells });
  }
  return layers;
}

// Number of layers that contain (u, w); equals the column height as long as
// boardLayers is faithful. The play-through test checks this against the
// height formula for every visited position.
export function renderedHeight(layers: BoardLayer[], u: number, w: number): number {
  return layers.filter((layer) => layer.cells.some((c) => c.u === u && c.w === w)).length;
}
