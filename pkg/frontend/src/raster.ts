/**
 * Tiny RGB raster canvas: just enough drawing primitives for axis-and-line
 * plots (filled rectangles, Bresenham lines with thickness, bitmap text).
 * No native dependencies, fully deterministic.
 */

import { GLYPH_HEIGHT, GLYPH_WIDTH, glyph } from "./font.js";

export type Rgb = readonly [number, number, number];

export class Canvas {
  readonly width: number;
  readonly height: number;
  readonly pixels: Uint8Array; // RGB, row-major

  constructor(width: number, height: number, background: Rgb = [255, 255, 255]) {
    this.width = width;
    this.height = height;
    this.pixels = new Uint8Array(width * height * 3);
    this.fillRect(0, 0, width, height, background);
  }

  set(x: number, y: number, color: Rgb): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const at = (y * this.width + x) * 3;
    this.pixels[at] = color[0];
    this.pixels[at + 1] = color[1];
    this.pixels[at + 2] = color[2];
  }

  fillRect(x: number, y: number, w: number, h: number, color: Rgb): void {
    for (let j = y; j < y + h; j++) {
      for (let i = x; i < x + w; i++) {
        this.set(i, j, color);
      }
    }
  }

  /** Bresenham line; thickness grows the stroke as a square pen. */
  line(x0: number, y0: number, x1: number, y1: number, color: Rgb, thickness = 1): void {
    let x = Math.round(x0);
    let y = Math.round(y0);
    const xe = Math.round(x1);
    const ye = Math.round(y1);
    const dx = Math.abs(xe - x);
    const dy = -Math.abs(ye - y);
    const sx = x < xe ? 1 : -1;
    const sy = y < ye ? 1 : -1;
    let err = dx + dy;
    const pad = Math.max(0, thickness - 1);
    for (;;) {
      for (let oy = 0; oy <= pad; oy++) {
        for (let ox = 0; ox <= pad; ox++) {
          this.set(x + ox, y + oy, color);
        }
      }
      if (x === xe && y === ye) break;
      const doubled = 2 * err;
      if (doubled >= dy) {
        err += dy;
        x += sx;
      }
      if (doubled <= dx) {
        err += dx;
        y += sy;
      }
    }
  }

  /** Bitmap text, top-left anchored, upper-cased by the font. */
  text(x: number, y: number, content: string, color: Rgb, scale = 1): void {
    let cursor = x;
    for (const ch of content) {
      const rows = glyph(ch);
      for (let r = 0; r < GLYPH_HEIGHT; r++) {
        for (let c = 0; c < GLYPH_WIDTH; c++) {
          if (rows[r] & (1 << (GLYPH_WIDTH - 1 - c))) {
            this.fillRect(cursor + c * scale, y + r * scale, scale, scale, color);
          }
        }
      }
      cursor += (GLYPH_WIDTH + 1) * scale;
    }
  }

  static textWidth(content: string, scale = 1): number {
    return content.length * (GLYPH_WIDTH + 1) * scale - scale;
  }
}
