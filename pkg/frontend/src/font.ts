/**
 * Minimal 5x7 bitmap font (uppercase, digits, plot punctuation) for axis
 * labels and legends.  Glyphs are written as 7 rows of 5 cells so shapes
 * stay reviewable; they compile to row bitmasks once at import.
 */

export const GLYPH_WIDTH = 5;
export const GLYPH_HEIGHT = 7;

const SHAPES: Record<string, string[]> = {
  " ": ["     ", "     ", "     ", "     ", "     ", "     ", "     "],
  "A": [" XXX ", "X   X", "X   X", "XXXXX", "X   X", "X   X", "X   X"],
  "B": ["XXXX ", "X   X", "X   X", "XXXX ", "X   X", "X   X", "XXXX "],
  "C": [" XXX ", "X   X", "X    ", "X    ", "X    ", "X   X", " XXX "],
  "D": ["XXXX ", "X   X", "X   X", "X   X", "X   X", "X   X", "XXXX "],
  "E": ["XXXXX", "X    ", "X    ", "XXXX ", "X    ", "X    ", "XXXXX"],
  "F": ["XXXXX", "X    ", "X    ", "XXXX ", "X    ", "X    ", "X    "],
  "G": [" XXX ", "X   X", "X    ", "X XXX", "X   X", "X   X", " XXX "],
  "H": ["X   X", "X   X", "X   X", "XXXXX", "X   X", "X   X", "X   X"],
  "I": [" XXX ", "  X  ", "  X  ", "  X  ", "  X  ", "  X  ", " XXX "],
  "J": ["  XXX", "   X ", "   X ", "   X ", "   X ", "X  X ", " XX  "],
  "K": ["X   X", "X  X ", "X X  ", "XX   ", "X X  ", "X  X ", "X   X"],
  "L": ["X    ", "X    ", "X    ", "X    ", "X    ", "X    ", "XXXXX"],
  "M": ["X   X", "XX XX", "X X X", "X X X", "X   X", "X   X", "X   X"],
  "N": ["X   X", "XX  X", "X X X", "X  XX", "X   X", "X   X", "X   X"],
  "O": [" XXX ", "X   X", "X   X", "X   X", "X   X", "X   X", " XXX "],
  "P": ["XXXX ", "X   X", "X   X", "XXXX ", "X    ", "X    ", "X    "],
  "Q": [" XXX ", "X   X", "X   X", "X   X", "X X X", "X  X ", " XX X"],
  "R": ["XXXX ", "X   X", "X   X", "XXXX ", "X X  ", "X  X ", "X   X"],
  "S": [" XXXX", "X    ", "X    ", " XXX ", "    X", "    X", "XXXX "],
  "T": ["XXXXX", "  X  ", "  X  ", "  X  ", "  X  ", "  X  ", "  X  "],
  "U": ["X   X", "X   X", "X   X", "X   X", "X   X", "X   X", " XXX "],
  "V": ["X   X", "X   X", "X   X", "X   X", "X   X", " X X ", "  X  "],
  "W": ["X   X", "X   X", "X   X", "X X X", "X X X", "XX XX", "X   X"],
  "X": ["X   X", "X   X", " X X ", "  X  ", " X X ", "X   X", "X   X"],
  "Y": ["X   X", "X   X", " X X ", "  X  ", "  X  ", "  X  ", "  X  "],
  "Z": ["XXXXX", "    X", "   X ", "  X  ", " X   ", "X    ", "XXXXX"],
  "0": [" XXX ", "X   X", "X  XX", "X X X", "XX  X", "X   X", " XXX "],
  "1": ["  X  ", " XX  ", "  X  ", "  X  ", "  X  ", "  X  ", " XXX "],
  "2": [" XXX ", "X   X", "    X", "   X ", "  X  ", " X   ", "XXXXX"],
  "3": ["XXXXX", "   X ", "  X  ", "   X ", "    X", "X   X", " XXX "],
  "4": ["   X ", "  XX ", " X X ", "X  X ", "XXXXX", "   X ", "   X "],
  "5": ["XXXXX", "X    ", "XXXX ", "    X", "    X", "X   X", " XXX "],
  "6": ["  XX ", " X   ", "X    ", "XXXX ", "X   X", "X   X", " XXX "],
  "7": ["XXXXX", "    X", "   X ", "  X  ", " X   ", " X   ", " X   "],
  "8": [" XXX ", "X   X", "X   X", " XXX ", "X   X", "X   X", " XXX "],
  "9": [" XXX ", "X   X", "X   X", " XXXX", "    X", "   X ", " XX  "],
  ".": ["     ", "     ", "     ", "     ", "     ", " XX  ", " XX  "],
  ",": ["     ", "     ", "     ", "     ", " XX  ", "  X  ", " X   "],
  "-": ["     ", "     ", "     ", "XXXXX", "     ", "     ", "     "],
  "+": ["     ", "  X  ", "  X  ", "XXXXX", "  X  ", "  X  ", "     "],
  "(": ["   X ", "  X  ", " X   ", " X   ", " X   ", "  X  ", "   X "],
  ")": [" X   ", "  X  ", "   X ", "   X ", "   X ", "  X  ", " X   "],
  "=": ["     ", "     ", "XXXXX", "     ", "XXXXX", "     ", "     "],
  "/": ["    X", "    X", "   X ", "  X  ", " X   ", "X    ", "X    "],
  ">": ["X    ", " X   ", "  X  ", "   X ", "  X  ", " X   ", "X    "],
  "<": ["    X", "   X ", "  X  ", " X   ", "  X  ", "   X ", "    X"],
  "_": ["     ", "     ", "     ", "     ", "     ", "     ", "XXXXX"],
};

const BITMAPS = new Map<string, number[]>();
for (const [ch, rows] of Object.entries(SHAPES)) {
  BITMAPS.set(
    ch,
    rows.map((row) =>
      row
        .split("")
        .reduce((bits, cell, i) => (cell === " " ? bits : bits | (1 << (GLYPH_WIDTH - 1 - i))), 0),
    ),
  );
}

/** Row bitmasks (7 rows, bit 4 = leftmost) for one character; unknown
 * characters fall back to the glyph box of '_'. */
export function glyph(ch: string): number[] {
  return BITMAPS.get(ch.toUpperCase()) ?? BITMAPS.get("_")!;
}
