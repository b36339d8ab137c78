/**
 * Dataset loading: figure manifests and the r,re,im CSV curve format
 * written by the gamowsusy CLI.
 */

import fs from "node:fs";
import path from "node:path";

export interface CurveData {
  label: string;
  file: string;
  r: number[];
  re: number[];
  im: number[];
}

export type Glyph = "disk" | "circle";

export interface Marker {
  r: number;
  glyph: Glyph;
  curve?: string;
}

export interface Manifest {
  params: Record<string, unknown>;
  curves: { file: string; label: string }[];
  markers: Marker[];
}

export class ParseError extends Error {
  constructor(
    message: string,
    public file: string,
    public line?: number,
  ) {
    super(line === undefined ? `${file}: ${message}` : `${file}:${line}: ${message}`);
  }
}

export function parseCsv(text: string, file: string): { r: number[]; re: number[]; im: number[] } {
  const lines = text.split("\n");
  if (lines.length > 0 && lines[lines.length - 1] === "") lines.pop();
  if (lines.length === 0 || lines[0].trim() !== "r,re,im") {
    throw new ParseError(`expected header "r,re,im", got ${JSON.stringify(lines[0] ?? "")}`, file, 1);
  }
  const r: number[] = [];
  const re: number[] = [];
  const im: number[] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== 3) {
      throw new ParseError(`expected 3 columns, got ${cells.length}`, file, i + 1);
    }
    const nums = cells.map(Number);
    if (nums.some((v) => Number.isNaN(v))) {
      throw new ParseError(`non-numeric value in ${JSON.stringify(lines[i])}`, file, i + 1);
    }
    r.push(nums[0]);
    re.push(nums[1]);
    im.push(nums[2]);
  }
  if (r.length < 2) {
    throw new ParseError("curve needs at least two samples", file);
  }
  return { r, re, im };
}

export function loadManifest(manifestPath: string): { manifest: Manifest; curves: CurveData[] } {
  let raw: string;
  try {
    raw = fs.readFileSync(manifestPath, "utf8");
  } catch (err) {
    throw new ParseError(`cannot read manifest: ${(err as Error).message}`, manifestPath);
  }
  let manifest: Manifest;
  try {
    manifest = JSON.parse(raw) as Manifest;
  } catch (err) {
    throw new ParseError(`invalid JSON: ${(err as Error).message}`, manifestPath);
  }
  if (!Array.isArray(manifest.curves) || manifest.curves.length === 0) {
    throw new ParseError("manifest lists no curves", manifestPath);
  }
  const dir = path.dirname(manifestPath);
  const curves: CurveData[] = manifest.curves.map((entry) => {
    const csvPath = path.join(dir, entry.file);
    let text: string;
    try {
      text = fs.readFileSync(csvPath, "utf8");
    } catch (err) {
      throw new ParseError(`missing curve file: ${(err as Error).message}`, csvPath);
    }
    return { label: entry.label, file: entry.file, ...parseCsv(text, csvPath) };
  });
  manifest.markers = manifest.markers ?? [];
  for (const m of manifest.markers) {
    if (m.glyph !== "disk" && m.glyph !== "circle") {
      throw new ParseError(`unknown glyph ${JSON.stringify(m.glyph)}`, manifestPath);
    }
  }
  return { manifest, curves };
}

/** Index of the grid point closest to the requested radius. */
export function nearestIndex(r: number[], target: number): number {
  let best = 0;
  let dist = Math.abs(r[0] - target);
  for (let i = 1; i < r.length; i++) {
    const d = Math.abs(r[i] - target);
    if (d < dist) {
      dist = d;
      best = i;
    }
  }
  return best;
}
