/**
 * Backend-independent plot construction.
 *
 * Complex-valued curves each get their own Argand-Wessel panel (re, im drawn
 * parametrically with equal axis scaling); real-valued curves share a single
 * comparison panel drawn against r.  Markers attach to their curve's panel at
 * the grid point nearest the requested radius.
 */

import { CurveData, Manifest, Marker, nearestIndex } from "./data.js";

export interface Polyline {
  points: [number, number][];
  color: string;
  width: number;
}

export interface Circle {
  x: number;
  y: number;
  radius: number;
  fill: boolean;
  color: string;
}

export interface Label {
  x: number;
  y: number;
  text: string;
  size: number;
  color: string;
}

export interface Rect {
  x: number;
  y: number;
  w: number;
  h: number;
  stroke: string;
}

export interface Scene {
  width: number;
  height: number;
  polylines: Polyline[];
  circles: Circle[];
  labels: Label[];
  rects: Rect[];
}

const PANEL = 420;
const MARGIN = 40;
const GAP = 30;
const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];

interface PanelPlan {
  kind: "argand" | "comparison";
  curves: CurveData[];
  title: string;
}

function isReal(curve: CurveData): boolean {
  let maxIm = 0;
  let maxAbs = 0;
  for (let i = 0; i < curve.im.length; i++) {
    maxIm = Math.max(maxIm, Math.abs(curve.im[i]));
    maxAbs = Math.max(maxAbs, Math.abs(curve.re[i]), Math.abs(curve.im[i]));
  }
  return maxIm <= 1e-12 * Math.max(maxAbs, 1e-300);
}

function planPanels(curves: CurveData[]): PanelPlan[] {
  const panels: PanelPlan[] = [];
  const realCurves: CurveData[] = [];
  for (const c of curves) {
    if (isReal(c)) {
      realCurves.push(c);
    } else {
      panels.push({ kind: "argand", curves: [c], title: c.label });
    }
  }
  if (realCurves.length > 0) {
    panels.push({
      kind: "comparison",
      curves: realCurves,
      title: realCurves.map((c) => c.label).join(", "),
    });
  }
  return panels;
}

function quantile(sorted: number[], q: number): number {
  const pos = q * (sorted.length - 1);
  const lo = Math.floor(pos);
  const hi = Math.ceil(pos);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo);
}

/**
 * Robust view window: the potentials diverge near the origin, so plain
 * min/max would collapse the interesting structure into a sliver.  The 5-95%
 * quantile window widened 1.6x keeps the loop shapes while clipping spikes.
 */
function robustRange(values: number[]): [number, number] {
  const finite = values.filter((v) => Number.isFinite(v)).sort((a, b) => a - b);
  if (finite.length === 0) return [-1, 1];
  let lo = quantile(finite, 0.05);
  let hi = quantile(finite, 0.95);
  if (hi - lo <= 0) {
    lo -= 1;
    hi += 1;
  }
  const mid = 0.5 * (lo + hi);
  const half = 0.8 * (hi - lo);
  return [mid - half, mid + half];
}

interface Transform {
  toX(v: number): number;
  toY(v: number): number;
}

function makeTransform(
  x0: number,
  y0: number,
  xRange: [number, number],
  yRange: [number, number],
  equalAspect: boolean,
): Transform {
  let [xa, xb] = xRange;
  let [ya, yb] = yRange;
  if (equalAspect) {
    // widen the smaller span so one unit measures the same in x and y
    const span = Math.max(xb - xa, yb - ya);
    const xc = 0.5 * (xa + xb);
    const yc = 0.5 * (ya + yb);
    xa = xc - span / 2;
    xb = xc + span / 2;
    ya = yc - span / 2;
    yb = yc + span / 2;
  }
  const sx = PANEL / (xb - xa);
  const sy = PANEL / (yb - ya);
  return {
    toX: (v) => x0 + (v - xa) * sx,
    toY: (v) => y0 + PANEL - (v - ya) * sy, // y grows upward
  };
}

function clampToPanel(p: [number, number], x0: number, y0: number): [number, number] {
  return [
    Math.min(Math.max(p[0], x0), x0 + PANEL),
    Math.min(Math.max(p[1], y0), y0 + PANEL),
  ];
}

export function buildScene(manifest: Manifest, curves: CurveData[]): Scene {
  const panels = planPanels(curves);
  const width = MARGIN * 2 + panels.length * PANEL + (panels.length - 1) * GAP;
  const height = MARGIN * 2 + PANEL + 30;
  const scene: Scene = { width, height, polylines: [], circles: [], labels: [], rects: [] };
  const markers = manifest.markers ?? [];

  panels.forEach((panel, idx) => {
    const x0 = MARGIN + idx * (PANEL + GAP);
    const y0 = MARGIN;
    scene.rects.push({ x: x0, y: y0, w: PANEL, h: PANEL, stroke: "#888888" });
    scene.labels.push({
      x: x0 + PANEL / 2,
      y: y0 + PANEL + 22,
      text: panel.kind === "argand" ? `${panel.title} (Argand-Wessel)` : `${panel.title} vs r`,
      size: 13,
      color: "#222222",
    });

    let tf: Transform;
    if (panel.kind === "argand") {
      const c = panel.curves[0];
      tf = makeTransform(x0, y0, robustRange(c.re), robustRange(c.im), true);
    } else {
      const rAll = panel.curves.flatMap((c) => c.r);
      const vAll = panel.curves.flatMap((c) => c.re);
      tf = makeTransform(x0, y0, [Math.min(...rAll), Math.max(...rAll)], robustRange(vAll), false);
    }

    panel.curves.forEach((c, ci) => {
      const pts: [number, number][] = [];
      for (let i = 0; i < c.r.length; i++) {
        const px = panel.kind === "argand" ? tf.toX(c.re[i]) : tf.toX(c.r[i]);
        const py = panel.kind === "argand" ? tf.toY(c.im[i]) : tf.toY(c.re[i]);
        pts.push(clampToPanel([px, py], x0, y0));
      }
      scene.polylines.push({ points: pts, color: PALETTE[ci % PALETTE.length], width: 1.5 });

      for (const m of markers) {
        if ((m.curve ?? curves[0].label) !== c.label) continue;
        const i = nearestIndex(c.r, m.r);
        const [mx, my] = clampToPanel(
          panel.kind === "argand"
            ? [tf.toX(c.re[i]), tf.toY(c.im[i])]
            : [tf.toX(c.r[i]), tf.toY(c.re[i])],
          x0,
          y0,
        );
        scene.circles.push({
          x: mx,
          y: my,
          radius: m.glyph === "disk" ? 4.5 : 6,
          fill: m.glyph === "disk",
          color: "#000000",
        });
      }
    });
  });
  return scene;
}

export function placedMarkers(curves: CurveData[], markers: Marker[]) {
  // exposed for tests: which sample each marker snaps to
  return markers.map((m) => {
    const curve = curves.find((c) => c.label === (m.curve ?? curves[0].label));
    if (!curve) throw new Error(`marker references unknown curve ${JSON.stringify(m.curve)}`);
    const idx = nearestIndex(curve.r, m.r);
    return { marker: m, curve: curve.label, index: idx, r: curve.r[idx] };
  });
}
