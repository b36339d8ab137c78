/** SVG backend: the scene maps 1:1 onto vector primitives. */

import { Scene } from "./scene.js";

function fmt(v: number): string {
  return Number(v.toFixed(2)).toString();
}

export function sceneToSvg(scene: Scene): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${scene.width}" height="${scene.height}" ` +
      `viewBox="0 0 ${scene.width} ${scene.height}">`,
  );
  parts.push(`<rect width="${scene.width}" height="${scene.height}" fill="#ffffff"/>`);
  for (const r of scene.rects) {
    parts.push(
      `<rect x="${r.x}" y="${r.y}" width="${r.w}" height="${r.h}" fill="none" ` +
        `stroke="${r.stroke}" stroke-width="1"/>`,
    );
  }
  for (const pl of scene.polylines) {
    const d = pl.points.map((p, i) => `${i === 0 ? "M" : "L"}${fmt(p[0])} ${fmt(p[1])}`).join("");
    parts.push(
      `<path d="${d}" fill="none" stroke="${pl.color}" stroke-width="${pl.width}"/>`,
    );
  }
  for (const c of scene.circles) {
    const paint = c.fill
      ? `fill="${c.color}"`
      : `fill="none" stroke="${c.color}" stroke-width="1.5"`;
    parts.push(`<circle cx="${fmt(c.x)}" cy="${fmt(c.y)}" r="${c.radius}" ${paint}/>`);
  }
  for (const t of scene.labels) {
    parts.push(
      `<text x="${fmt(t.x)}" y="${fmt(t.y)}" font-size="${t.size}" fill="${t.color}" ` +
        `text-anchor="middle" font-family="sans-serif">${t.text}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
