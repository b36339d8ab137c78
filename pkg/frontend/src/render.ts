/** Manifest -> image file orchestration. */

import fs from "node:fs";
import path from "node:path";

import { loadManifest } from "./data.js";
import { buildScene } from "./scene.js";
import { sceneToPng } from "./png.js";
import { sceneToSvg } from "./svg.js";

export function render(manifestPath: string, outPath: string): void {
  const ext = path.extname(outPath).toLowerCase();
  if (ext !== ".svg" && ext !== ".png") {
    throw new Error(`unsupported output format ${JSON.stringify(ext)}; use .svg or .png`);
  }
  const { manifest, curves } = loadManifest(manifestPath);
  const scene = buildScene(manifest, curves);
  if (ext === ".svg") {
    fs.writeFileSync(outPath, sceneToSvg(scene));
  } else {
    fs.writeFileSync(outPath, sceneToPng(scene));
  }
}
