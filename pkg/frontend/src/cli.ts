#!/usr/bin/env node
/** Usage: gamowsusy-render render <manifest.json> <out.(png|svg)> */

import { ParseError } from "./data.js";
import { render } from "./render.js";

function main(argv: string[]): number {
  const args = argv.slice(2);
  if (args.length !== 3 || args[0] !== "render") {
    console.error("usage: render <manifest.json> <out.(png|svg)>");
    return 2;
  }
  try {
    render(args[1], args[2]);
  } catch (err) {
    if (err instanceof ParseError) {
      console.error(err.message);
      return 1;
    }
    console.error((err as Error).message);
    return 1;
  }
  return 0;
}

process.exit(main(process.argv));
