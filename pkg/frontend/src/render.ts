import { readFileSync, writeFileSync } from "fs";

import { parseFigure1, parseSignmap } from "./schema";
import { renderFigure1 } from "./figure1";
import { renderSignmap } from "./signmap";

export interface FigureSpec {
    kind: "figure1" | "signmap";
    input: string;
    output: string;
    xLabel?: string;
    yLabel?: string;
    tSelect?: number[];
}

/** Read the CSV, render the figure, write the image.  The output file is
 * only written after rendering succeeded, so a schema error never leaves
 * an empty image behind. */
export function render(spec: FigureSpec): void {
    if (!/\.svg$/i.test(spec.output)) {
        throw new Error(`unsupported image format "${spec.output}" (supported: .svg)`);
    }
    const text = readFileSync(spec.input, "utf8");
    let svg: string;
    if (spec.kind === "figure1") {
        svg = renderFigure1(parseFigure1(text), {
            xLabel: spec.xLabel,
            yLabel: spec.yLabel,
            tSelect: spec.tSelect,
        });
    } else if (spec.kind === "signmap") {
        svg = renderSignmap(parseSignmap(text), {
            xLabel: spec.xLabel,
            yLabel: spec.yLabel,
        });
    } else {
        throw new Error(`unknown figure kind "${spec.kind}" (expected figure1 or signmap)`);
    }
    writeFileSync(spec.output, svg, "utf8");
}
