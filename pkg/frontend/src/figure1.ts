import { Figure1Row } from "./schema";
import { MARGIN, WIDTH, HEIGHT, axes, document, escapeXml, linearScale, px, ticks } from "./svg";

export interface Figure1Options {
    xLabel?: string;
    yLabel?: string;
    /** Plot only these t values (default: every t in the CSV). */
    tSelect?: number[];
}

export const CURVE_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

interface Curve {
    t: number;
    points: Figure1Row[];
}

function groupCurves(rows: Figure1Row[], tSelect?: number[]): Curve[] {
    const byT = new Map<number, Figure1Row[]>();
    for (const row of rows) {
        const list = byT.get(row.t);
        if (list) {
            list.push(row);
        } else {
            byT.set(row.t, [row]);
        }
    }
    let tValues = [...byT.keys()].sort((a, b) => a - b);
    if (tSelect !== undefined) {
        const wanted = new Set(tSelect);
        tValues = tValues.filter((t) => wanted.has(t));
        if (tValues.length === 0) {
            throw new Error(`t selection [${tSelect.join(", ")}] matches no curve in the CSV`);
        }
    }
    return tValues.map((t) => ({
        t,
        points: byT.get(t)!.slice().sort((a, b) => a.eps - b.eps),
    }));
}

/** One |Z|^2 vs eps curve per t value, colored and labeled. */
export function renderFigure1(rows: Figure1Row[], options: Figure1Options = {}): string {
    const curves = groupCurves(rows, options.tSelect);
    const allPoints = curves.flatMap((c) => c.points);
    const epsMin = Math.min(...allPoints.map((p) => p.eps));
    const epsMax = Math.max(...allPoints.map((p) => p.eps));
    const z2Max = Math.max(...allPoints.map((p) => p.z2));
    const xScale = linearScale(epsMin, epsMax, MARGIN.left, WIDTH - MARGIN.right);
    const yScale = linearScale(0, z2Max * 1.05, HEIGHT - MARGIN.bottom, MARGIN.top);

    const parts: string[] = [];
    parts.push(axes(
        xScale,
        yScale,
        ticks(epsMin, epsMax, 6),
        ticks(0, z2Max * 1.05, 6),
        options.xLabel ?? "eps",
        options.yLabel ?? "|Z(t,eps)|^2",
    ));
    curves.forEach((curve, i) => {
        const color = CURVE_COLORS[i % CURVE_COLORS.length];
        const pts = curve.points
            .map((p) => `${px(xScale(p.eps))},${px(yScale(p.z2))}`)
            .join(" ");
        parts.push(`<polyline data-t="${curve.t}" points="${pts}" fill="none" stroke="${color}" stroke-width="1.5"/>`);
        const lx = MARGIN.left + 12;
        const ly = MARGIN.top + 16 + 18 * i;
        parts.push(`<line x1="${px(lx)}" y1="${px(ly - 4)}" x2="${px(lx + 22)}" y2="${px(ly - 4)}" stroke="${color}" stroke-width="2"/>`);
        parts.push(`<text x="${px(lx + 28)}" y="${px(ly)}" font-size="13" fill="#333333">${escapeXml(`t = ${curve.t}`)}</text>`);
    });
    return document(parts.join("\n"));
}
