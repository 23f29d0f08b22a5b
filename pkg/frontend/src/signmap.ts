import { SignmapRow } from "./schema";
import { MARGIN, WIDTH, HEIGHT, axes, document, linearScale, px, ticks } from "./svg";

export interface SignmapOptions {
    xLabel?: string;
    yLabel?: string;
}

export const POSITIVE_COLOR = "#d62728";
export const NEGATIVE_COLOR = "#1f77b4";
export const NEUTRAL_COLOR = "#f2f2f2";
export const SKIPPED_COLOR = "#bbbbbb";
export const VIOLATION_STROKE = "#000000";

export function cellColor(row: SignmapRow): string {
    if (row.flag !== "ok" && row.flag !== "violation") {
        return SKIPPED_COLOR;
    }
    if (row.l_hat > 0) {
        return POSITIVE_COLOR;
    }
    if (row.l_hat < 0) {
        return NEGATIVE_COLOR;
    }
    return NEUTRAL_COLOR;
}

function uniqueSorted(values: number[]): number[] {
    return [...new Set(values)].sort((a, b) => a - b);
}

/** Heatmap of sign(l_hat) over the (t, eps) grid: one rect per scan row,
 * red positive, blue negative, gray where the scan skipped the point,
 * black outline on violations. */
export function renderSignmap(rows: SignmapRow[], options: SignmapOptions = {}): string {
    const tValues = uniqueSorted(rows.map((r) => r.t));
    const epsValues = uniqueSorted(rows.map((r) => r.eps));
    const tIndex = new Map(tValues.map((v, i) => [v, i]));
    const epsIndex = new Map(epsValues.map((v, i) => [v, i]));

    const plotW = WIDTH - MARGIN.left - MARGIN.right;
    const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
    const cellW = plotW / tValues.length;
    const cellH = plotH / epsValues.length;

    const parts: string[] = [];
    const violations: string[] = [];
    for (const row of rows) {
        const i = tIndex.get(row.t)!;
        const j = epsIndex.get(row.eps)!;
        const x = MARGIN.left + i * cellW;
        // eps increases upward, SVG y runs downward.
        const y = MARGIN.top + (epsValues.length - 1 - j) * cellH;
        const rect = `x="${px(x)}" y="${px(y)}" width="${px(cellW)}" height="${px(cellH)}"`;
        parts.push(`<rect ${rect} fill="${cellColor(row)}"/>`);
        if (row.flag === "violation") {
            violations.push(`<rect ${rect} fill="none" stroke="${VIOLATION_STROKE}" stroke-width="1.5"/>`);
        }
    }
    parts.push(...violations);

    // Value scales for the tick positions only; cells are laid out by index.
    const xScale = linearScale(
        tValues[0], tValues[tValues.length - 1],
        MARGIN.left + cellW / 2, MARGIN.left + plotW - cellW / 2,
    );
    const yScale = linearScale(
        epsValues[0], epsValues[epsValues.length - 1],
        MARGIN.top + plotH - cellH / 2, MARGIN.top + cellH / 2,
    );
    parts.push(axes(
        xScale,
        yScale,
        ticks(tValues[0], tValues[tValues.length - 1], 8),
        ticks(epsValues[0], epsValues[epsValues.length - 1], 6),
        options.xLabel ?? "t",
        options.yLabel ?? "eps",
    ));
    return document(parts.join("\n"));
}
