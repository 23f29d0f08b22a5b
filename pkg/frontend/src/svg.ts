/** Small deterministic SVG helpers shared by both figure kinds. */

export interface Margin {
    top: number;
    right: number;
    bottom: number;
    left: number;
}

export const WIDTH = 640;
export const HEIGHT = 420;
export const MARGIN: Margin = { top: 20, right: 20, bottom: 52, left: 74 };

/** Fixed-point pixel coordinate, stable across runs and platforms. */
export function px(value: number): string {
    const s = value.toFixed(2);
    return s === "-0.00" ? "0.00" : s;
}

export function escapeXml(text: string): string {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;");
}

/** Linear map from [d0, d1] to [r0, r1]; constant domains map to the middle. */
export function linearScale(d0: number, d1: number, r0: number, r1: number) {
    const span = d1 - d0;
    return (value: number): number => {
        if (span === 0) {
            return (r0 + r1) / 2;
        }
        return r0 + ((value - d0) / span) * (r1 - r0);
    };
}

/** Round tick positions covering [lo, hi]: 1/2/5 steps, about `count` of them. */
export function ticks(lo: number, hi: number, count: number): number[] {
    if (!(hi > lo)) {
        return [lo];
    }
    const raw = (hi - lo) / Math.max(1, count);
    const power = Math.pow(10, Math.floor(Math.log10(raw)));
    let step = power;
    for (const mult of [1, 2, 5, 10]) {
        step = mult * power;
        if (step >= raw) {
            break;
        }
    }
    const out: number[] = [];
    for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
        out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
    }
    return out;
}

export function tickLabel(value: number): string {
    const s = value.toPrecision(6);
    return String(Number(s));
}

export function axes(
    xScale: (v: number) => number,
    yScale: (v: number) => number,
    xTicks: number[],
    yTicks: number[],
    xLabel: string,
    yLabel: string,
): string {
    const x0 = MARGIN.left;
    const x1 = WIDTH - MARGIN.right;
    const y0 = HEIGHT - MARGIN.bottom;
    const y1 = MARGIN.top;
    const parts: string[] = [];
    parts.push(`<line x1="${px(x0)}" y1="${px(y0)}" x2="${px(x1)}" y2="${px(y0)}" stroke="#333333" stroke-width="1"/>`);
    parts.push(`<line x1="${px(x0)}" y1="${px(y0)}" x2="${px(x0)}" y2="${px(y1)}" stroke="#333333" stroke-width="1"/>`);
    for (const t of xTicks) {
        const x = xScale(t);
        parts.push(`<line x1="${px(x)}" y1="${px(y0)}" x2="${px(x)}" y2="${px(y0 + 5)}" stroke="#333333" stroke-width="1"/>`);
        parts.push(`<text x="${px(x)}" y="${px(y0 + 20)}" text-anchor="middle" font-size="12" fill="#333333">${escapeXml(tickLabel(t))}</text>`);
    }
    for (const t of yTicks) {
        const y = yScale(t);
        parts.push(`<line x1="${px(x0 - 5)}" y1="${px(y)}" x2="${px(x0)}" y2="${px(y)}" stroke="#333333" stroke-width="1"/>`);
        parts.push(`<text x="${px(x0 - 8)}" y="${px(y + 4)}" text-anchor="end" font-size="12" fill="#333333">${escapeXml(tickLabel(t))}</text>`);
    }
    const xMid = (x0 + x1) / 2;
    const yMid = (y0 + y1) / 2;
    parts.push(`<text x="${px(xMid)}" y="${px(HEIGHT - 12)}" text-anchor="middle" font-size="14" fill="#333333">${escapeXml(xLabel)}</text>`);
    parts.push(`<text x="18" y="${px(yMid)}" text-anchor="middle" font-size="14" fill="#333333" transform="rotate(-90 18 ${px(yMid)})">${escapeXml(yLabel)}</text>`);
    return parts.join("\n");
}

export function document(body: string): string {
    return [
        `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
        `<rect x="0" y="0" width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>`,
        body,
        `</svg>`,
        ``,
    ].join("\n");
}
