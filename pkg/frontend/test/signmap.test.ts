import { readFileSync } from "fs";
import { join } from "path";
import { describe, expect, it } from "vitest";

import { parseSignmap } from "../src/schema";
import {
    NEGATIVE_COLOR,
    NEUTRAL_COLOR,
    POSITIVE_COLOR,
    SKIPPED_COLOR,
    VIOLATION_STROKE,
    cellColor,
    renderSignmap,
} from "../src/signmap";

const rows = parseSignmap(
    readFileSync(join(__dirname, "fixtures", "signmap.csv"), "utf8"),
);

describe("renderSignmap", () => {
    it("colors a clean scan in two colors split along eps = 0", () => {
        // The eps = 0 row itself carries numeric noise around zero, so
        // only the two half planes have a guaranteed color.
        for (const row of rows) {
            const color = cellColor(row);
            if (row.flag !== "ok") {
                expect(color).toBe(SKIPPED_COLOR);
            } else if (row.eps > 0) {
                expect(color).toBe(POSITIVE_COLOR);
            } else if (row.eps < 0) {
                expect(color).toBe(NEGATIVE_COLOR);
            }
        }
        const svg = renderSignmap(rows);
        expect(svg).toContain(POSITIVE_COLOR);
        expect(svg).toContain(NEGATIVE_COLOR);
        expect(svg).toContain(SKIPPED_COLOR);
        expect(svg).not.toContain(VIOLATION_STROKE);
    });

    it("keeps an exact zero neutral", () => {
        expect(cellColor({ t: 10, eps: 0, l_hat: 0, flag: "ok" }))
            .toBe(NEUTRAL_COLOR);
    });

    it("draws one cell per scan row", () => {
        const svg = renderSignmap(rows);
        const cells = svg.match(/<rect [^>]*fill="#/g) ?? [];
        // one background rect plus one rect per row
        expect(cells.length).toBe(rows.length + 1);
    });

    it("outlines violation cells", () => {
        const header = "t,eps,l_hat,dlogmag_deps,est_error,flag,ok\n";
        const body = [
            "10,-0.1,-0.5,-0.5,1e-9,ok,1",
            "10,0.1,-0.5,-0.5,1e-9,violation,0",
            "11,-0.1,-0.5,-0.5,1e-9,ok,1",
            "11,0.1,0.5,0.5,1e-9,ok,1",
        ].join("\n");
        const svg = renderSignmap(parseSignmap(header + body));
        expect(svg).toContain(`stroke="${VIOLATION_STROKE}"`);
        // the violating cell is colored by its actual sign (negative)
        const rects = svg.match(/<rect [^>]*fill="[^"]+"\/>/g) ?? [];
        const negatives = rects.filter((r) => r.includes(NEGATIVE_COLOR));
        expect(negatives.length).toBe(3);
    });

    it("is deterministic", () => {
        expect(renderSignmap(rows)).toBe(renderSignmap(rows));
    });
});
