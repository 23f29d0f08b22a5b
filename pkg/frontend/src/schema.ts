import Papa from "papaparse";

export interface Figure1Row {
    t: number;
    eps: number;
    z2: number;
}

export interface SignmapRow {
    t: number;
    eps: number;
    l_hat: number;
    flag: string;
}

export const FIGURE1_COLUMNS = ["t", "eps", "z2"];
export const SIGNMAP_COLUMNS = ["t", "eps", "l_hat", "dlogmag_deps", "est_error", "flag", "ok"];

function parseTable(text: string, required: string[]): Record<string, string>[] {
    const result = Papa.parse<Record<string, string>>(text.trim(), {
        header: true,
        skipEmptyLines: true,
    });
    if (result.errors.length > 0) {
        const first = result.errors[0];
        const where = first.row === undefined ? "" : ` on row ${first.row}`;
        throw new Error(`CSV parse error${where}: ${first.message}`);
    }
    const fields = result.meta.fields ?? [];
    for (const column of required) {
        if (!fields.includes(column)) {
            const found = fields.join(", ") || "none";
            throw new Error(`missing column "${column}" (found: ${found})`);
        }
    }
    if (result.data.length === 0) {
        throw new Error("no data rows");
    }
    return result.data;
}

function toNumber(raw: string, column: string, row: number): number {
    const value = Number(raw);
    if (!Number.isFinite(value)) {
        throw new Error(`row ${row}: column "${column}" is not a finite number: "${raw}"`);
    }
    return value;
}

/** Rows of a `figure1` CSV: columns t, eps, z2, all finite numbers. */
export function parseFigure1(text: string): Figure1Row[] {
    const records = parseTable(text, FIGURE1_COLUMNS);
    return records.map((rec, i) => ({
        t: toNumber(rec.t, "t", i + 1),
        eps: toNumber(rec.eps, "eps", i + 1),
        z2: toNumber(rec.z2, "z2", i + 1),
    }));
}

/** Rows of a `scan` CSV.  l_hat may be nan on rows the scan skipped
 * (flag excluded / at-zero / error); on ok or violation rows it must
 * be a finite number. */
export function parseSignmap(text: string): SignmapRow[] {
    const records = parseTable(text, SIGNMAP_COLUMNS);
    return records.map((rec, i) => {
        const flag = rec.flag;
        const skipped = flag !== "ok" && flag !== "violation";
        const l_hat = Number(rec.l_hat);
        if (!skipped && !Number.isFinite(l_hat)) {
            throw new Error(`row ${i + 1}: column "l_hat" is not a finite number: "${rec.l_hat}"`);
        }
        return {
            t: toNumber(rec.t, "t", i + 1),
            eps: toNumber(rec.eps, "eps", i + 1),
            l_hat,
            flag,
        };
    });
}
