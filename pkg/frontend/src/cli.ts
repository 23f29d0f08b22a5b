#!/usr/bin/env node
import { render, FigureSpec } from "./render";

const USAGE = `usage: figplot <kind> <in.csv> <out-image>
       kind: figure1 | signmap
       options: --t-select 100,200  --x-label TEXT  --y-label TEXT`;

export function main(argv: string[]): number {
    const positional: string[] = [];
    let tSelect: number[] | undefined;
    let xLabel: string | undefined;
    let yLabel: string | undefined;

    for (let i = 0; i < argv.length; i++) {
        const arg = argv[i];
        if (arg === "--t-select" || arg === "--x-label" || arg === "--y-label") {
            const value = argv[++i];
            if (value === undefined) {
                console.error(`figplot: ${arg} needs a value\n${USAGE}`);
                return 1;
            }
            if (arg === "--t-select") {
                tSelect = [];
                for (const s of value.split(",")) {
                    const n = Number(s);
                    if (!Number.isFinite(n)) {
                        console.error(`figplot: bad --t-select entry "${s}"`);
                        return 1;
                    }
                    tSelect.push(n);
                }
            } else if (arg === "--x-label") {
                xLabel = value;
            } else {
                yLabel = value;
            }
        } else if (arg.startsWith("-")) {
            console.error(`figplot: unknown option ${arg}\n${USAGE}`);
            return 1;
        } else {
            positional.push(arg);
        }
    }

    if (positional.length !== 3) {
        console.error(USAGE);
        return 1;
    }
    const [kind, input, output] = positional;
    if (kind !== "figure1" && kind !== "signmap") {
        console.error(`figplot: unknown figure kind "${kind}" (expected figure1 or signmap)`);
        return 1;
    }
    const spec: FigureSpec = { kind, input, output, xLabel, yLabel, tSelect };
    try {
        render(spec);
    } catch (err) {
        console.error(`figplot: ${err instanceof Error ? err.message : String(err)}`);
        return 1;
    }
    return 0;
}

if (require.main === module) {
    process.exit(main(process.argv.slice(2)));
}
