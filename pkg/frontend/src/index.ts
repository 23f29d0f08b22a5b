export { parseFigure1, parseSignmap, FIGURE1_COLUMNS, SIGNMAP_COLUMNS } from "./schema";
export type { Figure1Row, SignmapRow } from "./schema";
export { renderFigure1, CURVE_COLORS } from "./figure1";
export type { Figure1Options } from "./figure1";
export {
    renderSignmap,
    cellColor,
    POSITIVE_COLOR,
    NEGATIVE_COLOR,
    NEUTRAL_COLOR,
    SKIPPED_COLOR,
    VIOLATION_STROKE,
} from "./signmap";
export type { SignmapOptions } from "./signmap";
export { render } from "./render";
export type { FigureSpec } from "./render";
