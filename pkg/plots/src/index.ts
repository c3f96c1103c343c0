export { CsvError, parseTrajectoryCsv, TrajectoryTable } from "./csv";
export { renderLineChart, ChartOptions, Series } from "./svg";
export { plotPopulations, PlotSpec, DEFAULT_COLUMNS } from "./plot";
export { main, parseArgs } from "./cli";
