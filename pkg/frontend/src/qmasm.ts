import { makeNamespace } from "./bridge.js";

const ns = makeNamespace("qmasm");

/** Parse annealer-targeted QMASM source text into a JSON AST object. */
export const parseString = ns.parseString;
/** Parse QMASM from a path, URL, or readable object. */
export const parse = ns.parse;
