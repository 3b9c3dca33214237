import { makeNamespace } from "./bridge.js";

const ns = makeNamespace("qasm");

/** Parse gate-model QASM source text into a JSON AST object. */
export const parseString = ns.parseString;
/** Parse gate-model QASM from a path, URL, or readable object. */
export const parse = ns.parse;
