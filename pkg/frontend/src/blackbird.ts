import { makeNamespace } from "./bridge.js";

const ns = makeNamespace("blackbird");

/** Parse continuous-variable Blackbird source text into a JSON AST object. */
export const parseString = ns.parseString;
/** Parse Blackbird from a path, URL, or readable object. */
export const parse = ns.parse;
