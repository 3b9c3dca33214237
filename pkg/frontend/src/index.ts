export * as qasm from "./qasm.js";
export * as blackbird from "./blackbird.js";
export * as qmasm from "./qmasm.js";
export { ParseError } from "./bridge.js";
export type { Language, SourceProvider } from "./bridge.js";
export type { AstNodeJson, AttrValue, SourcePositionJson, SpanJson } from "./ast.js";
