/** JSON shape of the core's AST emission (key-for-key, no extras). */

export interface SourcePositionJson {
  line: number;
  col: number;
  off: number;
}

export interface SpanJson {
  start: SourcePositionJson;
  end: SourcePositionJson;
}

export type AttrValue = string | number | boolean;

export interface AstNodeJson {
  kind: string;
  span: SpanJson;
  attrs: Record<string, AttrValue>;
  children: AstNodeJson[];
}
