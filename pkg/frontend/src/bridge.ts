/**
 * Bridge to the core parsers. This module is marshalling only: the code is
 * handed to the `qlparse` CLI on stdin and its JSON AST emission is returned
 * verbatim, so wrapper output is key-for-key the core's output.
 */

import { spawnSync } from "node:child_process";
import { readFile } from "node:fs/promises";

import type { AstNodeJson } from "./ast.js";

export type Language = "qasm" | "blackbird" | "qmasm";

/** A lex/parse/semantic diagnostic surfaced by the core. */
export class ParseError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly line: number,
    readonly column: number,
  ) {
    super(message);
    this.name = "ParseError";
  }
}

/** Anything a program can be read from: a path, a URL, or a readable object. */
export type SourceProvider = string | URL | { read(): string | Promise<string> };

const DIAGNOSTIC = /^(?:error|warning) ([A-Z]{3}\d{3}): (.*) at (\d+):(\d+)$/m;

function cliCommand(): string {
  return process.env.QLPARSE_CLI ?? "qlparse";
}

export function parseWithCli(language: Language, code: string): AstNodeJson {
  const result = spawnSync(
    cliCommand(),
    ["parse", "--lang", language, "--format", "json", "-"],
    { input: code, encoding: "utf8", maxBuffer: 512 * 1024 * 1024 },
  );
  if (result.error) {
    throw result.error;
  }
  if (result.status !== 0) {
    const match = DIAGNOSTIC.exec(result.stderr);
    if (match) {
      throw new ParseError(match[1], match[2], Number(match[3]), Number(match[4]));
    }
    throw new Error(`qlparse exited with status ${result.status}: ${result.stderr}`);
  }
  return JSON.parse(result.stdout) as AstNodeJson;
}

export async function readSource(provider: SourceProvider): Promise<string> {
  if (typeof provider === "string") {
    return readFile(provider, "utf8");
  }
  if (provider instanceof URL) {
    if (provider.protocol === "file:") {
      return readFile(provider, "utf8");
    }
    const response = await fetch(provider);
    if (!response.ok) {
      throw new Error(`fetching ${provider} failed: ${response.status}`);
    }
    return response.text();
  }
  return provider.read();
}

export interface LanguageNamespace {
  parseString(code: string): AstNodeJson;
  parse(source: SourceProvider): Promise<AstNodeJson>;
}

export function makeNamespace(language: Language): LanguageNamespace {
  return {
    parseString: (code) => parseWithCli(language, code),
    parse: async (source) => parseWithCli(language, await readSource(source)),
  };
}
