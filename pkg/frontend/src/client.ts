import { spawn, type ChildProcessWithoutNullStreams } from "node:child_process";

import { EngineResponse, ProtocolError, parseResponse } from "./protocol.js";

export class BinaryNotFoundError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "BinaryNotFoundError";
  }
}

export class HandshakeError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "HandshakeError";
  }
}

/** A command came back with status "error"; carries the engine's message. */
export class EngineError extends Error {
  constructor(message: string, readonly command: string | null) {
    super(message);
    this.name = "EngineError";
  }
}

const IDENT = /^[A-Za-z_][A-Za-z0-9_]*$/;

/**
 * A bare identifier in a statement: the name of a session object (or any
 * word the engine should see unquoted). Plain strings are sent quoted and
 * never resolve to objects, so use ref() for nodeset/network handles.
 */
export class Ref {
  constructor(readonly name: string) {
    if (!IDENT.test(name) || name === "true" || name === "false") {
      throw new ProtocolError(`not a valid identifier: ${JSON.stringify(name)}`);
    }
  }
}

export function ref(name: string): Ref {
  return new Ref(name);
}

export type Arg = number | boolean | string | Ref | Arg[];
export type NamedArgs = Record<string, Arg>;

function quoteString(s: string): string {
  let out = '"';
  for (const ch of s) {
    if (ch === "\\" || ch === '"') out += "\\" + ch;
    else if (ch === "\t") out += "\\t";
    else if (ch === "\n") out += "\\n";
    else if (ch === "\r") out += "\\r";
    else out += ch;
  }
  return out + '"';
}

function renderArg(value: Arg): string {
  if (value instanceof Ref) return value.name;
  if (Array.isArray(value)) {
    if (value.length === 0) throw new ProtocolError("empty list argument");
    return value.map(renderArg).join("; ");
  }
  if (typeof value === "number") {
    if (!Number.isFinite(value)) throw new ProtocolError(`non-finite number: ${value}`);
    return String(value);
  }
  if (typeof value === "boolean") return value ? "true" : "false";
  return quoteString(value);
}

function isNamedArgs(value: Arg | NamedArgs): value is NamedArgs {
  return (
    typeof value === "object" &&
    value !== null &&
    !(value instanceof Ref) &&
    !Array.isArray(value)
  );
}

export function renderStatement(
  command: string,
  args: Array<Arg | NamedArgs>,
  bindTo?: string,
): string {
  if (!IDENT.test(command)) {
    throw new ProtocolError(`not a valid command name: ${JSON.stringify(command)}`);
  }
  const parts: string[] = [];
  args.forEach((arg, i) => {
    if (isNamedArgs(arg)) {
      if (i !== args.length - 1) {
        throw new ProtocolError("named arguments must come last");
      }
      for (const [name, v] of Object.entries(arg)) {
        if (!IDENT.test(name)) {
          throw new ProtocolError(`not a valid argument name: ${JSON.stringify(name)}`);
        }
        parts.push(`${name} = ${renderArg(v)}`);
      }
    } else {
      parts.push(renderArg(arg));
    }
  });
  const call = `${command}(${parts.join(", ")})`;
  if (bindTo === undefined) return call;
  if (!IDENT.test(bindTo)) {
    throw new ProtocolError(`not a valid object name: ${JSON.stringify(bindTo)}`);
  }
  return `${bindTo} = ${call}`;
}

export interface ConnectOptions {
  /** Arguments for the engine binary; must put it in JSON mode. */
  args?: string[];
  cwd?: string;
  env?: NodeJS.ProcessEnv;
}

interface Waiter {
  resolve: (line: string) => void;
  reject: (err: Error) => void;
}

/**
 * Handle on a running engine subprocess speaking the JSON line protocol.
 * One command is in flight at a time; concurrent callers are queued in
 * order, so responses always match their statements.
 */
export class Engine {
  private readonly child: ChildProcessWithoutNullStreams;
  private buffer = "";
  private stderrTail = "";
  private waiters: Waiter[] = [];
  private chain: Promise<unknown> = Promise.resolve();
  private exitCode: number | null = null;
  private down: Error | null = null;

  private constructor(child: ChildProcessWithoutNullStreams) {
    this.child = child;
    child.stdout.setEncoding("utf8");
    child.stdout.on("data", (chunk: string) => this.onData(chunk));
    child.stderr.setEncoding("utf8");
    child.stderr.on("data", (chunk: string) => {
      this.stderrTail = (this.stderrTail + chunk).slice(-8192);
    });
    child.on("error", (err) => this.fail(new Error(`engine process error: ${err.message}`)));
    child.on("close", (code) => {
      this.exitCode = code;
      this.fail(new Error(`engine exited (code ${code})${this.stderrNote()}`));
    });
  }

  static async connect(binaryPath: string, options: ConnectOptions = {}): Promise<Engine> {
    const child = spawn(binaryPath, options.args ?? [], {
      cwd: options.cwd,
      env: options.env,
      stdio: ["pipe", "pipe", "pipe"],
    });
    await new Promise<void>((resolve, reject) => {
      child.once("spawn", resolve);
      child.once("error", (err) => {
        reject(new BinaryNotFoundError(`cannot start ${binaryPath}: ${err.message}`));
      });
    });
    const engine = new Engine(child as ChildProcessWithoutNullStreams);
    let banner: unknown;
    try {
      banner = await engine.call("info");
    } catch (err) {
      engine.dispose();
      const detail = err instanceof Error ? err.message : String(err);
      throw new HandshakeError(`info() round-trip failed: ${detail}`);
    }
    const info = banner as { engine?: unknown; mode?: unknown };
    if (typeof banner !== "object" || banner === null || info.engine !== "weftnet") {
      engine.dispose();
      throw new HandshakeError(`unexpected info() banner: ${JSON.stringify(banner)}`);
    }
    if (info.mode !== "json") {
      engine.dispose();
      throw new HandshakeError(`engine is not in JSON mode (mode=${String(info.mode)})`);
    }
    return engine;
  }

  private stderrNote(): string {
    const tail = this.stderrTail.trim();
    return tail ? `: ${tail}` : "";
  }

  private onData(chunk: string): void {
    this.buffer += chunk;
    for (;;) {
      const nl = this.buffer.indexOf("\n");
      if (nl < 0) break;
      const line = this.buffer.slice(0, nl);
      this.buffer = this.buffer.slice(nl + 1);
      const waiter = this.waiters.shift();
      if (waiter) waiter.resolve(line);
      // an unsolicited line would mean the protocol drifted; there is no
      // safe recovery, so it is dropped and the next statement will stall
    }
  }

  private fail(err: Error): void {
    if (this.down === null) this.down = err;
    const pending = this.waiters;
    this.waiters = [];
    for (const waiter of pending) waiter.reject(this.down);
  }

  private nextLine(): Promise<string> {
    if (this.down !== null) return Promise.reject(this.down);
    return new Promise((resolve, reject) => {
      this.waiters.push({ resolve, reject });
    });
  }

  /**
   * Send one raw statement line and decode its response envelope. Does not
   * throw on status "error"; callers that want an exception use call().
   */
  statement(line: string): Promise<EngineResponse> {
    const trimmed = line.trim();
    if (trimmed === "" || trimmed.startsWith("#") || line.includes("\n")) {
      return Promise.reject(
        new ProtocolError("statement must be one non-empty, non-comment line"),
      );
    }
    const run = this.chain.then(async () => {
      if (this.down !== null) throw this.down;
      this.child.stdin.write(line + "\n");
      return parseResponse(await this.nextLine());
    });
    this.chain = run.then(
      () => undefined,
      () => undefined,
    );
    return run;
  }

  /** Run a command; returns the decoded result or throws EngineError. */
  async call(command: string, ...args: Array<Arg | NamedArgs>): Promise<unknown> {
    const response = await this.statement(renderStatement(command, args));
    if (response.status === "error") {
      throw new EngineError(response.error ?? "unknown engine error", response.command);
    }
    return response.result;
  }

  /** Run `name = command(...)`, binding the result as a session object. */
  async assign(name: string, command: string, ...args: Array<Arg | NamedArgs>): Promise<unknown> {
    const response = await this.statement(renderStatement(command, args, name));
    if (response.status === "error") {
      throw new EngineError(response.error ?? "unknown engine error", response.command);
    }
    return response.result;
  }

  /** Ask the engine to quit and wait for it to exit. */
  async close(): Promise<number | null> {
    if (this.down === null) {
      try {
        await this.statement("quit()");
      } catch {
        // already going down; fall through to waiting on exit
      }
    }
    if (this.exitCode === null) {
      await new Promise<void>((resolve) => {
        this.child.once("close", () => resolve());
      });
    }
    return this.exitCode;
  }

  /** Kill the subprocess without the quit() handshake. */
  dispose(): void {
    this.child.kill();
  }
}
