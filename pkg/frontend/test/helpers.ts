import { execFile } from "node:child_process";
import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { promisify } from "node:util";

import { Engine, type ConnectOptions } from "../src/index.js";

export const PYTHON = process.env.WEFTNET_PYTHON ?? "python3";
export const ENGINE_ARGS = ["-m", "weftnet", "--json"];

export function connectEngine(options: Omit<ConnectOptions, "args"> = {}): Promise<Engine> {
  return Engine.connect(PYTHON, { ...options, args: ENGINE_ARGS });
}

export function scratchDir(prefix: string): string {
  return mkdtempSync(join(tmpdir(), prefix));
}

const execFileAsync = promisify(execFile);

/** Run a script through the CLI directly and return its JSON lines. */
export async function runScriptJson(
  scriptPath: string,
  cwd: string,
): Promise<Array<Record<string, unknown>>> {
  const { stdout } = await execFileAsync(
    PYTHON,
    ["-m", "weftnet", "--json", "--script", scriptPath],
    { cwd, maxBuffer: 256 * 1024 * 1024 },
  );
  return stdout
    .split("\n")
    .filter((line) => line !== "")
    .map((line) => JSON.parse(line) as Record<string, unknown>);
}
