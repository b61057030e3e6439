import { z } from "zod";

/**
 * One JSON-mode response line. Mirrors the engine's published schema: an
 * object with exactly the keys status, command, result and error.
 */
export const responseShape = z.strictObject({
  status: z.enum(["ok", "error"]),
  command: z.string().nullable(),
  result: z.unknown(),
  error: z.string().nullable(),
});

export interface EngineResponse {
  status: "ok" | "error";
  command: string | null;
  result: unknown;
  error: string | null;
}

/** Raised when a response line is not valid protocol JSON. */
export class ProtocolError extends Error {
  constructor(message: string, readonly line?: string) {
    super(message);
    this.name = "ProtocolError";
  }
}

export function parseResponse(line: string): EngineResponse {
  let decoded: unknown;
  try {
    decoded = JSON.parse(line);
  } catch {
    throw new ProtocolError("response line is not JSON", line);
  }
  const checked = responseShape.safeParse(decoded);
  if (!checked.success) {
    throw new ProtocolError(`response violates protocol: ${checked.error.message}`, line);
  }
  // z.unknown() treats a missing key as acceptable; the protocol does not
  if (!Object.prototype.hasOwnProperty.call(decoded, "result")) {
    throw new ProtocolError("response is missing the result key", line);
  }
  return checked.data as EngineResponse;
}
