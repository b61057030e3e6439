import { afterAll, beforeAll, describe, expect, it } from "vitest";

import {
  BinaryNotFoundError,
  Engine,
  EngineError,
  HandshakeError,
  ProtocolError,
  parseResponse,
  ref,
  renderStatement,
} from "../src/index.js";
import { PYTHON, connectEngine } from "./helpers.js";

describe("statement rendering", () => {
  it("quotes strings and leaves refs bare", () => {
    expect(renderStatement("info", [])).toBe("info()");
    expect(renderStatement("addlayer", [ref("net"), "ties", { mode: 1 }])).toBe(
      'addlayer(net, "ties", mode = 1)',
    );
    expect(renderStatement("createnodeset", [{ createnodes: 5 }], "ns")).toBe(
      "ns = createnodeset(createnodes = 5)",
    );
  });

  it("escapes string contents the way the tokenizer expects", () => {
    expect(renderStatement("f", ['a"b\\c\td'])).toBe('f("a\\"b\\\\c\\td")');
    expect(renderStatement("f", ["line\nbreak"])).toBe('f("line\\nbreak")');
  });

  it("joins lists with semicolons", () => {
    expect(renderStatement("g", [[1, 2, 3]])).toBe("g(1; 2; 3)");
    expect(renderStatement("g", [{ layernames: ["a b", "c"] }])).toBe(
      'g(layernames = "a b"; "c")',
    );
  });

  it("rejects malformed pieces before anything reaches the wire", () => {
    expect(() => renderStatement("bad name", [])).toThrow(ProtocolError);
    expect(() => renderStatement("f", [Number.NaN])).toThrow(ProtocolError);
    expect(() => renderStatement("f", [[]])).toThrow(ProtocolError);
    expect(() => renderStatement("f", [{ mode: 1 }, 2])).toThrow(ProtocolError);
    expect(() => ref("not an ident")).toThrow(ProtocolError);
    expect(() => ref("true")).toThrow(ProtocolError);
  });
});

describe("response parsing", () => {
  it("accepts exactly the protocol envelope", () => {
    const payload = parseResponse(
      '{"status":"ok","command":"info","result":{"x":1},"error":null}',
    );
    expect(payload.status).toBe("ok");
    expect(payload.result).toEqual({ x: 1 });
  });

  it("rejects drift from the schema", () => {
    expect(() => parseResponse("not json")).toThrow(ProtocolError);
    expect(() => parseResponse('{"status":"ok","command":null,"error":null}')).toThrow(
      ProtocolError,
    );
    expect(() =>
      parseResponse('{"status":"ok","command":null,"result":1,"error":null,"extra":2}'),
    ).toThrow(ProtocolError);
    expect(() =>
      parseResponse('{"status":"maybe","command":null,"result":1,"error":null}'),
    ).toThrow(ProtocolError);
  });
});

describe("connect", () => {
  it("fails with BinaryNotFound for a missing path", async () => {
    await expect(
      Engine.connect("/no/such/binary-here", { args: [] }),
    ).rejects.toBeInstanceOf(BinaryNotFoundError);
  });

  it("fails the handshake when the process does not speak the protocol", async () => {
    await expect(
      Engine.connect(PYTHON, {
        args: ["-u", "-c", "print('hello'); import time; time.sleep(60)"],
      }),
    ).rejects.toBeInstanceOf(HandshakeError);
  });

  it("connects, handshakes and quits cleanly", async () => {
    const engine = await connectEngine();
    const banner = (await engine.call("info")) as Record<string, unknown>;
    expect(banner.engine).toBe("weftnet");
    expect(banner.mode).toBe("json");
    const code = await engine.close();
    expect(code).toBe(0);
  });
});

describe("command round trips", () => {
  let engine: Engine;

  beforeAll(async () => {
    engine = await connectEngine();
  });

  afterAll(async () => {
    await engine.close();
  });

  it("runs commands and decodes results", async () => {
    await engine.assign("ns", "createnodeset", { createnodes: 4 });
    const summary = (await engine.call("info", ref("ns"))) as Record<string, unknown>;
    expect(summary.type).toBe("nodeset");
    expect(summary.nodes).toBe(4);

    await engine.assign("net", "createnetwork", { nodeset: ref("ns") });
    await engine.call("addlayer", ref("net"), "ties", { mode: 1 });
    expect(await engine.call("addedge", ref("net"), "ties", 0, 1)).toBeNull();
    expect(await engine.call("checkedge", ref("net"), "ties", 1, 0)).toBe(true);
    expect(await engine.call("getnodealters", ref("net"), 1)).toEqual([0]);
  });

  it("raises EngineError with the engine's message and keeps the session alive", async () => {
    const failure = engine.call("checkedge", ref("net"), "nope", 0, 1);
    await expect(failure).rejects.toBeInstanceOf(EngineError);
    await expect(failure).rejects.toThrow(/nope/);
    // session still usable afterwards
    expect(await engine.call("checkedge", ref("net"), "ties", 0, 1)).toBe(true);
  });

  it("surfaces error envelopes through statement() without throwing", async () => {
    const response = await engine.statement("definitelynotacommand()");
    expect(response.status).toBe("error");
    expect(response.error).toMatch(/unknown command/);
    expect(response.result).toBeNull();
  });

  it("refuses statements that would produce no response line", async () => {
    await expect(engine.statement("   ")).rejects.toBeInstanceOf(ProtocolError);
    await expect(engine.statement("# comment")).rejects.toBeInstanceOf(ProtocolError);
  });

  it("keeps 1,000 interleaved calls in order", async () => {
    await engine.assign("tags", "createnodeset", { createnodes: 1000 });
    const writes: Array<Promise<unknown>> = [];
    for (let i = 0; i < 1000; i++) {
      writes.push(engine.call("setattribute", ref("tags"), i, "serial", i * 7));
    }
    await Promise.all(writes);
    const reads: Array<Promise<unknown>> = [];
    for (let i = 0; i < 1000; i++) {
      reads.push(engine.call("getattribute", ref("tags"), i, "serial"));
    }
    const values = await Promise.all(reads);
    values.forEach((value, i) => {
      expect(value).toEqual({ present: true, type: "int", value: i * 7 });
    });
  });
});
