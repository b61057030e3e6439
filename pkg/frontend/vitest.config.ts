import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["test/**/*.test.ts"],
    // the conformance tests drive full-size builds through the engine
    testTimeout: 180_000,
    hookTimeout: 180_000,
  },
});
