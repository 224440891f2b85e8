import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    globalSetup: "./test/global-setup.ts",
    testTimeout: 120000,
    hookTimeout: 120000,
  },
});
