import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["tests/**/*.test.ts"],
    // the e2e suite boots the real session service in a subprocess
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
