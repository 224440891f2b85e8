// Spawns the Python play service for the contract tests and tears it down.

import { spawn, ChildProcess } from "node:child_process";

const PORT = 8765;
let server: ChildProcess | undefined;

async function waitForService(url: string, attempts = 100): Promise<void> {
  for (let i = 0; i < attempts; i++) {
    try {
      const resp = await fetch(url + "/families");
      if (resp.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("play service did not come up");
}

export default async function setup(): Promise<() => Promise<void>> {
  server = spawn(
    "python3",
    ["-m", "graceful_game", "serve", "--host", "127.0.0.1", "--port", String(PORT)],
    { cwd: "..", stdio: "ignore" },
  );
  process.env.GRACEFUL_API = `http://127.0.0.1:${PORT}`;
  await waitForService(process.env.GRACEFUL_API);
  return async () => {
    server?.kill("SIGTERM");
  };
}
