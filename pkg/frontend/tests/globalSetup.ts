// Start a real lexicon server for the integration tests. A throwaway copy
// of the seed lexicon goes to a temp directory so test writes never touch
// the repository data.

import { spawn, type ChildProcess } from "node:child_process";
import { copyFileSync, mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { dirname, join, resolve } from "node:path";
import { fileURLToPath } from "node:url";
import type { TestProject } from "vitest/node";

const HERE = dirname(fileURLToPath(import.meta.url));

let child: ChildProcess | null = null;
let workDir: string | null = null;

async function freePort(): Promise<number> {
  return new Promise((ok, err) => {
    const srv = createServer();
    srv.once("error", err);
    srv.listen(0, "127.0.0.1", () => {
      const address = srv.address();
      if (address === null || typeof address === "string") {
        err(new Error("no port assigned"));
        return;
      }
      srv.close(() => ok(address.port));
    });
  });
}

async function waitReady(baseUrl: string): Promise<void> {
  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      const response = await fetch(`${baseUrl}/types`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) throw new Error(`server at ${baseUrl} never became ready`);
    await new Promise((r) => setTimeout(r, 150));
  }
}

export default async function setup(project: TestProject): Promise<() => void> {
  const port = await freePort();
  workDir = mkdtempSync(join(tmpdir(), "glex-ui-test-"));
  const seedSource = resolve(HERE, "../../src/glex/data/seed.ldif");
  const lexiconPath = join(workDir, "lexicon.ldif");
  copyFileSync(seedSource, lexiconPath);

  const configPath = join(workDir, "server.toml");
  writeFileSync(
    configPath,
    [
      `listen = "127.0.0.1:${port}"`,
      "auth_required = false",
      `lexicon_path = ${JSON.stringify(lexiconPath)}`,
      "",
      "[[users]]",
      'username = "alice"',
      'password = "edit-pass"',
      'role = "editor"',
      "",
      "[[users]]",
      'username = "bob"',
      'password = "read-pass"',
      'role = "reader"',
      "",
    ].join("\n"),
  );

  child = spawn("glex", ["serve", "--config", configPath], {
    stdio: ["ignore", "inherit", "inherit"],
  });
  const baseUrl = `http://127.0.0.1:${port}`;
  await waitReady(baseUrl);
  project.provide("baseUrl", baseUrl);

  return async () => {
    if (child) {
      const exited = new Promise((r) => child!.once("exit", r));
      child.kill("SIGTERM");
      await exited;
    }
    if (workDir) rmSync(workDir, { recursive: true, force: true });
  };
}

declare module "vitest" {
  export interface ProvidedContext {
    baseUrl: string;
  }
}
