/**
 * Shared test plumbing: a route-table fetch stub (so the UI only ever sees
 * recorded server bodies), a microtask flusher, and a tiny seeded PRNG for
 * reproducible randomized cases.
 */

import type { FetchLike } from "../src/api.js";

export interface RecordedCall {
  method: string;
  path: string;
  body?: unknown;
}

export interface Route {
  method: string;
  path: string;
  reply: { status?: number; body: unknown } | (() => { status?: number; body: unknown });
}

export function stubFetch(routes: Route[], calls?: RecordedCall[]): FetchLike {
  return async (url, init) => {
    const method = (init?.method ?? "GET").toUpperCase();
    const path = url.replace(/^[a-z]+:\/\/[^/]*/i, "");
    const body = typeof init?.body === "string" ? JSON.parse(init.body) : undefined;
    calls?.push({ method, path, body });
    const route = routes.find((r) => r.method === method && r.path === path);
    if (!route) {
      throw new Error(`no stubbed route for ${method} ${path}`);
    }
    const reply = typeof route.reply === "function" ? route.reply() : route.reply;
    return new Response(JSON.stringify(reply.body), {
      status: reply.status ?? 200,
      headers: { "Content-Type": "application/json" },
    });
  };
}

/** Let queued promise callbacks and zero-delay timers run. */
export async function flush(rounds = 4): Promise<void> {
  for (let i = 0; i < rounds; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

/** Deterministic PRNG (mulberry32) for randomized-but-reproducible cases. */
export function seededRandom(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function pick<T>(random: () => number, options: readonly T[]): T {
  return options[Math.floor(random() * options.length)]!;
}
