/** Thin HTTP client for the skinning service. */

import type { SkinErrorBody, SkinRequest, SkinResponse } from "./types.js";

export class SkinServiceError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly body: SkinErrorBody | null,
  ) {
    super(message);
    this.name = "SkinServiceError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class SkinClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  async health(): Promise<{ version: string }> {
    const resp = await this.fetchFn(`${this.baseUrl}/health`);
    if (!resp.ok) throw new SkinServiceError("health check failed", resp.status, null);
    return (await resp.json()) as { version: string };
  }

  async skin(request: SkinRequest): Promise<SkinResponse> {
    const resp = await this.fetchFn(`${this.baseUrl}/skin`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!resp.ok) {
      let body: SkinErrorBody | null = null;
      try {
        body = (await resp.json()) as SkinErrorBody;
      } catch {
        // non-JSON error body; keep null
      }
      throw new SkinServiceError(body?.error ?? `HTTP ${resp.status}`, resp.status, body);
    }
    return (await resp.json()) as SkinResponse;
  }
}
