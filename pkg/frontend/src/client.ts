/**
 * Gateway client. Widgets talk to the gateway endpoint and nothing else;
 * every upstream is behind it. Superseded in-flight requests are aborted
 * so a fast slider never races a slow response (latest wins).
 */

import type {
  ComparisonDocument,
  Envelope,
  FacetFilterSpec,
  FilterResponse,
  HealthResponse,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class GatewayError extends Error {
  constructor(message: string, public readonly status?: number) {
    super(message);
    this.name = "GatewayError";
  }
}

export class GatewayClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    // Default to the global fetch, bound so jsdom/browser both work.
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  async query<T>(query: string, signal?: AbortSignal): Promise<Envelope<T>> {
    const response = await this.fetchImpl(`${this.baseUrl}/query`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ query }),
      signal,
    });
    const payload = (await response.json()) as Envelope<T>;
    if (!response.ok) {
      const detail = payload?.errors?.[0];
      throw new GatewayError(
        detail ? `${detail.kind}: ${detail.message}` : `HTTP ${response.status}`,
        response.status,
      );
    }
    return payload;
  }

  async filterComparison(
    table: ComparisonDocument,
    filters: FacetFilterSpec[],
    signal?: AbortSignal,
  ): Promise<FilterResponse> {
    const response = await this.fetchImpl(`${this.baseUrl}/comparison/filter`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ table, filters }),
      signal,
    });
    if (!response.ok) {
      throw new GatewayError(`HTTP ${response.status}`, response.status);
    }
    return (await response.json()) as FilterResponse;
  }

  async health(): Promise<HealthResponse> {
    const response = await this.fetchImpl(`${this.baseUrl}/health`);
    if (!response.ok) {
      throw new GatewayError(`HTTP ${response.status}`, response.status);
    }
    return (await response.json()) as HealthResponse;
  }
}

/** Hands out an AbortSignal per request, aborting the previous one. */
export class LatestWins {
  private controller: AbortController | null = null;

  next(): AbortSignal {
    this.controller?.abort();
    this.controller = new AbortController();
    return this.controller.signal;
  }

  cancel(): void {
    this.controller?.abort();
    this.controller = null;
  }
}

export function isAbort(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}
