/**
 * Typed client for the session API.
 *
 * Every method maps one endpoint; bodies and responses pass through
 * unreshaped. Non-2xx responses carry the server's error document and are
 * thrown as ApiError so panels can show the stable code and message.
 */

import type {
  ConnectResponse,
  ErrorDocument,
  ExecuteResponse,
  GraphDocument,
  MetadataDocument,
  PatternsStatus,
  QueryGraphDocument,
  TranslateResponse,
} from "./documents.js";

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface RemoteSpec {
  endpoint: string;
  user: string;
  password: string;
  database?: string;
  timeout?: number;
}

export interface ConnectRequest {
  session?: string;
  embedded?: { graph: GraphDocument };
  remote?: RemoteSpec;
}

export interface PatternsRequest {
  k: number;
  alpha?: number;
  tau_max?: number;
  target_part_size?: number;
  seed?: number;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, {
        method,
        headers: body === undefined ? undefined : { "Content-Type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (failure) {
      throw new ApiError("network", String(failure), 0);
    }
    if (!response.ok) {
      let document: ErrorDocument | null = null;
      try {
        document = (await response.json()) as ErrorDocument;
      } catch {
        // non-JSON error body; fall through to the generic error below
      }
      if (document && document.error) {
        throw new ApiError(document.error.code, document.error.message, response.status);
      }
      throw new ApiError("error", `unexpected response ${response.status}`, response.status);
    }
    return (await response.json()) as T;
  }

  connect(body: ConnectRequest): Promise<ConnectResponse> {
    return this.request("POST", "/sessions", body);
  }

  async metadata(session: string): Promise<MetadataDocument> {
    const body = await this.request<{ metadata: MetadataDocument }>(
      "GET",
      `/sessions/${session}/metadata`,
    );
    return body.metadata;
  }

  startPatterns(session: string, params: PatternsRequest): Promise<{ status: string }> {
    return this.request("POST", `/sessions/${session}/patterns`, params);
  }

  pollPatterns(session: string): Promise<PatternsStatus> {
    return this.request("GET", `/sessions/${session}/patterns`);
  }

  translate(session: string, query: QueryGraphDocument): Promise<TranslateResponse> {
    return this.request("POST", `/sessions/${session}/translate`, { query });
  }

  execute(session: string): Promise<ExecuteResponse> {
    return this.request("POST", `/sessions/${session}/execute`);
  }

  result(session: string): Promise<ExecuteResponse> {
    return this.request("GET", `/sessions/${session}/result`);
  }
}
