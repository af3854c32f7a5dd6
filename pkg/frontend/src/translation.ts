/**
 * Live translation pane: the query's text form, kept current as the user
 * edits.
 *
 * Every edit fires one request. Responses can land out of order, so each
 * request takes a ticket and only the response for the newest ticket ever
 * applied may update the pane (latest wins; stale responses are dropped).
 * A failed translation shows the error banner but keeps the last good text
 * visible, since the canvas may have simply passed through an empty state.
 */

import { ApiError } from "./api.js";
import type { ApiClient } from "./api.js";
import type { QueryGraphDocument, TranslateResponse } from "./documents.js";

type Listener = () => void;

export class TranslationView {
  text = "";
  varMap: Record<string, string> = {};
  error: { code: string; message: string } | null = null;
  /** Ticket of the most recent request sent. */
  private seq = 0;
  /** Ticket of the newest response applied to the pane. */
  private applied = 0;

  private listeners: Listener[] = [];

  constructor(
    private readonly api: ApiClient,
    private readonly session: () => string | null,
  ) {}

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener();
    }
  }

  /** Fire a translate for the current canvas; resolves once settled either way. */
  async request(query: QueryGraphDocument): Promise<void> {
    const session = this.session();
    if (session === null) {
      return;
    }
    this.seq += 1;
    const ticket = this.seq;
    let response: TranslateResponse | null = null;
    let failure: ApiError | null = null;
    try {
      response = await this.api.translate(session, query);
    } catch (error) {
      if (error instanceof ApiError) {
        failure = error;
      } else {
        failure = new ApiError("error", String(error), 0);
      }
    }
    if (ticket <= this.applied) {
      return; // a newer response already drew the pane
    }
    this.applied = ticket;
    if (response !== null) {
      this.text = response.text;
      this.varMap = response.var_map;
      this.error = null;
    } else if (failure !== null) {
      this.error = { code: failure.code, message: failure.message };
      // keep this.text: the previous good translation stays readable
    }
    this.notify();
  }

  reset(): void {
    this.text = "";
    this.varMap = {};
    this.error = null;
    this.seq = 0;
    this.applied = 0;
    this.notify();
  }
}
