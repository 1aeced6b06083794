// Per-page view state: the active view, auth binding, and one live
// stream subscription per stream key with monotone resume positions.

import { EventStreamClient, Frame, WebSocketFactory } from "./stream";

export type View =
  | "consultation"
  | "tracking_chat"
  | "qa"
  | "family_dashboard"
  | "clinician_report";

export class ViewState {
  active: View = "tracking_chat";
  token: string | null = null;
  sessionId: string | null = null;
  private subscriptions = new Map<string, EventStreamClient>();

  constructor(private factory: WebSocketFactory) {}

  subscribe(streamKey: string, url: string, onFrame: (frame: Frame) => void): EventStreamClient {
    const existing = this.subscriptions.get(streamKey);
    if (existing) return existing; // one live subscription per stream
    const client = new EventStreamClient(url, this.factory, onFrame);
    this.subscriptions.set(streamKey, client);
    client.connect();
    return client;
  }

  lastSeen(streamKey: string): number {
    return this.subscriptions.get(streamKey)?.lastSeenSeq ?? 0;
  }

  dropSubscription(streamKey: string): void {
    this.subscriptions.get(streamKey)?.stop();
    this.subscriptions.delete(streamKey);
  }
}
