// Live event-stream subscription with resume-by-sequence.
//
// One live socket per stream. On disconnect the client reconnects with
// from_seq = last seen, so rendering stays gapless and duplicate-free; a
// seq guard drops anything the server may replay.

export interface Frame {
  type: string;
  seq: number;
  payload: Record<string, unknown>;
  session?: string;
  patient?: string;
}

export interface WebSocketLike {
  onmessage: ((event: { data: string }) => void) | null;
  onclose: (() => void) | null;
  onopen: (() => void) | null;
  close(): void;
}

export type WebSocketFactory = (url: string) => WebSocketLike;

export class EventStreamClient {
  lastSeenSeq = 0;
  private socket: WebSocketLike | null = null;
  private stopped = false;

  constructor(
    private baseUrl: string, // e.g. /ws/sessions/s-0001?token=...
    private factory: WebSocketFactory,
    private onFrame: (frame: Frame) => void,
  ) {}

  get connected(): boolean {
    return this.socket !== null;
  }

  connect(): void {
    if (this.socket || this.stopped) return; // one live subscription per stream
    const sep = this.baseUrl.includes("?") ? "&" : "?";
    const socket = this.factory(`${this.baseUrl}${sep}from_seq=${this.lastSeenSeq}`);
    this.socket = socket;
    socket.onmessage = (event) => {
      const frame = JSON.parse(event.data) as Frame;
      if (frame.seq <= this.lastSeenSeq) return; // duplicate guard
      this.lastSeenSeq = frame.seq; // monotone by construction
      this.onFrame(frame);
    };
    socket.onclose = () => {
      this.socket = null;
      if (!this.stopped) this.connect(); // auto-resume from lastSeenSeq
    };
  }

  stop(): void {
    this.stopped = true;
    this.socket?.close();
    this.socket = null;
  }
}
