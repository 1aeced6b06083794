// Live consultation view: transcript pane on the right filling in seq
// order as frames arrive, deduplicated term sidebar on the left, term
// click opens the lay explanation, one-tap recording start.

import { ApiClient } from "../api";
import { el, clear } from "../dom";
import { t } from "../i18n";
import { EventStreamClient, Frame, WebSocketFactory } from "../stream";
import { styleAsPrimaryAction } from "../theme";

export class ConsultationView {
  readonly stream: EventStreamClient;
  private sidebarTerms = new Set<string>();
  private transcriptPane: HTMLElement;
  private sidebarList: HTMLUListElement;
  private explanationPanel: HTMLElement;
  private recordButton: HTMLButtonElement;
  recording = false;

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    wsUrl: string,
    factory: WebSocketFactory,
    private onRecordStart?: () => void,
  ) {
    const layout = el("div", "consultation");
    const left = el("aside", "sidebar-pane");
    left.appendChild(el("h2", "sidebar-title", t("sidebar_title")));
    this.sidebarList = el("ul", "sidebar");
    left.appendChild(this.sidebarList);
    this.explanationPanel = el("div", "explanation");
    left.appendChild(this.explanationPanel);

    const right = el("section", "transcript-pane");
    this.recordButton = el("button", "record", t("record_start"));
    styleAsPrimaryAction(this.recordButton);
    this.recordButton.addEventListener("click", () => {
      this.recording = true; // single tap, no further configuration
      this.recordButton.disabled = true;
      this.onRecordStart?.();
    });
    right.appendChild(this.recordButton);
    this.transcriptPane = el("div", "transcript");
    right.appendChild(this.transcriptPane);

    layout.appendChild(left);
    layout.appendChild(right);
    this.root.appendChild(layout);

    this.stream = new EventStreamClient(wsUrl, factory, (frame) => this.onFrame(frame));
  }

  start(): void {
    this.stream.connect();
  }

  private onFrame(frame: Frame): void {
    if (frame.type === "segment") {
      const payload = frame.payload as { seq: number; speaker: string; text: string; final: boolean };
      if (!payload.final) return; // partial segments are transported but not rendered
      const line = el("p", "line", `${payload.speaker}: ${payload.text}`);
      line.dataset.seq = String(payload.seq);
      this.transcriptPane.appendChild(line);
    } else if (frame.type === "highlight") {
      const payload = frame.payload as { node_id: string; surface: string };
      if (this.sidebarTerms.has(payload.node_id)) return; // dedup, first-mention order
      this.sidebarTerms.add(payload.node_id);
      const item = el("li", "term", payload.surface);
      item.dataset.nodeId = payload.node_id;
      item.addEventListener("click", () => void this.showExplanation(payload.node_id));
      this.sidebarList.appendChild(item);
    } else if (frame.type === "pipeline_error") {
      this.transcriptPane.appendChild(el("p", "pipeline-error", "…"));
    }
  }

  async showExplanation(nodeId: string): Promise<void> {
    const detail = await this.api.term(nodeId);
    clear(this.explanationPanel);
    this.explanationPanel.appendChild(el("h3", "term-name", detail.canonical_name));
    this.explanationPanel.appendChild(el("p", "term-text", detail.lay_explanation));
    for (const [relation, other] of detail.related.slice(0, 6)) {
      this.explanationPanel.appendChild(el("span", "related-term", `${relation}: ${other}`));
    }
  }

  transcriptLines(): string[] {
    return Array.from(this.transcriptPane.querySelectorAll("p.line")).map(
      (n) => (n as HTMLElement).dataset.seq ?? "",
    );
  }
}
