// Free-text Q&A: answers carry tappable citation chips; a clarification
// request renders as a follow-up question answered in place; failures
// show a retry affordance. Send stays disabled while the input is empty.

import { ApiClient } from "../api";
import { el, clear } from "../dom";
import { t } from "../i18n";
import { styleAsPrimaryAction } from "../theme";

export class QAView {
  private thread: HTMLElement;
  private input: HTMLInputElement;
  private send: HTMLButtonElement;
  private explanation: HTMLElement;

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    private patientId: string,
  ) {
    const layout = el("div", "qa-view");
    this.thread = el("div", "qa-thread");
    layout.appendChild(this.thread);

    const composer = el("div", "composer");
    this.input = el("input", "qa-input") as HTMLInputElement;
    this.input.placeholder = t("ask_placeholder");
    this.send = el("button", "qa-send", t("send"));
    styleAsPrimaryAction(this.send);
    this.send.disabled = true;
    this.input.addEventListener("input", () => {
      this.send.disabled = this.input.value.trim() === "";
    });
    this.send.addEventListener("click", () => void this.ask(this.input.value.trim()));
    composer.appendChild(this.input);
    composer.appendChild(this.send);
    layout.appendChild(composer);

    this.explanation = el("div", "explanation");
    layout.appendChild(this.explanation);
    this.root.appendChild(layout);
  }

  async ask(question: string): Promise<void> {
    if (!question) return;
    this.thread.appendChild(el("div", "bubble question", question));
    this.input.value = "";
    this.send.disabled = true;
    try {
      const result = await this.api.qa(this.patientId, question);
      if (result.kind === "clarification_request") {
        // the follow-up is answered in place: an inline input under the bubble
        const bubble = el("div", "bubble clarification");
        bubble.appendChild(el("p", "clarification-text", result.text));
        const inline = el("input", "clarification-input") as HTMLInputElement;
        const reply = el("button", "clarification-send", t("send"));
        reply.addEventListener("click", () =>
          void this.ask(`${question} ${inline.value.trim()}`),
        );
        bubble.appendChild(inline);
        bubble.appendChild(reply);
        this.thread.appendChild(bubble);
        return;
      }
      const bubble = el("div", "bubble answer");
      bubble.appendChild(el("p", "answer-text", result.text));
      for (const nodeId of result.citations) {
        const chip = el("button", "citation-chip", nodeId);
        chip.dataset.nodeId = nodeId;
        chip.addEventListener("click", () => void this.showTerm(nodeId));
        bubble.appendChild(chip);
      }
      this.thread.appendChild(bubble);
    } catch {
      const bubble = el("div", "bubble failure");
      const retry = el("button", "retry", t("retry"));
      retry.addEventListener("click", () => {
        bubble.remove();
        void this.ask(question);
      });
      bubble.appendChild(retry);
      this.thread.appendChild(bubble);
    }
  }

  private async showTerm(nodeId: string): Promise<void> {
    const detail = await this.api.term(nodeId);
    clear(this.explanation);
    this.explanation.appendChild(el("h3", "term-name", detail.canonical_name));
    this.explanation.appendChild(el("p", "term-text", detail.lay_explanation));
  }
}
