import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { QAView } from "../src/views/qa";
import { FakeServer, flush } from "./fakes";

let root: HTMLElement;
let server: FakeServer;
let api: ApiClient;
let view: QAView;

beforeEach(() => {
  document.body.innerHTML = "";
  root = document.createElement("div");
  document.body.appendChild(root);
  server = new FakeServer();
  api = new ApiClient("", server.fetch);
  view = new QAView(root, api, "p1");
});

function type(text: string): void {
  const input = root.querySelector("input.qa-input") as HTMLInputElement;
  input.value = text;
  input.dispatchEvent(new Event("input"));
}

describe("qa view", () => {
  it("send is disabled while the input is empty", () => {
    const send = root.querySelector("button.qa-send") as HTMLButtonElement;
    expect(send.disabled).toBe(true);
    type("Can I eat fruit?");
    expect(send.disabled).toBe(false);
    type("");
    expect(send.disabled).toBe(true);
  });

  it("an answer renders with tappable citation chips", async () => {
    server.qaResult = {
      kind: "answer",
      text: "Considering your records: fruit in modest portions is fine.",
      citations: ["c-metformin"],
      retrieval_score: 0.03,
    };
    type("Can I eat fruit?");
    (root.querySelector("button.qa-send") as HTMLButtonElement).click();
    await flush();
    expect(root.querySelector(".bubble.answer .answer-text")?.textContent).toContain("modest portions");
    const chip = root.querySelector(".citation-chip") as HTMLButtonElement;
    expect(chip.dataset.nodeId).toBe("c-metformin");
    chip.click();
    await flush();
    expect(root.querySelector(".explanation .term-name")?.textContent).toBe("metformin");
  });

  it("a clarification request is answered in place", async () => {
    server.qaResult = {
      kind: "clarification_request",
      text: "To answer that for you specifically, could you share your recent blood sugar readings?",
      citations: [],
      retrieval_score: 0,
    };
    type("When should I follow up?");
    (root.querySelector("button.qa-send") as HTMLButtonElement).click();
    await flush();
    const bubble = root.querySelector(".bubble.clarification") as HTMLElement;
    expect(bubble.textContent).toContain("recent blood sugar readings?");

    server.qaResult = {
      kind: "answer",
      text: "With readings around 7, a monthly follow-up is reasonable.",
      citations: ["c-metformin"],
      retrieval_score: 0.02,
    };
    const inline = bubble.querySelector("input.clarification-input") as HTMLInputElement;
    inline.value = "my readings are around 7";
    (bubble.querySelector("button.clarification-send") as HTMLButtonElement).click();
    await flush();
    expect(root.querySelector(".bubble.answer")?.textContent).toContain("monthly follow-up");
  });

  it("a failed request shows a retry affordance that works", async () => {
    server.qaFailures = 1;
    server.qaResult = {
      kind: "answer",
      text: "All good.",
      citations: ["c-metformin"],
      retrieval_score: 0.02,
    };
    type("Can I eat fruit?");
    (root.querySelector("button.qa-send") as HTMLButtonElement).click();
    await flush();
    const retry = root.querySelector(".bubble.failure button.retry") as HTMLButtonElement;
    expect(retry).toBeTruthy();
    retry.click();
    await flush();
    expect(root.querySelector(".bubble.answer")?.textContent).toContain("All good.");
  });
});
