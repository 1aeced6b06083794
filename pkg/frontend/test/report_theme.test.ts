import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { BASE_CONTROL_PX, BUTTON_SCALE, CONTRAST_BOOST, primaryControlPx, styleAsPrimaryAction } from "../src/theme";
import { ClinicianReportView } from "../src/views/report";
import { FakeServer, flush } from "./fakes";

let root: HTMLElement;
let server: FakeServer;
let api: ApiClient;

const REPORT = {
  patient_id: "p1",
  period: "2025-06",
  glucose: { mean: 7.79, sd: 1.5, slope_per_day: 0.05, time_in_range: 0.98, n: 46 },
  adherence: 0.93,
  symptom_frequency: { fatigue: 2 },
  knowledge_gaps: [["diet", 1]],
  sentiment: { distribution: { anxiety: 0.2, confusion: 0.1, satisfaction: 0.2, neutral: 0.5 } },
  open_alerts: [],
  narrative: {
    chronological: [
      { at: "2025-06-01T06:45:00", source: "glucose", description: "6.2 mmol/L (fasting)" },
      { at: "2025-06-01T08:00:00", source: "medication", description: "metformin taken" },
    ],
    thematic: {
      glucose: [{ at: "2025-06-01T06:45:00", source: "glucose", description: "6.2 mmol/L (fasting)" }],
      medication: [{ at: "2025-06-01T08:00:00", source: "medication", description: "metformin taken" }],
      symptoms: [],
      knowledge: [],
      mood: [],
    },
  },
};

beforeEach(() => {
  document.body.innerHTML = "";
  root = document.createElement("div");
  document.body.appendChild(root);
  server = new FakeServer();
  server.report = REPORT;
  api = new ApiClient("", server.fetch);
});

describe("clinician report view", () => {
  it("renders all five thematic sections", async () => {
    await new ClinicianReportView(root, api, "p1").render("2025-06");
    const titles = Array.from(root.querySelectorAll(".theme-title")).map((n) => n.textContent);
    expect(titles).toEqual(["glucose", "medication", "symptoms", "knowledge", "mood"]);
    expect(root.querySelector(".theme.glucose .event")?.textContent).toContain("6.2 mmol/L");
  });

  it("toggles between thematic and chronological organization", async () => {
    const view = new ClinicianReportView(root, api, "p1");
    await view.render("2025-06");
    expect(view.mode).toBe("thematic");
    (root.querySelector("button.report-toggle") as HTMLButtonElement).click();
    await flush();
    expect(view.mode).toBe("chronological");
    const events = Array.from(root.querySelectorAll("ol.chronological .event")).map(
      (n) => n.textContent,
    );
    expect(events?.length).toBe(2);
    expect(events?.[0]).toContain("06:45");
  });
});

describe("accessibility theme", () => {
  it("primary action targets are at least 1.2x the base control size", () => {
    expect(BUTTON_SCALE).toBeGreaterThanOrEqual(1.2);
    expect(primaryControlPx()).toBeGreaterThanOrEqual(Math.round(BASE_CONTROL_PX * 1.2));
    const button = document.createElement("button");
    styleAsPrimaryAction(button);
    expect(parseInt(button.style.minHeight, 10)).toBeGreaterThanOrEqual(48);
  });

  it("documents the contrast boost multiplier", () => {
    expect(CONTRAST_BOOST).toBeGreaterThanOrEqual(1.3);
  });
});
