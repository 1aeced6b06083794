import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { FamilyDashboardView } from "../src/views/dashboard";
import { alertFrame, FakeServer, FakeSocketHub, flush } from "./fakes";

let root: HTMLElement;
let server: FakeServer;
let api: ApiClient;
let hub: FakeSocketHub;

beforeEach(() => {
  document.body.innerHTML = "";
  root = document.createElement("div");
  document.body.appendChild(root);
  server = new FakeServer();
  api = new ApiClient("", server.fetch);
  hub = new FakeSocketHub();
});

function dashboard(): FamilyDashboardView {
  return new FamilyDashboardView(root, api, "p1", "/ws/patients/p1/alerts?token=t", hub.factory, {
    start: "2025-06-01T00:00:00",
    end: "2025-07-01T00:00:00",
  });
}

describe("family dashboard", () => {
  it("ungranted scopes render as locked tiles, never as data", async () => {
    server.scopes = ["glucose_trends"];
    server.glucose = [
      { taken_at: "2025-06-01T08:00:00", value: 6.8, context: "fasting" },
      { taken_at: "2025-06-02T08:00:00", value: 7.4, context: "fasting" },
    ];
    const view = dashboard();
    await view.render();
    await flush();

    const medication = view.tile("medication_status")!;
    expect(medication.classList.contains("locked")).toBe(true);
    expect(medication.querySelector(".locked-label")).toBeTruthy();
    expect(medication.querySelector(".adherence-gauge")).toBeNull();
    // no adherence request was ever made for the locked tile
    expect(server.requests.some((r) => r.path.endsWith("/adherence"))).toBe(false);

    const trend = view.tile("glucose_trends")!;
    expect(trend.classList.contains("locked")).toBe(false);
    expect(trend.querySelector("svg.trend-line polyline")).toBeTruthy();

    expect(view.tile("alerts")!.classList.contains("locked")).toBe(true);
  });

  it("granted tiles show data", async () => {
    server.scopes = ["glucose_trends", "medication_status", "alerts"];
    server.adherenceValue = 0.85;
    const view = dashboard();
    await view.render();
    await flush();
    const gauge = view.tile("medication_status")!.querySelector(".adherence-gauge") as HTMLElement;
    expect(gauge.textContent).toBe("85%");
    expect(gauge.dataset.fraction).toBe("0.850");
  });

  it("an alert frame raises the banner without a refresh", async () => {
    server.scopes = ["alerts"];
    const view = dashboard();
    await view.render();
    await flush();
    expect(root.querySelector(".alert-banner .alert")).toBeNull();
    hub.push(alertFrame(1, "hyperglycemia"));
    await flush();
    expect(root.querySelector(".alert-banner .alert.hyperglycemia")?.textContent).toBe(
      "hyperglycemia",
    );
  });

  it("alert banner survives a forced disconnect and resumes", async () => {
    server.scopes = ["alerts"];
    const view = dashboard();
    await view.render();
    await flush();
    hub.push(alertFrame(1, "hyperglycemia"));
    await flush();
    hub.forceDisconnect();
    hub.push(alertFrame(2, "tracking_gap"));
    await flush();
    const kinds = Array.from(root.querySelectorAll(".alert-banner .alert")).map((n) => n.textContent);
    expect(kinds).toEqual(["hyperglycemia", "tracking_gap"]);
  });
});
