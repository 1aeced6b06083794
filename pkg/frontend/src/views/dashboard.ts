// Family dashboard: one tile per scope. Ungranted scopes render as locked
// tiles and never as empty data; the alert banner fills from live alert
// frames without a refresh.

import { ApiClient } from "../api";
import { el } from "../dom";
import { t } from "../i18n";
import { EventStreamClient, Frame, WebSocketFactory } from "../stream";

const TILE_SCOPES = ["glucose_trends", "medication_status", "alerts"] as const;

export class FamilyDashboardView {
  stream: EventStreamClient | null = null;
  private tiles = new Map<string, HTMLElement>();
  private banner: HTMLElement;

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    private patientId: string,
    private wsUrl: string,
    private factory: WebSocketFactory,
    private window: { start: string; end: string },
  ) {
    this.banner = el("div", "alert-banner");
  }

  async render(): Promise<void> {
    const layout = el("div", "dashboard");
    layout.appendChild(this.banner);
    const { scopes } = await this.api.scopes(this.patientId);
    const granted = new Set(scopes);

    for (const scope of TILE_SCOPES) {
      const tile = el("div", granted.has(scope) ? `tile ${scope}` : `tile locked ${scope}`);
      this.tiles.set(scope, tile);
      layout.appendChild(tile);
      if (!granted.has(scope)) {
        tile.appendChild(el("p", "locked-label", `${t("locked")}`));
        continue;
      }
      if (scope === "glucose_trends") await this.renderTrend(tile);
      if (scope === "medication_status") await this.renderAdherence(tile);
      if (scope === "alerts") this.subscribeAlerts(tile);
    }
    this.root.appendChild(layout);
  }

  private async renderTrend(tile: HTMLElement): Promise<void> {
    tile.appendChild(el("h3", "tile-title", t("trend")));
    const series = await this.api.glucoseSeries(this.patientId);
    const values = series.map((r) => r.value);
    const svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
    svg.setAttribute("viewBox", "0 0 100 40");
    svg.classList.add("trend-line");
    if (values.length > 1) {
      const max = Math.max(...values);
      const min = Math.min(...values);
      const span = max - min || 1;
      const points = values
        .map((v, i) => `${(i / (values.length - 1)) * 100},${40 - ((v - min) / span) * 36 - 2}`)
        .join(" ");
      const line = document.createElementNS("http://www.w3.org/2000/svg", "polyline");
      line.setAttribute("points", points);
      line.setAttribute("fill", "none");
      line.setAttribute("stroke", "currentColor");
      svg.appendChild(line);
    }
    tile.appendChild(svg);
  }

  private async renderAdherence(tile: HTMLElement): Promise<void> {
    tile.appendChild(el("h3", "tile-title", t("adherence")));
    const { adherence } = await this.api.adherence(
      this.patientId,
      this.window.start,
      this.window.end,
    );
    const gauge = el("div", "adherence-gauge", `${Math.round(adherence * 100)}%`);
    gauge.dataset.fraction = adherence.toFixed(3);
    tile.appendChild(gauge);
  }

  private subscribeAlerts(tile: HTMLElement): void {
    tile.appendChild(el("h3", "tile-title", t("alerts")));
    this.stream = new EventStreamClient(this.wsUrl, this.factory, (frame) =>
      this.onAlertFrame(frame),
    );
    this.stream.connect();
  }

  private onAlertFrame(frame: Frame): void {
    if (frame.type !== "alert") return;
    const payload = frame.payload as { kind: string; alert_id: string };
    this.banner.appendChild(el("div", `alert ${payload.kind}`, payload.kind));
  }

  tile(scope: string): HTMLElement | undefined {
    return this.tiles.get(scope);
  }
}
