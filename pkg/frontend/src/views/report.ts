// Clinician report view: the five thematic sections plus a toggle to the
// chronological timeline.

import { ApiClient, NarrativeEvent, ReportDocument } from "../api";
import { el, clear } from "../dom";
import { t } from "../i18n";

const THEMES = ["glucose", "medication", "symptoms", "knowledge", "mood"];

export class ClinicianReportView {
  mode: "thematic" | "chronological" = "thematic";
  private report: ReportDocument | null = null;
  private body: HTMLElement;

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    private patientId: string,
  ) {
    this.body = el("div", "report-body");
  }

  async render(month: string, preview = false): Promise<void> {
    this.report = await this.api.report(this.patientId, month, preview);
    const layout = el("div", "report");
    const header = el("div", "report-header");
    header.appendChild(el("h2", "report-title", `${this.report.patient_id} ${this.report.period}`));
    const toggle = el("button", "report-toggle", t("report_chronological"));
    toggle.addEventListener("click", () => {
      this.mode = this.mode === "thematic" ? "chronological" : "thematic";
      toggle.textContent = this.mode === "thematic" ? t("report_chronological") : t("report_thematic");
      this.renderBody();
    });
    header.appendChild(toggle);
    layout.appendChild(header);

    const summary = el("div", "report-summary");
    const glucose = this.report.glucose;
    summary.appendChild(
      el(
        "p",
        "glucose-summary",
        `n=${glucose.n} mean=${glucose.mean ?? "-"} TIR=${glucose.time_in_range ?? "-"}`,
      ),
    );
    summary.appendChild(el("p", "adherence-summary", `adherence=${this.report.adherence}`));
    layout.appendChild(summary);
    layout.appendChild(this.body);
    this.root.appendChild(layout);
    this.renderBody();
  }

  private renderBody(): void {
    if (!this.report) return;
    clear(this.body);
    if (this.mode === "chronological") {
      const list = el("ol", "chronological");
      for (const event of this.report.narrative.chronological) {
        list.appendChild(this.eventNode(event));
      }
      this.body.appendChild(list);
      return;
    }
    for (const theme of THEMES) {
      const section = el("section", `theme ${theme}`);
      section.appendChild(el("h3", "theme-title", theme));
      const list = el("ul", "theme-events");
      for (const event of this.report.narrative.thematic[theme] ?? []) {
        list.appendChild(this.eventNode(event));
      }
      section.appendChild(list);
      this.body.appendChild(section);
    }
  }

  private eventNode(event: NarrativeEvent): HTMLLIElement {
    return el("li", `event ${event.source}`, `${event.at} ${event.description}`);
  }
}
