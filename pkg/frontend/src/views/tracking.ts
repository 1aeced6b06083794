// Daily tracking chat: prompts and reminders render as bubbles, glucose
// quick-entry posts a reading, medication bubbles confirm or skip a dose.
// Every task completes in at most three interactions.

import { ApiClient, ApiError } from "../api";
import { el } from "../dom";
import { t } from "../i18n";
import { styleAsPrimaryAction } from "../theme";

export class TrackingChatView {
  private bubbles: HTMLElement;
  private valueInput: HTMLInputElement;

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    private patientId: string,
    private clock: () => string = () => new Date().toISOString().slice(0, 19),
  ) {
    const layout = el("div", "tracking-chat");
    this.bubbles = el("div", "bubbles");
    layout.appendChild(this.bubbles);

    // glucose quick entry: type a value (1), tap save (2)
    const entry = el("div", "glucose-entry");
    entry.appendChild(el("label", "entry-label", t("glucose_entry")));
    this.valueInput = el("input", "glucose-value") as HTMLInputElement;
    this.valueInput.type = "number";
    this.valueInput.placeholder = t("glucose_placeholder");
    const save = el("button", "glucose-save", t("save"));
    styleAsPrimaryAction(save);
    save.addEventListener("click", () => void this.saveGlucose());
    entry.appendChild(this.valueInput);
    entry.appendChild(save);
    layout.appendChild(entry);
    this.root.appendChild(layout);
  }

  async load(): Promise<void> {
    const now = this.clock();
    const [prompts, reminders, schedules] = await Promise.all([
      this.api.prompts(this.patientId, now),
      this.api.reminders(this.patientId, now),
      this.api.schedules(this.patientId),
    ]);
    for (const prompt of prompts.prompts) {
      this.bubbles.appendChild(el("div", "bubble prompt", prompt));
    }
    for (const reminder of reminders.reminders) {
      this.bubbles.appendChild(el("div", "bubble reminder", reminder));
    }
    const today = now.slice(0, 10);
    for (const schedule of schedules.schedules) {
      if (!schedule.active) continue;
      for (const timeOfDay of schedule.times_of_day) {
        this.bubbles.appendChild(this.medicationBubble(schedule, `${today}T${timeOfDay}:00`));
      }
    }
  }

  private medicationBubble(
    schedule: { med_name: string; dose: string; purpose: string },
    scheduledAt: string,
  ): HTMLElement {
    const bubble = el("div", "bubble medication");
    bubble.appendChild(
      el("p", "med-text", `${schedule.med_name} ${schedule.dose}: ${schedule.purpose}`),
    );
    const taken = el("button", "med-taken", t("taken"));
    styleAsPrimaryAction(taken);
    const skip = el("button", "med-skip", t("skip"));
    // confirming a dose is a single tap
    taken.addEventListener("click", () =>
      void this.recordDose(bubble, schedule.med_name, scheduledAt, "taken"),
    );
    skip.addEventListener("click", () =>
      void this.recordDose(bubble, schedule.med_name, scheduledAt, "missed"),
    );
    bubble.appendChild(taken);
    bubble.appendChild(skip);
    return bubble;
  }

  private async recordDose(
    bubble: HTMLElement,
    medName: string,
    scheduledAt: string,
    outcome: "taken" | "missed",
  ): Promise<void> {
    try {
      await this.api.postMedicationEvent(this.patientId, {
        med_name: medName,
        scheduled_at: scheduledAt,
        outcome,
        ...(outcome === "taken" ? { taken_at: scheduledAt } : {}),
      });
      bubble.appendChild(el("span", "confirmed", t("saved")));
      bubble.querySelectorAll("button").forEach((b) => ((b as HTMLButtonElement).disabled = true));
    } catch (error) {
      this.showError(bubble, error);
    }
  }

  private async saveGlucose(): Promise<void> {
    const value = Number(this.valueInput.value);
    try {
      await this.api.postGlucose(this.patientId, {
        taken_at: this.clock(),
        value,
        context: "postprandial",
      });
      const confirmation = el("div", "bubble confirmation", `${t("saved")}: ${value} mmol/L`);
      this.bubbles.appendChild(confirmation);
      this.valueInput.value = "";
    } catch (error) {
      this.showError(this.bubbles, error);
    }
  }

  private showError(host: HTMLElement, error: unknown): void {
    const message = error instanceof ApiError ? error.body.message : String(error);
    host.appendChild(el("div", "bubble error", message)); // echoed inline
  }
}
