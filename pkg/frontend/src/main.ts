// Page bootstrap: login, theme, view switching. The real browser uses the
// native WebSocket; tests inject doubles everywhere below this file.

import { ApiClient } from "./api";
import { applyTheme } from "./theme";
import { ViewState } from "./viewstate";
import { ConsultationView } from "./views/consultation";
import { TrackingChatView } from "./views/tracking";
import { QAView } from "./views/qa";
import { FamilyDashboardView } from "./views/dashboard";
import { ClinicianReportView } from "./views/report";
import { el, clear } from "./dom";

const nativeWs = (url: string) => new WebSocket(url) as unknown as import("./stream").WebSocketLike;

export function boot(root: HTMLElement, baseUrl = ""): void {
  applyTheme(root);
  const api = new ApiClient(baseUrl);
  const state = new ViewState(nativeWs);
  const wsBase = baseUrl.replace(/^http/, "ws");

  const nav = el("nav", "views");
  const stage = el("main", "stage");
  root.appendChild(nav);
  root.appendChild(stage);

  const loginBox = el("div", "login");
  const principal = el("input", "login-principal") as HTMLInputElement;
  principal.placeholder = "id";
  const password = el("input", "login-password") as HTMLInputElement;
  password.type = "password";
  const go = el("button", "login-go", "OK");
  go.addEventListener("click", async () => {
    state.token = await api.login(principal.value, password.value);
    loginBox.remove();
    renderNav(principal.value);
  });
  loginBox.appendChild(principal);
  loginBox.appendChild(password);
  loginBox.appendChild(go);
  root.appendChild(loginBox);

  function renderNav(patientId: string): void {
    const entries: [string, () => void][] = [
      ["chat", () => void new TrackingChatView(freshStage(), api, patientId).load()],
      ["qa", () => new QAView(freshStage(), api, patientId)],
      [
        "dashboard",
        () =>
          void new FamilyDashboardView(
            freshStage(),
            api,
            patientId,
            `${wsBase}/ws/patients/${patientId}/alerts?token=${state.token}`,
            nativeWs,
            { start: monthAgo(), end: now() },
          ).render(),
      ],
      [
        "report",
        () => void new ClinicianReportView(freshStage(), api, patientId).render(currentMonth(), true),
      ],
    ];
    for (const [label, open] of entries) {
      const button = el("button", `nav-${label}`, label);
      button.addEventListener("click", open);
      nav.appendChild(button);
    }
  }

  function freshStage(): HTMLElement {
    clear(stage);
    return stage;
  }
}

export function openConsultation(
  root: HTMLElement,
  api: ApiClient,
  token: string,
  sessionId: string,
  wsBase: string,
): ConsultationView {
  const view = new ConsultationView(
    root,
    api,
    `${wsBase}/ws/sessions/${sessionId}?token=${token}`,
    nativeWs,
  );
  view.start();
  return view;
}

function now(): string {
  return new Date().toISOString().slice(0, 19);
}

function monthAgo(): string {
  const d = new Date(Date.now() - 30 * 86400 * 1000);
  return d.toISOString().slice(0, 19);
}

function currentMonth(): string {
  return new Date().toISOString().slice(0, 7);
}
