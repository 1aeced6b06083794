// Chinese-first strings with an English translation table.

const ZH: Record<string, string> = {
  record_start: "一键录音",
  sidebar_title: "医学词语",
  send: "发送",
  ask_placeholder: "输入您的问题…",
  glucose_entry: "记录血糖",
  glucose_placeholder: "血糖值 (mmol/L)",
  save: "保存",
  taken: "已服用",
  skip: "跳过",
  locked: "未授权",
  adherence: "服药情况",
  trend: "血糖趋势",
  alerts: "关爱提醒",
  report_chronological: "按时间",
  report_thematic: "按主题",
  retry: "重试",
  saved: "已保存",
};

const EN: Record<string, string> = {
  record_start: "One-tap recording",
  sidebar_title: "Medical terms",
  send: "Send",
  ask_placeholder: "Type your question…",
  glucose_entry: "Log blood sugar",
  glucose_placeholder: "Reading (mmol/L)",
  save: "Save",
  taken: "Taken",
  skip: "Skip",
  locked: "Not shared",
  adherence: "Medication",
  trend: "Glucose trend",
  alerts: "Care alerts",
  report_chronological: "By time",
  report_thematic: "By theme",
  retry: "Retry",
  saved: "Saved",
};

let language: "zh" | "en" = "zh";

export function setLanguage(next: "zh" | "en"): void {
  language = next;
}

export function t(key: string): string {
  const table = language === "zh" ? ZH : EN;
  return table[key] ?? EN[key] ?? key;
}
