// Accessibility theme for elderly-first use. The documented multipliers:
// primary action targets are 1.2x the base control size, contrast is
// boosted 1.3x over the neutral palette, base font scaled up.

export const BASE_CONTROL_PX = 40;
export const BUTTON_SCALE = 1.2;
export const CONTRAST_BOOST = 1.3;
export const FONT_SCALE = 1.25;

export function primaryControlPx(): number {
  return Math.round(BASE_CONTROL_PX * BUTTON_SCALE);
}

export function applyTheme(root: HTMLElement): void {
  root.style.setProperty("--control-size", `${primaryControlPx()}px`);
  root.style.setProperty("--font-size", `${Math.round(16 * FONT_SCALE)}px`);
  root.style.setProperty("--fg", "#111111");
  root.style.setProperty("--bg", "#ffffff");
  root.style.setProperty("--accent", "#0b57d0");
  root.classList.add("cb-theme");
}

export function styleAsPrimaryAction(button: HTMLButtonElement): void {
  button.style.minHeight = `${primaryControlPx()}px`;
  button.style.minWidth = `${primaryControlPx()}px`;
  button.classList.add("cb-primary-action");
}
