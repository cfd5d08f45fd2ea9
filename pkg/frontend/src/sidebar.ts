/** Sidebar controls: typist, session, part-of-speech and semantic filters,
 * trend-line toggles. Every control change flows through a single callback;
 * the app layer owns state, URL sync and refetching.
 */

import { TREND_LABELS } from "./scales.js";
import { clear, htmlEl } from "./svg.js";
import { POS_TAGS, TREND_KINDS, type SemanticFilter } from "./types.js";
import type { SessionSummary, TypistSummary } from "./types.js";
import type { ViewState } from "./state.js";

export interface SidebarCallbacks {
  onTypist: (typistId: string | null) => void;
  onSession: (sessionId: string | null) => void;
  onPosToggle: (tag: string, enabled: boolean) => void;
  onSemantic: (value: SemanticFilter) => void;
  onTrendToggle: (kind: string, enabled: boolean) => void;
}

export function renderSidebar(
  root: HTMLElement,
  typists: TypistSummary[],
  sessions: SessionSummary[],
  state: ViewState,
  cb: SidebarCallbacks,
): void {
  clear(root);

  root.appendChild(htmlEl("h3", {}, "Selected user"));
  const typistSelect = htmlEl("select", { id: "typist-select" });
  typistSelect.appendChild(htmlEl("option", { value: "" }, "choose a typist"));
  for (const t of typists) {
    const meta = [t.age !== null ? `${t.age}y` : null, t.gender, t.l1]
      .filter(Boolean)
      .join(", ");
    const opt = htmlEl("option", { value: t.typist_id }, `${t.typist_id} (${meta})`);
    if (t.typist_id === state.typist) opt.setAttribute("selected", "selected");
    typistSelect.appendChild(opt);
  }
  typistSelect.addEventListener("change", () =>
    cb.onTypist(typistSelect.value || null),
  );
  root.appendChild(typistSelect);

  root.appendChild(htmlEl("h3", {}, "Typing session"));
  const sessionSelect = htmlEl("select", { id: "session-select" });
  sessionSelect.appendChild(htmlEl("option", { value: "" }, "choose a session"));
  for (const s of sessions) {
    const opt = htmlEl(
      "option",
      { value: s.session_id },
      `${s.session_id}: ${s.question_id} [${s.cognitive_load}] (${s.token_count} tokens)`,
    );
    if (s.session_id === state.session) opt.setAttribute("selected", "selected");
    sessionSelect.appendChild(opt);
  }
  sessionSelect.addEventListener("change", () =>
    cb.onSession(sessionSelect.value || null),
  );
  root.appendChild(sessionSelect);

  root.appendChild(htmlEl("h3", {}, "Parts of speech"));
  const posBox = htmlEl("div", { id: "pos-filters", class: "checkbox-grid" });
  for (const tag of POS_TAGS) {
    posBox.appendChild(
      checkboxRow(`pos-${tag}`, tag, state.pos.includes(tag), (on) =>
        cb.onPosToggle(tag, on),
      ),
    );
  }
  root.appendChild(posBox);

  root.appendChild(htmlEl("h3", {}, "Semantic units"));
  const semBox = htmlEl("div", { id: "semantic-filter" });
  for (const value of ["all", "function", "content"] as const) {
    const label = htmlEl("label", { class: "radio-row" });
    const input = htmlEl("input", {
      type: "radio",
      name: "semantic",
      value,
      id: `semantic-${value}`,
    });
    if (state.semantic === value) input.setAttribute("checked", "checked");
    input.addEventListener("change", () => cb.onSemantic(value));
    label.appendChild(input);
    label.appendChild(document.createTextNode(` ${value}`));
    semBox.appendChild(label);
  }
  root.appendChild(semBox);

  root.appendChild(htmlEl("h3", {}, "Trend lines"));
  const trendBox = htmlEl("div", { id: "trend-toggles" });
  for (const kind of TREND_KINDS) {
    trendBox.appendChild(
      checkboxRow(`trend-${kind}`, TREND_LABELS[kind], state.trends.includes(kind), (on) =>
        cb.onTrendToggle(kind, on),
      ),
    );
  }
  root.appendChild(trendBox);
}

function checkboxRow(
  id: string,
  text: string,
  checked: boolean,
  onChange: (enabled: boolean) => void,
): HTMLLabelElement {
  const label = htmlEl("label", { class: "checkbox-row" });
  const input = htmlEl("input", { type: "checkbox", id });
  if (checked) input.setAttribute("checked", "checked");
  input.addEventListener("change", () => onChange(input.checked));
  label.appendChild(input);
  label.appendChild(document.createTextNode(` ${text}`));
  return label;
}
