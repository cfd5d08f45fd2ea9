/** Application shell: owns the view state, keeps it in bijection with the
 * URL query string, fetches exactly the payloads a control change affects,
 * and delegates rendering. Superseded fetches are aborted (last write wins).
 */

import {
  FetchSlot,
  fetchPlot,
  fetchSessions,
  fetchTokenDetail,
  fetchTypists,
  setBaseUrl,
} from "./api.js";
import { renderTokenDetail } from "./detail.js";
import { renderSessionPlot } from "./plot.js";
import { renderSidebar } from "./sidebar.js";
import {
  DEFAULT_STATE,
  canonical,
  parseState,
  serializeState,
  type ViewState,
} from "./state.js";
import { clear, htmlEl } from "./svg.js";
import type {
  PlotPayload,
  PosTag,
  SessionSummary,
  TokenDetailPayload,
  TrendKind,
  TypistSummary,
} from "./types.js";

export interface AppOptions {
  baseUrl?: string;
}

export class App {
  state: ViewState;
  typists: TypistSummary[] = [];
  sessions: SessionSummary[] = [];
  plot: PlotPayload | null = null;
  detail: TokenDetailPayload | null = null;
  /** Resolves when the most recent update cycle has settled (test hook). */
  settled: Promise<void> = Promise.resolve();

  private sidebarEl: HTMLElement;
  private bannerEl: HTMLElement;
  private plotEl: HTMLElement;
  private detailEl: HTMLElement;
  private sessionsSlot = new FetchSlot();
  private plotSlot = new FetchSlot();
  private detailSlot = new FetchSlot();
  private lastFailed: (() => Promise<void>) | null = null;

  constructor(root: HTMLElement, options: AppOptions = {}) {
    setBaseUrl(options.baseUrl ?? "");
    this.state = parseState(window.location.search);
    clear(root);
    const layout = htmlEl("div", { class: "layout" });
    this.sidebarEl = htmlEl("aside", { id: "sidebar" });
    const main = htmlEl("main", { id: "main" });
    this.bannerEl = htmlEl("div", { id: "error-banner", hidden: "hidden" });
    this.plotEl = htmlEl("section", { id: "plot" });
    this.detailEl = htmlEl("section", { id: "detail" });
    main.appendChild(this.bannerEl);
    main.appendChild(this.plotEl);
    main.appendChild(this.detailEl);
    layout.appendChild(this.sidebarEl);
    layout.appendChild(main);
    root.appendChild(layout);
  }

  start(): Promise<void> {
    const boot = this.guard(async () => {
      this.typists = await fetchTypists();
      if (this.state.typist) {
        this.sessions = (await fetchSessions(this.state.typist)) ?? [];
      }
      if (this.state.session) {
        this.plot = await fetchPlot(this.state);
      }
      if (this.state.session && this.state.token !== null) {
        this.detail = await fetchTokenDetail(this.state.session, this.state.token);
      }
      this.renderAll();
    });
    this.settled = boot;
    return boot;
  }

  private syncUrl(): void {
    const query = serializeState(this.state);
    const url = query ? `?${query}` : window.location.pathname;
    window.history.replaceState(null, "", url);
  }

  private setState(patch: Partial<ViewState>): void {
    this.state = canonical({ ...this.state, ...patch });
    this.syncUrl();
  }

  /** Wraps an async update; failures surface in the dismissible banner. */
  private guard(fn: () => Promise<void>): Promise<void> {
    const attempt = async () => {
      try {
        await fn();
        this.hideBanner();
      } catch (err) {
        this.lastFailed = attempt;
        this.showBanner((err as Error).message ?? String(err));
      }
    };
    const run = attempt();
    this.settled = run;
    return run;
  }

  private showBanner(message: string): void {
    clear(this.bannerEl);
    this.bannerEl.removeAttribute("hidden");
    this.bannerEl.appendChild(htmlEl("span", { class: "error-text" }, message));
    const retry = htmlEl("button", { id: "retry" }, "retry");
    retry.addEventListener("click", () => {
      const again = this.lastFailed;
      if (again) this.settled = again();
    });
    const dismiss = htmlEl("button", { id: "dismiss" }, "dismiss");
    dismiss.addEventListener("click", () => this.hideBanner());
    this.bannerEl.appendChild(retry);
    this.bannerEl.appendChild(dismiss);
  }

  private hideBanner(): void {
    this.bannerEl.setAttribute("hidden", "hidden");
    clear(this.bannerEl);
  }

  private async refreshSessions(): Promise<void> {
    if (!this.state.typist) {
      this.sessions = [];
      return;
    }
    const result = await this.sessionsSlot.run((signal) =>
      fetchSessions(this.state.typist as string, signal),
    );
    if (result !== null) this.sessions = result;
  }

  private async refreshPlot(): Promise<void> {
    if (!this.state.session) {
      this.plot = null;
      return;
    }
    const result = await this.plotSlot.run((signal) => fetchPlot(this.state, signal));
    if (result !== null) this.plot = result;
  }

  private async refreshDetail(): Promise<void> {
    if (!this.state.session || this.state.token === null) {
      this.detail = null;
      return;
    }
    const result = await this.detailSlot.run((signal) =>
      fetchTokenDetail(this.state.session as string, this.state.token as number, signal),
    );
    if (result !== null) this.detail = result;
  }

  renderAll(): void {
    renderSidebar(this.sidebarEl, this.typists, this.sessions, this.state, {
      onTypist: (typistId) => this.selectTypist(typistId),
      onSession: (sessionId) => this.selectSession(sessionId),
      onPosToggle: (tag, on) => this.togglePos(tag as PosTag, on),
      onSemantic: (value) => this.changeFilters({ semantic: value }),
      onTrendToggle: (kind, on) => this.toggleTrend(kind as TrendKind, on),
    });
    clear(this.plotEl);
    if (this.plot) {
      renderSessionPlot(this.plotEl, this.plot, {
        onTokenClick: (tokenIndex) => this.selectToken(tokenIndex),
      });
    } else {
      this.plotEl.appendChild(
        htmlEl("div", { class: "placeholder" }, "Select a typist and a session to begin."),
      );
    }
    clear(this.detailEl);
    if (this.detail) {
      renderTokenDetail(this.detailEl, this.detail);
    }
  }

  selectTypist(typistId: string | null): Promise<void> {
    // a typist change invalidates the session and token selections
    this.setState({ typist: typistId, session: null, token: null });
    return this.guard(async () => {
      await this.refreshSessions();
      await this.refreshPlot();
      await this.refreshDetail();
      this.renderAll();
    });
  }

  selectSession(sessionId: string | null): Promise<void> {
    this.setState({ session: sessionId, token: null });
    return this.guard(async () => {
      await this.refreshPlot();
      await this.refreshDetail();
      this.renderAll();
    });
  }

  changeFilters(patch: Partial<ViewState>): Promise<void> {
    this.setState(patch);
    return this.guard(async () => {
      await this.refreshPlot();
      this.renderAll();
    });
  }

  togglePos(tag: PosTag, enabled: boolean): Promise<void> {
    const pos = enabled
      ? [...this.state.pos, tag]
      : this.state.pos.filter((t) => t !== tag);
    return this.changeFilters({ pos });
  }

  toggleTrend(kind: TrendKind, enabled: boolean): Promise<void> {
    const trends = enabled
      ? [...this.state.trends, kind]
      : this.state.trends.filter((t) => t !== kind);
    return this.changeFilters({ trends });
  }

  selectToken(tokenIndex: number | null): Promise<void> {
    this.setState({ token: tokenIndex });
    return this.guard(async () => {
      await this.refreshDetail();
      this.renderAll();
    });
  }
}

export function createApp(root: HTMLElement, options: AppOptions = {}): App {
  return new App(root, options);
}

export { DEFAULT_STATE };
