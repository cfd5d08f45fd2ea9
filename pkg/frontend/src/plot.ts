/** Main session plot: cumulative keystrokes vs normalized session time.
 *
 * One point per word token (x = t_norm_end, y = cumulative_count), size and
 * darkness from the token's rate z-score, border width from its revision
 * count, plus one colored line per enabled cohort trend with a legend.
 */

import { fillFor, radiusFor, strokeFor, TREND_COLORS, TREND_LABELS } from "./scales.js";
import { clear, htmlEl, linearScale, svgEl } from "./svg.js";
import type { PlotPayload, PlotPoint } from "./types.js";

export const PLOT_WIDTH = 820;
export const PLOT_HEIGHT = 460;
const MARGIN = { top: 16, right: 20, bottom: 40, left: 60 };

export interface PlotCallbacks {
  onTokenClick: (tokenIndex: number) => void;
}

export function renderSessionPlot(
  root: HTMLElement,
  payload: PlotPayload,
  callbacks: PlotCallbacks,
): void {
  clear(root);
  if (payload.points.length === 0) {
    root.appendChild(
      htmlEl(
        "div",
        { class: "placeholder" },
        "No tokens match the current filters. Relax the part-of-speech or semantic filters to see points.",
      ),
    );
    return;
  }

  const innerW = PLOT_WIDTH - MARGIN.left - MARGIN.right;
  const innerH = PLOT_HEIGHT - MARGIN.top - MARGIN.bottom;
  const maxCount = Math.max(
    payload.session_meta.total_keystrokes,
    ...payload.points.map((p) => p.cumulative_count),
    ...payload.trends.flatMap((t) => t.mean_counts[t.mean_counts.length - 1] ?? 0),
  );
  const x = linearScale(0, 1, 0, innerW);
  const y = linearScale(0, maxCount, innerH, 0);

  const svg = svgEl("svg", {
    viewBox: `0 0 ${PLOT_WIDTH} ${PLOT_HEIGHT}`,
    width: PLOT_WIDTH,
    height: PLOT_HEIGHT,
    class: "session-plot",
  });
  const g = svgEl("g", { transform: `translate(${MARGIN.left},${MARGIN.top})` });
  svg.appendChild(g);

  g.appendChild(axes(innerW, innerH, maxCount));

  for (const trend of payload.trends) {
    const pts = trend.grid
      .map((t, i) => `${x(t)},${y(trend.mean_counts[i])}`)
      .join(" ");
    g.appendChild(
      svgEl("polyline", {
        points: pts,
        fill: "none",
        stroke: TREND_COLORS[trend.kind],
        "stroke-width": 2,
        class: `trend trend-${trend.kind}`,
        "data-kind": trend.kind,
        "data-session-count": trend.session_count,
      }),
    );
  }

  for (const p of payload.points) {
    g.appendChild(pointCircle(p, x(p.t_norm_end), y(p.cumulative_count), callbacks));
  }

  if (payload.trends.length > 0) {
    g.appendChild(legend(payload));
  }
  root.appendChild(svg);
}

function pointCircle(
  p: PlotPoint,
  cx: number,
  cy: number,
  callbacks: PlotCallbacks,
): SVGCircleElement {
  const circle = svgEl("circle", {
    cx,
    cy,
    r: radiusFor(p.rate_z),
    fill: fillFor(p.rate_z),
    stroke: "#30343a",
    "stroke-width": strokeFor(p.revision_count),
    class: "token-point",
    "data-token-index": p.token_index,
    "data-text": p.text,
    "data-rate-z": p.rate_z,
    "data-revisions": p.revision_count,
    "data-pos": p.pos,
    // hits register on the full stroke extent, keeping small tokens clickable
    "pointer-events": "all",
  });
  circle.appendChild(
    svgEl("title", {}),
  ).textContent = `${p.text} (z=${p.rate_z}, revisions=${p.revision_count}, ${p.pos})`;
  circle.addEventListener("click", () => callbacks.onTokenClick(p.token_index));
  return circle;
}

function axes(innerW: number, innerH: number, maxCount: number): SVGGElement {
  const g = svgEl("g", { class: "axes" });
  g.appendChild(
    svgEl("line", { x1: 0, y1: innerH, x2: innerW, y2: innerH, stroke: "#888" }),
  );
  g.appendChild(svgEl("line", { x1: 0, y1: 0, x2: 0, y2: innerH, stroke: "#888" }));
  for (let i = 0; i <= 10; i += 2) {
    const tx = (innerW * i) / 10;
    const label = svgEl("text", {
      x: tx,
      y: innerH + 24,
      "text-anchor": "middle",
      "font-size": 11,
    });
    label.textContent = (i / 10).toFixed(1);
    g.appendChild(label);
  }
  const xTitle = svgEl("text", {
    x: innerW / 2,
    y: innerH + 38,
    "text-anchor": "middle",
    "font-size": 12,
  });
  xTitle.textContent = "proportion of session";
  g.appendChild(xTitle);
  const yMax = svgEl("text", { x: -8, y: 10, "text-anchor": "end", "font-size": 11 });
  yMax.textContent = String(maxCount);
  g.appendChild(yMax);
  const yTitle = svgEl("text", {
    x: -40,
    y: innerH / 2,
    "text-anchor": "middle",
    "font-size": 12,
    transform: `rotate(-90 -40 ${innerH / 2})`,
  });
  yTitle.textContent = "keystrokes produced";
  g.appendChild(yTitle);
  return g;
}

function legend(payload: PlotPayload): SVGGElement {
  const g = svgEl("g", { class: "legend", transform: "translate(12,6)" });
  payload.trends.forEach((trend, i) => {
    const row = svgEl("g", { transform: `translate(0,${i * 18})` });
    row.appendChild(
      svgEl("line", {
        x1: 0, y1: 0, x2: 22, y2: 0,
        stroke: TREND_COLORS[trend.kind],
        "stroke-width": 2,
      }),
    );
    const label = svgEl("text", { x: 28, y: 4, "font-size": 11, class: "legend-label" });
    label.textContent = `${TREND_LABELS[trend.kind]} (${trend.session_count})`;
    row.appendChild(label);
    g.appendChild(row);
  });
  return g;
}
