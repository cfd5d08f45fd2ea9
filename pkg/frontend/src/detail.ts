/** Character-level token detail: per position, the observed down-down pause
 * as a red marker over the population boxplot (quartile box, median line,
 * whiskers, outlier dots). Absent pauses and empty populations render as
 * explicit "n/a" markers rather than silently vanishing.
 */

import { OBSERVED_PAUSE_COLOR } from "./scales.js";
import { clear, htmlEl, linearScale, svgEl } from "./svg.js";
import type { BoxplotStats, TokenDetailPayload } from "./types.js";

const COL_W = 64;
const PANEL_H = 300;
const MARGIN = { top: 16, right: 12, bottom: 34, left: 56 };

export function renderTokenDetail(root: HTMLElement, payload: TokenDetailPayload): void {
  clear(root);
  root.appendChild(
    htmlEl("h3", { class: "detail-title" }, `Pauses before each character of "${payload.token_text}"`),
  );

  const n = payload.observed.length;
  const width = MARGIN.left + MARGIN.right + n * COL_W;
  const innerH = PANEL_H - MARGIN.top - MARGIN.bottom;

  const values: number[] = [];
  for (const o of payload.observed) if (o.pause_ms !== null) values.push(o.pause_ms);
  for (const p of payload.population) {
    if (p.stats) values.push(p.stats.whisker_low, p.stats.whisker_high, ...p.stats.outliers);
  }
  const top = values.length ? Math.max(...values) : 1;
  const y = linearScale(0, top || 1, innerH, 0);

  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${PANEL_H}`,
    width,
    height: PANEL_H,
    class: "token-detail",
  });
  const g = svgEl("g", { transform: `translate(${MARGIN.left},${MARGIN.top})` });
  svg.appendChild(g);

  g.appendChild(svgEl("line", { x1: 0, y1: innerH, x2: n * COL_W, y2: innerH, stroke: "#888" }));
  g.appendChild(svgEl("line", { x1: 0, y1: 0, x2: 0, y2: innerH, stroke: "#888" }));
  const yMax = svgEl("text", { x: -8, y: 10, "text-anchor": "end", "font-size": 11 });
  yMax.textContent = `${Math.round(top)} ms`;
  g.appendChild(yMax);

  payload.observed.forEach((obs, i) => {
    const col = svgEl("g", {
      transform: `translate(${i * COL_W},0)`,
      class: "char-column",
      "data-position": i,
      "data-char": obs.char,
    });
    const cx = COL_W / 2;

    const stats = payload.population[i]?.stats ?? null;
    if (stats) {
      col.appendChild(boxplot(stats, cx, y));
    } else {
      const na = svgEl("text", {
        x: cx, y: innerH - 6, "text-anchor": "middle",
        "font-size": 10, fill: "#999", class: "population-na",
      });
      na.textContent = "n/a";
      col.appendChild(na);
    }

    if (obs.pause_ms !== null) {
      const flagged =
        stats !== null &&
        (obs.pause_ms > stats.whisker_high || obs.pause_ms < stats.whisker_low);
      const marker = svgEl("circle", {
        cx, cy: y(obs.pause_ms), r: 5,
        fill: OBSERVED_PAUSE_COLOR,
        class: flagged ? "observed-pause beyond-whisker" : "observed-pause",
        "data-pause-ms": obs.pause_ms,
      });
      marker.appendChild(svgEl("title", {})).textContent = `${obs.pause_ms} ms`;
      col.appendChild(marker);
    } else {
      const na = svgEl("text", {
        x: cx, y: 12, "text-anchor": "middle",
        "font-size": 10, fill: OBSERVED_PAUSE_COLOR, class: "observed-na",
      });
      na.textContent = "n/a";
      col.appendChild(na);
    }

    const label = svgEl("text", {
      x: cx, y: innerH + 18, "text-anchor": "middle", "font-size": 13, class: "char-label",
    });
    label.textContent = obs.char;
    col.appendChild(label);
    g.appendChild(col);
  });

  root.appendChild(svg);
}

function boxplot(stats: BoxplotStats, cx: number, y: (v: number) => number): SVGGElement {
  const g = svgEl("g", { class: "boxplot", "data-n": stats.n });
  const half = 16;
  g.appendChild(
    svgEl("line", {
      x1: cx, y1: y(stats.whisker_low), x2: cx, y2: y(stats.whisker_high),
      stroke: "#555", class: "whisker-line",
    }),
  );
  for (const w of [stats.whisker_low, stats.whisker_high]) {
    g.appendChild(
      svgEl("line", { x1: cx - half / 2, y1: y(w), x2: cx + half / 2, y2: y(w), stroke: "#555" }),
    );
  }
  const boxTop = y(stats.q3);
  g.appendChild(
    svgEl("rect", {
      x: cx - half, y: boxTop,
      width: half * 2, height: Math.max(y(stats.q1) - boxTop, 1),
      fill: "#cfe3f7", stroke: "#555", class: "quartile-box",
      "data-median": stats.median,
    }),
  );
  g.appendChild(
    svgEl("line", {
      x1: cx - half, y1: y(stats.median), x2: cx + half, y2: y(stats.median),
      stroke: "#222", "stroke-width": 2, class: "median-line",
    }),
  );
  for (const o of stats.outliers) {
    g.appendChild(
      svgEl("circle", { cx, cy: y(o), r: 2, fill: "none", stroke: "#777", class: "outlier-dot" }),
    );
  }
  return g;
}
