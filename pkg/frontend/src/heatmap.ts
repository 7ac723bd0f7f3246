/** Tiers-by-metrics grid of normalized scores on a 0-1 color scale.
 * Cell values are the service's scores verbatim; infeasible tiers are
 * greyed out with no numbers (the engine does not score them). */

import type { EvaluateResponse, ScenarioDoc } from './types.js';

export function scoreColor(score: number): string {
  // 0 -> red, 0.5 -> yellow, 1 -> green.
  const hue = Math.round(120 * Math.min(1, Math.max(0, score)));
  return `hsl(${hue}, 70%, 55%)`;
}

export function renderHeatmap(
  container: HTMLElement,
  doc: ScenarioDoc,
  result: EvaluateResponse,
): void {
  container.textContent = '';
  const table = container.ownerDocument.createElement('table');
  table.className = 'heatmap';

  const head = table.createTHead().insertRow();
  head.appendChild(container.ownerDocument.createElement('th'));
  for (const metric of doc.metrics) {
    const th = container.ownerDocument.createElement('th');
    th.textContent = metric.id;
    head.appendChild(th);
  }

  const body = table.createTBody();
  for (const tier of doc.tiers) {
    const report = result.tiers[tier.id];
    const row = body.insertRow();
    row.dataset.tier = tier.id;
    if (!report?.feasible) row.className = 'infeasible';
    const label = row.insertCell();
    label.outerHTML = `<th>${tier.id}</th>`;
    for (const metric of doc.metrics) {
      const cell = row.insertCell();
      cell.dataset.metric = metric.id;
      const score = report?.feasible ? report.scores[metric.id] : undefined;
      if (score === undefined) {
        cell.className = 'empty';
        continue;
      }
      cell.textContent = score.toFixed(3);
      cell.style.backgroundColor = scoreColor(score);
      cell.title = `${tier.id} / ${metric.id}: ${score}`;
    }
  }
  container.appendChild(table);
}
