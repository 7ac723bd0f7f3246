/** Ranked tier list with feasibility verdicts and violation badges. */

import { CONSTRAINT_LABELS, type EvaluateResponse } from './types.js';

function fmt(value: number | null): string {
  return value === null ? '--' : value.toFixed(4);
}

export function renderRanking(container: HTMLElement, result: EvaluateResponse): void {
  container.textContent = '';
  const list = container.ownerDocument.createElement('ol');
  list.className = 'ranking';

  for (const tierId of result.ranking) {
    const report = result.tiers[tierId];
    const item = container.ownerDocument.createElement('li');
    item.className = 'tier feasible';
    item.dataset.tier = tierId;
    const name = tierId === result.winner ? `${tierId} ★` : tierId;
    item.innerHTML =
      `<span class="tier-name">${name}</span>` +
      `<span class="u-eff" data-field="u_eff">${fmt(report.u_eff)}</span>` +
      `<span class="detail">u_base ${fmt(report.u_base)} · phi ${fmt(report.phi)}</span>`;
    list.appendChild(item);
  }
  container.appendChild(list);

  const infeasible = Object.keys(result.tiers).filter((tid) => !result.tiers[tid].feasible);
  if (infeasible.length === 0) return;
  const rejected = container.ownerDocument.createElement('ul');
  rejected.className = 'infeasible-list';
  for (const tierId of infeasible) {
    const report = result.tiers[tierId];
    const item = container.ownerDocument.createElement('li');
    item.className = 'tier infeasible';
    item.dataset.tier = tierId;
    // Sentinel state: no utility is ever shown for an infeasible tier.
    const badges = report.violations
      .map((v) => {
        const label = CONSTRAINT_LABELS[v.constraint] ?? v.constraint;
        return `<span class="badge" title="${v.reason}">No (${label})</span>`;
      })
      .join(' ');
    item.innerHTML = `<span class="tier-name">${tierId}</span><span class="verdict">infeasible</span> ${badges}`;
    rejected.appendChild(item);
  }
  container.appendChild(rejected);
}
