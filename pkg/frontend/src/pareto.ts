/** Two-objective scatter of raw metric values with the service's
 * nondominated set highlighted and dominance witnesses on hover. */

import type { ParetoResponse, ScenarioDoc } from './types.js';

const WIDTH = 420;
const HEIGHT = 300;
const PAD = 40;

function scale(value: number, lo: number, hi: number, outLo: number, outHi: number): number {
  if (lo === hi) return (outLo + outHi) / 2;
  return outLo + ((value - lo) / (hi - lo)) * (outHi - outLo);
}

export function renderPareto(
  container: HTMLElement,
  doc: ScenarioDoc,
  result: ParetoResponse,
): void {
  container.textContent = '';
  const [ox, oy] = result.objectives;
  const document = container.ownerDocument;

  const points = doc.tiers
    .filter((t) => ox in t.values && oy in t.values && !result.infeasible.includes(t.id))
    .map((t) => ({ id: t.id, x: t.values[ox], y: t.values[oy] }));

  const svg = document.createElementNS('http://www.w3.org/2000/svg', 'svg');
  svg.setAttribute('viewBox', `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute('class', 'pareto');

  if (points.length > 0) {
    const xs = points.map((p) => p.x);
    const ys = points.map((p) => p.y);
    const [xLo, xHi] = [Math.min(...xs), Math.max(...xs)];
    const [yLo, yHi] = [Math.min(...ys), Math.max(...ys)];
    for (const point of points) {
      const cx = scale(point.x, xLo, xHi, PAD, WIDTH - PAD);
      const cy = scale(point.y, yLo, yHi, HEIGHT - PAD, PAD);
      const dominatedBy = result.dominated[point.id];
      const circle = document.createElementNS('http://www.w3.org/2000/svg', 'circle');
      circle.setAttribute('cx', String(cx));
      circle.setAttribute('cy', String(cy));
      circle.setAttribute('r', '7');
      circle.setAttribute(
        'class',
        dominatedBy ? 'point dominated' : 'point nondominated',
      );
      circle.dataset.tier = point.id;
      const title = document.createElementNS('http://www.w3.org/2000/svg', 'title');
      title.textContent = dominatedBy
        ? `${point.id} (${point.x}, ${point.y}) — dominated by ${dominatedBy}`
        : `${point.id} (${point.x}, ${point.y}) — nondominated`;
      circle.appendChild(title);
      svg.appendChild(circle);

      const text = document.createElementNS('http://www.w3.org/2000/svg', 'text');
      text.setAttribute('x', String(cx + 10));
      text.setAttribute('y', String(cy + 4));
      text.textContent = point.id;
      svg.appendChild(text);
    }
  }

  const axes = document.createElementNS('http://www.w3.org/2000/svg', 'text');
  axes.setAttribute('x', String(WIDTH / 2));
  axes.setAttribute('y', String(HEIGHT - 8));
  axes.setAttribute('text-anchor', 'middle');
  axes.textContent = `${ox} (x) vs ${oy} (y)`;
  svg.appendChild(axes);
  container.appendChild(svg);

  const note = document.createElement('p');
  note.className = 'pareto-note';
  const skipped = [...result.excluded, ...result.infeasible];
  note.textContent =
    `nondominated: ${result.nondominated.join(', ') || 'none'}` +
    (skipped.length ? ` · not compared: ${skipped.join(', ')}` : '');
  container.appendChild(note);
}
