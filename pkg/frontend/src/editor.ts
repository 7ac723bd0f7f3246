/** Scenario editor: weight sliders, lambda slider, threshold and bounds
 * fields. Edits mutate the client-side document copy and notify the
 * workbench, which debounces re-evaluation. Invalid entries (negative
 * weight, lambda outside [0,1], inverted bounds) show a field error and
 * send nothing. */

import type { WorkbenchState } from './state.js';
import type { RequirementsDoc } from './types.js';

const THRESHOLDS: (keyof RequirementsDoc & string)[] = [
  'max_latency_ms',
  'min_success',
  'min_quality',
  'max_cost',
];

export interface EditorHooks {
  /** Called after every committed (valid) edit. */
  onEdited: () => void;
}

export class ScenarioEditor {
  private gesture: string | null = null;

  constructor(
    private readonly container: HTMLElement,
    private readonly state: WorkbenchState,
    private readonly hooks: EditorHooks,
  ) {}

  /** One undo snapshot per drag/typing gesture, not per input event. */
  private commit(field: string, mutate: (doc: NonNullable<WorkbenchState['doc']>) => void): void {
    if (this.gesture === field) {
      mutate(this.state.doc!);
      this.state.dirty = true;
    } else {
      this.state.edit(mutate);
      this.gesture = field;
    }
    this.hooks.onEdited();
  }

  private endGesture(): void {
    this.gesture = null;
  }

  private flagError(input: HTMLInputElement, message: string | null): void {
    const error = input.parentElement?.querySelector<HTMLElement>('.field-error');
    if (message) {
      input.classList.add('invalid');
      if (error) error.textContent = message;
    } else {
      input.classList.remove('invalid');
      if (error) error.textContent = '';
    }
  }

  render(): void {
    const doc = this.state.doc;
    const html = this.container.ownerDocument;
    this.container.textContent = '';
    this.gesture = null;
    if (!doc) return;

    const lambdaRow = html.createElement('div');
    lambdaRow.className = 'control-row';
    lambdaRow.innerHTML =
      `<label>missing-data penalty λ</label>` +
      `<input type="range" min="0" max="1" step="0.01" data-lambda value="${doc.lambda}">` +
      `<input type="number" min="0" max="1" step="0.01" data-lambda-value value="${doc.lambda}">` +
      `<span class="field-error"></span>`;
    this.container.appendChild(lambdaRow);
    const lambdaSlider = lambdaRow.querySelector<HTMLInputElement>('[data-lambda]')!;
    const lambdaNumber = lambdaRow.querySelector<HTMLInputElement>('[data-lambda-value]')!;
    const onLambda = (source: HTMLInputElement) => () => {
      const value = Number(source.value);
      if (!Number.isFinite(value) || value < 0 || value > 1) {
        this.flagError(lambdaNumber, 'lambda must lie in [0, 1]');
        return;
      }
      this.flagError(lambdaNumber, null);
      lambdaSlider.value = source.value;
      lambdaNumber.value = source.value;
      this.commit('lambda', (d) => {
        d.lambda = value;
      });
    };
    lambdaSlider.addEventListener('input', onLambda(lambdaSlider));
    lambdaNumber.addEventListener('input', onLambda(lambdaNumber));
    lambdaSlider.addEventListener('change', () => this.endGesture());
    lambdaNumber.addEventListener('change', () => this.endGesture());

    const weights = html.createElement('section');
    weights.className = 'weights';
    weights.innerHTML = '<h3>metric weights</h3>';
    for (const metric of doc.metrics) {
      const row = html.createElement('div');
      row.className = 'control-row';
      const sliderMax = Math.max(1, metric.weight);
      row.innerHTML =
        `<label>${metric.id} <small>(${metric.units})</small></label>` +
        `<input type="range" min="0" max="${sliderMax}" step="0.01" ` +
        `data-weight-slider="${metric.id}" value="${metric.weight}">` +
        `<input type="number" step="0.01" data-weight="${metric.id}" value="${metric.weight}">` +
        `<span class="field-error"></span>`;
      weights.appendChild(row);
      const slider = row.querySelector<HTMLInputElement>('input[type=range]')!;
      const number = row.querySelector<HTMLInputElement>('input[type=number]')!;
      const onWeight = (source: HTMLInputElement) => () => {
        const value = Number(source.value);
        if (!Number.isFinite(value) || value < 0) {
          this.flagError(number, 'weight must be >= 0');
          return;
        }
        this.flagError(number, null);
        slider.value = source.value;
        number.value = source.value;
        this.commit(`weight:${metric.id}`, (d) => {
          const target = d.metrics.find((m) => m.id === metric.id);
          if (target) target.weight = value;
        });
      };
      slider.addEventListener('input', onWeight(slider));
      number.addEventListener('input', onWeight(number));
      slider.addEventListener('change', () => this.endGesture());
      number.addEventListener('change', () => this.endGesture());
    }
    this.container.appendChild(weights);

    const thresholds = html.createElement('section');
    thresholds.className = 'thresholds';
    thresholds.innerHTML = '<h3>hard requirements</h3>';
    for (const field of THRESHOLDS) {
      const current = doc.requirements[field];
      const row = html.createElement('div');
      row.className = 'control-row';
      row.innerHTML =
        `<label>${field}</label>` +
        `<input type="number" step="any" data-threshold="${field}" ` +
        `value="${current ?? ''}" placeholder="unconstrained">` +
        `<span class="field-error"></span>`;
      thresholds.appendChild(row);
      const input = row.querySelector<HTMLInputElement>('input')!;
      input.addEventListener('input', () => {
        if (input.value.trim() === '') {
          this.flagError(input, null);
          this.commit(`threshold:${field}`, (d) => {
            delete d.requirements[field];
          });
          return;
        }
        const value = Number(input.value);
        const unitInterval = field === 'min_success' || field === 'min_quality';
        if (!Number.isFinite(value) || (unitInterval && (value < 0 || value > 1))) {
          this.flagError(input, unitInterval ? 'must lie in [0, 1]' : 'must be a number');
          return;
        }
        this.flagError(input, null);
        this.commit(`threshold:${field}`, (d) => {
          (d.requirements[field] as number) = value;
        });
      });
      input.addEventListener('change', () => this.endGesture());
    }
    this.container.appendChild(thresholds);

    const bounds = html.createElement('section');
    bounds.className = 'bounds';
    bounds.innerHTML =
      '<h3>normalization bounds <small>(blank = derived from data)</small></h3>';
    for (const metric of doc.metrics) {
      const row = html.createElement('div');
      row.className = 'control-row';
      row.innerHTML =
        `<label>${metric.id}</label>` +
        `<input type="number" step="any" data-bound="${metric.id}:min" value="${metric.min ?? ''}" placeholder="min">` +
        `<input type="number" step="any" data-bound="${metric.id}:max" value="${metric.max ?? ''}" placeholder="max">` +
        `<span class="field-error"></span>`;
      bounds.appendChild(row);
      const [minInput, maxInput] = Array.from(row.querySelectorAll<HTMLInputElement>('input'));
      const onBound = () => {
        const minRaw = minInput.value.trim();
        const maxRaw = maxInput.value.trim();
        if (minRaw === '' && maxRaw === '') {
          this.flagError(maxInput, null);
          this.commit(`bounds:${metric.id}`, (d) => {
            const target = d.metrics.find((m) => m.id === metric.id);
            if (target) {
              delete target.min;
              delete target.max;
            }
          });
          return;
        }
        const lo = Number(minRaw);
        const hi = Number(maxRaw);
        if (minRaw === '' || maxRaw === '' || !Number.isFinite(lo) || !Number.isFinite(hi)) {
          this.flagError(maxInput, 'set both min and max (or neither)');
          return;
        }
        if (lo > hi) {
          this.flagError(maxInput, 'min must not exceed max');
          return;
        }
        this.flagError(maxInput, null);
        this.commit(`bounds:${metric.id}`, (d) => {
          const target = d.metrics.find((m) => m.id === metric.id);
          if (target) {
            target.min = lo;
            target.max = hi;
          }
        });
      };
      minInput.addEventListener('input', onBound);
      maxInput.addEventListener('input', onBound);
      minInput.addEventListener('change', () => this.endGesture());
      maxInput.addEventListener('change', () => this.endGesture());
    }
    this.container.appendChild(bounds);
  }
}
