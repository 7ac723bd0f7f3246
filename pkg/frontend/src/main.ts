/** Workbench wiring: scenario selector, editor, ranking, heatmap and
 * Pareto views, undo, and the debounced evaluate loop.
 *
 * All math lives in the service; this module only ships documents out and
 * renders responses. At most one evaluate request is in flight at a time
 * (latest wins). */

import { ApiClient, ApiError } from './api.js';
import { ScenarioEditor } from './editor.js';
import { renderHeatmap } from './heatmap.js';
import { renderPareto } from './pareto.js';
import { renderRanking } from './ranking.js';
import { LatestWins, WorkbenchState, debounce } from './state.js';

export interface WorkbenchOptions {
  /** Debounce for slider-driven re-evaluation; 150 ms unless overridden. */
  debounceMs?: number;
}

export class Workbench {
  readonly state = new WorkbenchState();
  private readonly editor: ScenarioEditor;
  private readonly evaluateLater: { (): void; cancel(): void; flush(): void };
  private readonly evaluations = new LatestWins();
  private readonly paretoRequests = new LatestWins();
  private inflight: Promise<void> = Promise.resolve();
  private readonly els: Record<string, HTMLElement>;

  constructor(
    root: HTMLElement,
    private readonly api: ApiClient,
    options: WorkbenchOptions = {},
  ) {
    root.innerHTML = `
      <header class="toolbar">
        <select data-role="scenario-select"></select>
        <button data-role="undo" disabled>undo</button>
        <span data-role="dirty" class="dirty-flag"></span>
        <span data-role="status"></span>
      </header>
      <div data-role="errors" class="error-bar"></div>
      <main class="panels">
        <section data-role="editor" class="panel editor-panel"></section>
        <section class="panel results-panel">
          <h2>ranking</h2>
          <div data-role="ranking"></div>
          <h2>score heatmap</h2>
          <div data-role="heatmap"></div>
          <h2>pareto front</h2>
          <div class="pareto-controls">
            <select data-role="objective-x"></select>
            <select data-role="objective-y"></select>
          </div>
          <div data-role="pareto"></div>
        </section>
      </main>`;
    const find = (role: string) =>
      root.querySelector<HTMLElement>(`[data-role="${role}"]`)!;
    this.els = {
      select: find('scenario-select'),
      undo: find('undo'),
      dirty: find('dirty'),
      status: find('status'),
      errors: find('errors'),
      editor: find('editor'),
      ranking: find('ranking'),
      heatmap: find('heatmap'),
      paretoX: find('objective-x'),
      paretoY: find('objective-y'),
      pareto: find('pareto'),
    };
    this.editor = new ScenarioEditor(this.els.editor, this.state, {
      onEdited: () => {
        this.syncToolbar();
        this.evaluateLater();
      },
    });
    this.evaluateLater = debounce(() => {
      this.inflight = this.evaluateNow();
    }, options.debounceMs ?? 150);
    this.els.undo.addEventListener('click', () => this.undo());
    this.els.select.addEventListener('change', () => {
      const name = (this.els.select as HTMLSelectElement).value;
      this.inflight = this.loadScenario(name);
    });
    for (const el of [this.els.paretoX, this.els.paretoY]) {
      el.addEventListener('change', () => {
        this.inflight = this.refreshPareto();
      });
    }
  }

  /** Populate the scenario list and load the first entry. */
  async init(preferred?: string): Promise<void> {
    const summaries = await this.api.listScenarios();
    const select = this.els.select as HTMLSelectElement;
    select.innerHTML = summaries
      .map((s) => `<option value="${s.name}">${s.name} (${s.tier_count} tiers)</option>`)
      .join('');
    const name = preferred ?? summaries[0]?.name;
    if (name) {
      select.value = name;
      await this.loadScenario(name);
    }
  }

  async loadScenario(name: string): Promise<void> {
    const doc = await this.api.getScenario(name);
    this.state.load(doc);
    this.editor.render();
    this.populateObjectiveSelectors();
    this.syncToolbar();
    await this.evaluateNow();
  }

  /** Undo one edit and re-evaluate (service statelessness guarantees the
   * previous ranking comes back exactly). */
  undo(): void {
    if (!this.state.undo()) return;
    this.editor.render();
    this.syncToolbar();
    this.inflight = this.evaluateNow();
  }

  /** Flush the debounce and wait until no request is in flight. */
  async whenIdle(): Promise<void> {
    this.evaluateLater.flush();
    await this.inflight;
  }

  private populateObjectiveSelectors(): void {
    const doc = this.state.doc;
    if (!doc) return;
    const options = doc.metrics
      .map((m) => `<option value="${m.id}">${m.id}</option>`)
      .join('');
    (this.els.paretoX as HTMLSelectElement).innerHTML = options;
    (this.els.paretoY as HTMLSelectElement).innerHTML = options;
    if (doc.metrics.length > 1) {
      (this.els.paretoX as HTMLSelectElement).value = doc.metrics[0].id;
      (this.els.paretoY as HTMLSelectElement).value = doc.metrics[1].id;
    }
  }

  private syncToolbar(): void {
    (this.els.undo as HTMLButtonElement).disabled = !this.state.canUndo;
    this.els.dirty.textContent = this.state.dirty ? 'edited' : '';
  }

  private showErrors(errors: { field: string; message: string }[]): void {
    this.els.errors.innerHTML = errors
      .map((e) => `<span class="error">${e.field}: ${e.message}</span>`)
      .join(' ');
    // Best effort: surface the error next to the field it names.
    for (const error of errors) {
      const weight = /\$\.metrics\[(\d+)\]\.weight/.exec(error.field);
      if (weight && this.state.doc) {
        const id = this.state.doc.metrics[Number(weight[1])]?.id;
        const input = this.els.editor.querySelector(`input[data-weight="${id}"]`);
        input?.classList.add('invalid');
      }
      const requirement = /requirements\.(\w+)/.exec(error.field);
      if (requirement) {
        const input = this.els.editor.querySelector(
          `input[data-threshold="${requirement[1]}"]`,
        );
        input?.classList.add('invalid');
      }
    }
  }

  private async evaluateNow(): Promise<void> {
    const doc = this.state.doc;
    if (!doc) return;
    this.els.status.textContent = 'evaluating…';
    try {
      const result = await this.evaluations.run((signal) =>
        this.api.evaluate(doc, signal),
      );
      if (result === null) return; // superseded by a newer request
      this.state.lastResult = result;
      this.els.errors.textContent = '';
      renderRanking(this.els.ranking, result);
      renderHeatmap(this.els.heatmap, doc, result);
      this.els.status.textContent = `engine ${result.engine_version} · λ=${result.lambda}`;
      await this.refreshPareto();
    } catch (error) {
      if (error instanceof ApiError) {
        this.showErrors(error.errors);
        this.els.status.textContent = `service rejected the scenario (${error.status})`;
      } else {
        this.els.status.textContent = `service unreachable: ${String(error)}`;
      }
    }
  }

  private async refreshPareto(): Promise<void> {
    const doc = this.state.doc;
    if (!doc || doc.metrics.length === 0) return;
    const ox = (this.els.paretoX as HTMLSelectElement).value || doc.metrics[0].id;
    const oy =
      (this.els.paretoY as HTMLSelectElement).value ||
      doc.metrics[Math.min(1, doc.metrics.length - 1)].id;
    const objectives = ox === oy ? [ox] : [ox, oy];
    try {
      const result = await this.paretoRequests.run((signal) =>
        this.api.pareto(doc, objectives, signal),
      );
      if (result !== null) renderPareto(this.els.pareto, doc, result);
    } catch (error) {
      if (!(error instanceof ApiError)) throw error;
      this.els.pareto.textContent = `pareto request rejected: ${error.message}`;
    }
  }
}

export function createWorkbench(
  root: HTMLElement,
  api: ApiClient,
  options: WorkbenchOptions = {},
): Workbench {
  return new Workbench(root, api, options);
}

export function bootFromDocument(doc: Document): Workbench | null {
  const root = doc.getElementById('app');
  if (!root) return null;
  const params = new URLSearchParams(doc.defaultView?.location.search ?? '');
  const base = params.get('api') ?? 'http://127.0.0.1:8000';
  const workbench = createWorkbench(root, new ApiClient(base));
  void workbench.init();
  return workbench;
}
