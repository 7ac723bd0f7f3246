/** Workbench state: the editable scenario copy, the last service result,
 * and an undo stack of document snapshots.
 *
 * Every displayed number comes from a service response; this module never
 * recomputes scores or utilities client-side. */

import type { EvaluateResponse, ScenarioDoc } from './types.js';

export class WorkbenchState {
  doc: ScenarioDoc | null = null;
  lastResult: EvaluateResponse | null = null;
  dirty = false;
  private undoStack: ScenarioDoc[] = [];

  /** Replace the working document (new scenario loaded); clears history. */
  load(doc: ScenarioDoc): void {
    this.doc = structuredClone(doc);
    this.lastResult = null;
    this.dirty = false;
    this.undoStack = [];
  }

  /** Apply one edit, snapshotting the previous document for undo. */
  edit(mutate: (doc: ScenarioDoc) => void): void {
    if (!this.doc) throw new Error('no scenario loaded');
    this.undoStack.push(structuredClone(this.doc));
    mutate(this.doc);
    this.dirty = true;
  }

  get canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  /** Restore the previous document; returns false when there is nothing to undo. */
  undo(): boolean {
    const previous = this.undoStack.pop();
    if (!previous) return false;
    this.doc = previous;
    this.dirty = this.undoStack.length > 0;
    return true;
  }
}

/** Debounce helper: trailing-edge, cancellable. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
): { (...args: A): void; cancel(): void; flush(): void } {
  let timer: ReturnType<typeof setTimeout> | null = null;
  let pending: A | null = null;
  const debounced = (...args: A) => {
    pending = args;
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      const args2 = pending as A;
      pending = null;
      fn(...args2);
    }, waitMs);
  };
  debounced.cancel = () => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
    pending = null;
  };
  debounced.flush = () => {
    if (timer === null) return;
    clearTimeout(timer);
    timer = null;
    const args = pending as A;
    pending = null;
    fn(...args);
  };
  return debounced;
}

/** At most one in-flight request; starting a new one aborts the previous. */
export class LatestWins {
  private controller: AbortController | null = null;

  async run<T>(request: (signal: AbortSignal) => Promise<T>): Promise<T | null> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    try {
      const result = await request(controller.signal);
      return controller.signal.aborted ? null : result;
    } catch (error) {
      if (controller.signal.aborted) return null;
      throw error;
    } finally {
      if (this.controller === controller) this.controller = null;
    }
  }
}
