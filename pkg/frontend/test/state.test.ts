import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { LatestWins, WorkbenchState, debounce } from '../src/state.js';
import type { ScenarioDoc } from '../src/types.js';

function toyDoc(): ScenarioDoc {
  return {
    name: 'toy',
    lambda: 0.2,
    metrics: [
      { id: 'latency_p99', direction: 'lower_better', weight: 0.5, units: 'ms' },
    ],
    tiers: [{ id: 'A', regulatory_ok: true, values: { latency_p99: 10 } }],
    requirements: { max_latency_ms: 100, missing_metric_policy: 'strict' },
  };
}

describe('WorkbenchState', () => {
  it('loads a private copy and starts clean', () => {
    const state = new WorkbenchState();
    const doc = toyDoc();
    state.load(doc);
    doc.lambda = 0.9;
    expect(state.doc!.lambda).toBe(0.2);
    expect(state.dirty).toBe(false);
    expect(state.canUndo).toBe(false);
  });

  it('edit marks dirty and undo restores the exact previous document', () => {
    const state = new WorkbenchState();
    state.load(toyDoc());
    state.edit((d) => {
      d.requirements.max_latency_ms = 700;
    });
    expect(state.dirty).toBe(true);
    expect(state.doc!.requirements.max_latency_ms).toBe(700);

    expect(state.undo()).toBe(true);
    expect(state.doc).toEqual(toyDoc());
    expect(state.dirty).toBe(false);
    expect(state.undo()).toBe(false);
  });

  it('stacks multiple edits and unwinds them in order', () => {
    const state = new WorkbenchState();
    state.load(toyDoc());
    state.edit((d) => (d.lambda = 0.5));
    state.edit((d) => (d.metrics[0].weight = 0.9));
    state.undo();
    expect(state.doc!.lambda).toBe(0.5);
    expect(state.doc!.metrics[0].weight).toBe(0.5);
    state.undo();
    expect(state.doc).toEqual(toyDoc());
  });
});

describe('debounce', () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it('fires once on the trailing edge with the latest arguments', () => {
    const calls: number[] = [];
    const fn = debounce((x: number) => calls.push(x), 150);
    fn(1);
    vi.advanceTimersByTime(100);
    fn(2);
    vi.advanceTimersByTime(100);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(60);
    expect(calls).toEqual([2]);
  });

  it('flush runs the pending call immediately', () => {
    const calls: number[] = [];
    const fn = debounce((x: number) => calls.push(x), 150);
    fn(7);
    fn.flush();
    expect(calls).toEqual([7]);
    fn.flush(); // nothing pending: no-op
    expect(calls).toEqual([7]);
  });

  it('cancel drops the pending call', () => {
    const calls: number[] = [];
    const fn = debounce((x: number) => calls.push(x), 150);
    fn(7);
    fn.cancel();
    vi.advanceTimersByTime(500);
    expect(calls).toEqual([]);
  });
});

describe('LatestWins', () => {
  it('aborts the previous request and reports it as superseded', async () => {
    const latest = new LatestWins();
    let firstSignal: AbortSignal | undefined;
    let releaseFirst: (value: string) => void;
    const first = latest.run((signal) => {
      firstSignal = signal;
      return new Promise<string>((resolve) => {
        releaseFirst = resolve;
      });
    });
    const second = latest.run(async () => 'second');
    expect(firstSignal!.aborted).toBe(true);
    releaseFirst!('first');
    expect(await first).toBeNull();
    expect(await second).toBe('second');
  });

  it('propagates failures of the current request only', async () => {
    const latest = new LatestWins();
    await expect(latest.run(async () => Promise.reject(new Error('boom')))).rejects.toThrow(
      'boom',
    );
  });
});
