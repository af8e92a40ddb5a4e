/** Debounced, fenced request scheduler.
 *
 * Guarantees: at most one request in flight; a trailing call always runs
 * after the debounce window; stale responses (superseded by a newer
 * schedule) are dropped, so the consumer only ever sees the latest result.
 */

export interface SchedulerOptions<T> {
  run: () => Promise<T>;
  onResult: (result: T) => void;
  onError?: (err: unknown) => void;
  delayMs?: number;
  setTimeoutFn?: typeof setTimeout;
  clearTimeoutFn?: typeof clearTimeout;
}

export class RequestScheduler<T> {
  private nextId = 0;
  private latestWanted = 0;
  private inFlight = false;
  private pendingTimer: ReturnType<typeof setTimeout> | null = null;
  private rerunAfterFlight = false;
  private readonly delayMs: number;
  private readonly setT: typeof setTimeout;
  private readonly clearT: typeof clearTimeout;

  constructor(private readonly opts: SchedulerOptions<T>) {
    this.delayMs = opts.delayMs ?? 120;
    this.setT = opts.setTimeoutFn ?? setTimeout;
    this.clearT = opts.clearTimeoutFn ?? clearTimeout;
  }

  /** Ask for a (re)computation. Coalesces calls within the debounce window. */
  schedule(): void {
    this.latestWanted = ++this.nextId;
    if (this.pendingTimer !== null) {
      this.clearT(this.pendingTimer);
    }
    this.pendingTimer = this.setT(() => {
      this.pendingTimer = null;
      this.fire();
    }, this.delayMs);
  }

  /** True while a request is running or queued. */
  get busy(): boolean {
    return this.inFlight || this.pendingTimer !== null;
  }

  private fire(): void {
    if (this.inFlight) {
      // a request is running; remember to go again when it settles
      this.rerunAfterFlight = true;
      return;
    }
    const id = this.latestWanted;
    this.inFlight = true;
    this.opts
      .run()
      .then((result) => {
        if (id === this.latestWanted) this.opts.onResult(result);
      })
      .catch((err) => {
        if (id === this.latestWanted && this.opts.onError) this.opts.onError(err);
      })
      .finally(() => {
        this.inFlight = false;
        if (this.rerunAfterFlight) {
          this.rerunAfterFlight = false;
          this.fire();
        }
      });
  }
}
