import type { EditorStats } from './editor';
import {
  DECLINE_BUCKETS,
  LIKERT_KEYS,
  LIKERT_LABELS,
  USAGE_MODES,
  type FeedbackPayload,
} from './types';

/** Pre-fill the decline-rate bucket from observed dismiss/prompt counts. */
export function declineBucketFor(stats: EditorStats): string {
  if (stats.prompts === 0) return 'never';
  const rate = stats.declines / stats.prompts;
  if (rate <= 0.125) return 'never';
  if (rate <= 0.375) return '25';
  if (rate <= 0.625) return '50';
  if (rate <= 0.875) return '75';
  return 'always';
}

export function usageModeFor(stats: EditorStats): string {
  if (stats.fastPrompts > 0 && stats.hqPrompts > 0) return 'both';
  if (stats.hqPrompts > 0) return 'hq';
  return 'fast';
}

/** The submission form: eight agree/disagree statements, decline-rate and
 * mode questions, free-text fields.  Publish stays disabled until every
 * required answer is present. */
export class FeedbackForm {
  private form!: HTMLFormElement;
  private publishButton!: HTMLButtonElement;

  constructor(
    private container: HTMLElement,
    private onSubmit: (feedback: FeedbackPayload) => void,
    stats: EditorStats = { prompts: 0, declines: 0, fastPrompts: 0, hqPrompts: 0 },
  ) {
    this.build(stats);
  }

  private build(stats: EditorStats): void {
    this.container.classList.add('feedback-form');
    this.form = document.createElement('form');

    const intro = document.createElement('p');
    intro.textContent = 'Do you agree with the following statements?';
    this.form.append(intro);

    for (const key of LIKERT_KEYS) {
      const row = document.createElement('fieldset');
      row.dataset.key = key;
      const legend = document.createElement('legend');
      legend.textContent = LIKERT_LABELS[key];
      row.append(legend);
      for (let value = 1; value <= 5; value += 1) {
        const label = document.createElement('label');
        const radio = document.createElement('input');
        radio.type = 'radio';
        radio.name = `rating-${key}`;
        radio.value = String(value);
        label.append(radio, document.createTextNode(String(value)));
        row.append(label);
      }
      this.form.append(row);
    }

    this.form.append(
      this.choiceRow('decline_rate', 'How often did you decline the suggested autocompletions?', DECLINE_BUCKETS, declineBucketFor(stats)),
      this.choiceRow('autocomplete_usage', 'Which autocomplete did you use?', USAGE_MODES, usageModeFor(stats)),
      this.textRow('liked', 'What did you like?'),
      this.textRow('disliked', 'What not so much?'),
      this.textRow('comments', 'Other comments or suggestions'),
    );

    this.publishButton = document.createElement('button');
    this.publishButton.type = 'submit';
    this.publishButton.className = 'publish';
    this.publishButton.textContent = 'Publish story';
    this.publishButton.disabled = true;
    this.form.append(this.publishButton);

    this.form.addEventListener('change', () => this.refreshValidity());
    this.form.addEventListener('input', () => this.refreshValidity());
    this.form.addEventListener('submit', (event) => {
      event.preventDefault();
      const payload = this.payload();
      if (payload) this.onSubmit(payload);
    });

    this.container.innerHTML = '';
    this.container.append(this.form);
    this.refreshValidity();
  }

  private choiceRow(name: string, question: string, options: readonly string[], preset: string): HTMLElement {
    const row = document.createElement('fieldset');
    row.dataset.key = name;
    const legend = document.createElement('legend');
    legend.textContent = question;
    row.append(legend);
    for (const option of options) {
      const label = document.createElement('label');
      const radio = document.createElement('input');
      radio.type = 'radio';
      radio.name = name;
      radio.value = option;
      radio.checked = option === preset;
      label.append(radio, document.createTextNode(option));
      row.append(label);
    }
    return row;
  }

  private textRow(name: string, question: string): HTMLElement {
    const row = document.createElement('div');
    row.className = 'free-text';
    const label = document.createElement('label');
    label.textContent = question;
    const area = document.createElement('textarea');
    area.name = name;
    label.append(area);
    row.append(label);
    return row;
  }

  private selected(name: string): string | null {
    const checked = this.form.querySelector<HTMLInputElement>(`input[name="${name}"]:checked`);
    return checked ? checked.value : null;
  }

  isComplete(): boolean {
    for (const key of LIKERT_KEYS) {
      if (this.selected(`rating-${key}`) === null) return false;
    }
    return this.selected('decline_rate') !== null && this.selected('autocomplete_usage') !== null;
  }

  refreshValidity(): void {
    this.publishButton.disabled = !this.isComplete();
  }

  payload(): FeedbackPayload | null {
    if (!this.isComplete()) return null;
    const ratings: Record<string, number> = {};
    for (const key of LIKERT_KEYS) {
      ratings[key] = Number(this.selected(`rating-${key}`));
    }
    const text = (name: string) =>
      this.form.querySelector<HTMLTextAreaElement>(`textarea[name="${name}"]`)?.value ?? '';
    return {
      ratings,
      decline_rate: this.selected('decline_rate')!,
      autocomplete_usage: this.selected('autocomplete_usage')!,
      liked: text('liked'),
      disliked: text('disliked'),
      comments: text('comments'),
    };
  }
}
