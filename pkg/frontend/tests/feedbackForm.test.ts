import { beforeEach, describe, expect, it } from 'vitest';

import { declineBucketFor, FeedbackForm, usageModeFor } from '../src/feedbackForm';
import { LIKERT_KEYS, type FeedbackPayload } from '../src/types';

function fillLikert(container: HTMLElement, value = 4): void {
  for (const key of LIKERT_KEYS) {
    const radio = container.querySelector<HTMLInputElement>(`input[name="rating-${key}"][value="${value}"]`)!;
    radio.checked = true;
    radio.dispatchEvent(new Event('change', { bubbles: true }));
  }
}

describe('FeedbackForm', () => {
  let container: HTMLElement;
  let submitted: FeedbackPayload | null;

  beforeEach(() => {
    document.body.innerHTML = '';
    container = document.createElement('div');
    document.body.append(container);
    submitted = null;
  });

  it('renders the eight statements plus decline and mode questions', () => {
    new FeedbackForm(container, (f) => (submitted = f));
    expect(container.querySelectorAll('fieldset[data-key]')).toHaveLength(10);
  });

  it('publish stays disabled until the form is complete', () => {
    const form = new FeedbackForm(container, (f) => (submitted = f));
    const button = container.querySelector<HTMLButtonElement>('button.publish')!;
    expect(button.disabled).toBe(true);

    fillLikert(container);
    form.refreshValidity();
    // decline_rate and autocomplete_usage are pre-filled from stats, so the
    // Likert block was the only missing part.
    expect(button.disabled).toBe(false);
  });

  it('an unanswered statement keeps publish disabled', () => {
    const form = new FeedbackForm(container, (f) => (submitted = f));
    fillLikert(container);
    const first = container.querySelector<HTMLInputElement>(`input[name="rating-${LIKERT_KEYS[0]}"]:checked`)!;
    first.checked = false;
    form.refreshValidity();
    expect(container.querySelector<HTMLButtonElement>('button.publish')!.disabled).toBe(true);
  });

  it('submitting a complete form yields the full payload', () => {
    new FeedbackForm(container, (f) => (submitted = f), {
      prompts: 4,
      declines: 1,
      fastPrompts: 2,
      hqPrompts: 2,
    });
    fillLikert(container, 5);
    const liked = container.querySelector<HTMLTextAreaElement>('textarea[name="liked"]')!;
    liked.value = 'the owl';
    container.querySelector('form')!.dispatchEvent(new Event('submit', { cancelable: true }));

    expect(submitted).not.toBeNull();
    expect(Object.keys(submitted!.ratings)).toHaveLength(8);
    expect(submitted!.ratings[LIKERT_KEYS[0]]).toBe(5);
    expect(submitted!.decline_rate).toBe('25');
    expect(submitted!.autocomplete_usage).toBe('both');
    expect(submitted!.liked).toBe('the owl');
  });

  it('pre-fills decline bucket from the observed dismiss rate', () => {
    expect(declineBucketFor({ prompts: 0, declines: 0, fastPrompts: 0, hqPrompts: 0 })).toBe('never');
    expect(declineBucketFor({ prompts: 4, declines: 1, fastPrompts: 4, hqPrompts: 0 })).toBe('25');
    expect(declineBucketFor({ prompts: 4, declines: 2, fastPrompts: 4, hqPrompts: 0 })).toBe('50');
    expect(declineBucketFor({ prompts: 4, declines: 3, fastPrompts: 4, hqPrompts: 0 })).toBe('75');
    expect(declineBucketFor({ prompts: 4, declines: 4, fastPrompts: 4, hqPrompts: 0 })).toBe('always');
  });

  it('pre-fills the usage mode from prompt counts', () => {
    expect(usageModeFor({ prompts: 1, declines: 0, fastPrompts: 1, hqPrompts: 0 })).toBe('fast');
    expect(usageModeFor({ prompts: 1, declines: 0, fastPrompts: 0, hqPrompts: 1 })).toBe('hq');
    expect(usageModeFor({ prompts: 2, declines: 0, fastPrompts: 1, hqPrompts: 1 })).toBe('both');
  });
});
