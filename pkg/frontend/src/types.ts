export type Provenance = 'human' | 'machine';

export interface Block {
  block_id: string;
  kind: 'text' | 'image';
  content?: string;
  provenance?: Provenance;
  edited?: boolean;
  image_id?: string;
  query?: string;
  theme?: string;
}

export interface StoryDocument {
  id: string;
  title: string;
  blocks: Block[];
  created_at: string;
  updated_at: string;
  status: 'draft' | 'published';
  version: number;
}

export interface SuggestionScores {
  readability: number;
  positivity: number;
  diversity: number;
  simplicity: number;
  coherency: number;
  tale_like: number;
  total: number;
  partial: boolean;
}

export interface Suggestion {
  ref: string;
  text: string;
  scores: SuggestionScores | null;
}

export interface ImageResult {
  ref: string;
  image_id: string;
  score: number;
  attribution: string;
}

export interface FeedbackPayload {
  ratings: Record<string, number>;
  decline_rate: string;
  autocomplete_usage: string;
  liked: string;
  disliked: string;
  comments: string;
}

export type AutocompleteMode = 'fast' | 'hq';

export const LIKERT_KEYS = [
  'correct_grammar',
  'plausible_order',
  'makes_sense',
  'avoids_repetition',
  'interesting_language',
  'high_quality',
  'enjoyable',
  'single_theme',
] as const;

export const LIKERT_LABELS: Record<string, string> = {
  correct_grammar: 'Autocompletes exhibit correct grammar',
  plausible_order: 'Autocompletes occur in a plausible order',
  makes_sense: 'Autocompletes make sense given surrounding sentences',
  avoids_repetition: 'Autocompletes avoid repetition',
  interesting_language: 'Autocompletes use interesting language',
  high_quality: 'This story is of high quality',
  enjoyable: 'This story is enjoyable',
  single_theme: 'This story follows one overall theme',
};

export const DECLINE_BUCKETS = ['never', '25', '50', '75', 'always'] as const;
export const USAGE_MODES = ['fast', 'hq', 'both'] as const;
