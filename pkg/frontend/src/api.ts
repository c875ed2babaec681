import type {
  AutocompleteMode,
  Block,
  FeedbackPayload,
  ImageResult,
  StoryDocument,
  Suggestion,
} from './types';

export interface ApiError {
  code: string;
  message: string;
  field?: string;
}

export class ServiceError extends Error {
  constructor(public status: number, public body: ApiError) {
    super(body.message || body.code);
  }
}

/** The service surface the studio consumes; tests swap in an in-memory fake. */
export interface StudioBackend {
  createStory(title: string): Promise<StoryDocument>;
  getStory(id: string): Promise<StoryDocument>;
  updateBlocks(id: string, version: number, blocks: Partial<Block>[]): Promise<StoryDocument>;
  autocomplete(id: string, mode: AutocompleteMode, signal?: AbortSignal): Promise<{ suggestions: Suggestion[] }>;
  suggestImages(
    id: string,
    query: string,
    k: number,
    theme: string,
  ): Promise<{ results: ImageResult[]; warning?: string }>;
  accept(id: string, ref: string): Promise<StoryDocument>;
  publish(id: string, feedback: FeedbackPayload): Promise<{ share_url: string; token: string }>;
  shareHtml(shareUrl: string): Promise<string>;
}

/** Thin typed client over the co-writing service; the studio holds no scoring
 * or retrieval logic of its own. */
export class StudioApi implements StudioBackend {
  constructor(private baseUrl: string = '', private fetchFn: typeof fetch = fetch.bind(globalThis)) {}

  private async request<T>(method: string, path: string, body?: unknown, signal?: AbortSignal): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
      signal,
    });
    const text = await response.text();
    const data = text ? JSON.parse(text) : {};
    if (!response.ok) {
      throw new ServiceError(response.status, data as ApiError);
    }
    return data as T;
  }

  createStory(title: string): Promise<StoryDocument> {
    return this.request('POST', '/stories', { title });
  }

  getStory(id: string): Promise<StoryDocument> {
    return this.request('GET', `/stories/${id}`);
  }

  updateBlocks(id: string, version: number, blocks: Partial<Block>[]): Promise<StoryDocument> {
    return this.request('PATCH', `/stories/${id}/blocks`, { version, blocks });
  }

  autocomplete(id: string, mode: AutocompleteMode, signal?: AbortSignal): Promise<{ suggestions: Suggestion[] }> {
    return this.request('POST', `/stories/${id}/autocomplete`, { mode }, signal);
  }

  suggestImages(id: string, query: string, k: number, theme: string): Promise<{ results: ImageResult[]; warning?: string }> {
    return this.request('POST', `/stories/${id}/images/suggest`, { query, k, theme });
  }

  accept(id: string, ref: string): Promise<StoryDocument> {
    return this.request('POST', `/stories/${id}/accept`, { ref });
  }

  publish(id: string, feedback: FeedbackPayload): Promise<{ share_url: string; token: string }> {
    return this.request('POST', `/stories/${id}/publish`, { feedback });
  }

  async shareHtml(shareUrl: string): Promise<string> {
    const response = await this.fetchFn(this.baseUrl + shareUrl);
    if (!response.ok) {
      throw new ServiceError(response.status, { code: 'share_not_found', message: 'share not found' });
    }
    return response.text();
  }
}
