import type { StudioBackend } from '../src/api';
import type {
  AutocompleteMode,
  Block,
  FeedbackPayload,
  ImageResult,
  StoryDocument,
  Suggestion,
} from '../src/types';

/** In-memory double of the co-writing service, mirroring its contract:
 * server-issued single-use suggestion refs, machine provenance only through
 * accepts, publish freezing with an HTML snapshot. */
export class FakeBackend implements StudioBackend {
  stories = new Map<string, StoryDocument>();
  pending = new Map<string, { type: 'text' | 'image'; text?: string; imageId?: string; query?: string; theme?: string }>();
  snapshots = new Map<string, string>();
  autocompleteCalls: AutocompleteMode[] = [];
  imageQueries: string[] = [];
  hqDelayMs = 0;
  imageResults: { image_id: string; attribution: string }[] = [
    { image_id: 'img-001', attribution: 'Photo A' },
    { image_id: 'img-002', attribution: 'Photo B' },
    { image_id: 'img-003', attribution: 'Photo C' },
  ];

  private counter = 0;

  private nextId(prefix: string): string {
    this.counter += 1;
    return `${prefix}-${this.counter}`;
  }

  async createStory(title: string): Promise<StoryDocument> {
    const doc: StoryDocument = {
      id: this.nextId('story'),
      title,
      blocks: [],
      created_at: 'now',
      updated_at: 'now',
      status: 'draft',
      version: 1,
    };
    this.stories.set(doc.id, doc);
    return structuredClone(doc);
  }

  async getStory(id: string): Promise<StoryDocument> {
    return structuredClone(this.require(id));
  }

  private require(id: string): StoryDocument {
    const doc = this.stories.get(id);
    if (!doc) throw new Error(`no story ${id}`);
    return doc;
  }

  async updateBlocks(id: string, version: number, blocks: Partial<Block>[]): Promise<StoryDocument> {
    const doc = this.require(id);
    if (doc.status === 'published') throw new Error('story_published');
    if (version !== doc.version) throw new Error('version_conflict');
    const existing = new Map(doc.blocks.map((b) => [b.block_id, b]));
    const next: Block[] = blocks.map((item) => {
      const prev = item.block_id ? existing.get(item.block_id) : undefined;
      if (prev) {
        if (prev.kind === 'text') {
          const content = item.content ?? prev.content;
          return {
            ...prev,
            content,
            edited: prev.edited || (prev.provenance === 'machine' && content !== prev.content),
          };
        }
        return { ...prev, theme: item.theme ?? prev.theme };
      }
      return {
        block_id: this.nextId('block'),
        kind: 'text',
        content: item.content ?? '',
        provenance: 'human',
        edited: false,
      };
    });
    const updated = { ...doc, blocks: next, version: doc.version + 1 };
    this.stories.set(id, updated);
    return structuredClone(updated);
  }

  async autocomplete(id: string, mode: AutocompleteMode): Promise<{ suggestions: Suggestion[] }> {
    this.require(id);
    this.autocompleteCalls.push(mode);
    if (mode === 'hq' && this.hqDelayMs > 0) {
      await new Promise((resolve) => setTimeout(resolve, this.hqDelayMs));
    }
    const suggestions: Suggestion[] = [0, 1, 2].map((i) => {
      const ref = this.nextId('text');
      this.pending.set(ref, { type: 'text', text: `${mode} continuation ${i}` });
      return {
        ref,
        text: `${mode} continuation ${i}`,
        scores:
          mode === 'hq'
            ? {
                readability: 4 + i,
                positivity: 0.1,
                diversity: 0.9,
                simplicity: 2,
                coherency: 0.5,
                tale_like: 0.2,
                total: 4.5 - i,
                partial: false,
              }
            : null,
      };
    });
    return { suggestions };
  }

  async suggestImages(
    id: string,
    query: string,
    k: number,
    theme: string,
  ): Promise<{ results: ImageResult[]; warning?: string }> {
    this.require(id);
    this.imageQueries.push(query);
    if (this.imageResults.length === 0) {
      return { results: [], warning: 'index_empty' };
    }
    const results = this.imageResults.slice(0, k).map((entry, i) => {
      const ref = this.nextId('image');
      this.pending.set(ref, { type: 'image', imageId: entry.image_id, query, theme });
      return { ref, image_id: entry.image_id, score: 0.9 - i * 0.1, attribution: entry.attribution };
    });
    return { results };
  }

  async accept(id: string, ref: string): Promise<StoryDocument> {
    const doc = this.require(id);
    const suggestion = this.pending.get(ref);
    if (!suggestion) throw new Error('unknown_suggestion');
    this.pending.delete(ref);
    const block: Block =
      suggestion.type === 'text'
        ? {
            block_id: this.nextId('block'),
            kind: 'text',
            content: suggestion.text!,
            provenance: 'machine',
            edited: false,
          }
        : {
            block_id: this.nextId('block'),
            kind: 'image',
            image_id: suggestion.imageId!,
            query: suggestion.query ?? '',
            theme: suggestion.theme ?? '',
          };
    const updated = { ...doc, blocks: [...doc.blocks, block], version: doc.version + 1 };
    this.stories.set(id, updated);
    return structuredClone(updated);
  }

  async publish(id: string, _feedback: FeedbackPayload): Promise<{ share_url: string; token: string }> {
    const doc = this.require(id);
    if (doc.blocks.length === 0) throw new Error('empty_story');
    const token = this.nextId('share');
    const parts = doc.blocks.map((b) =>
      b.kind === 'image'
        ? `<figure class="block image" data-image-id="${b.image_id}"><figcaption>${b.query}</figcaption></figure>`
        : `<p class="block ${b.provenance}${b.edited ? ' edited' : ''}">${b.content}</p>`,
    );
    this.snapshots.set(
      token,
      `<!DOCTYPE html><html><body><article data-story-id="${doc.id}">${parts.join('')}</article></body></html>`,
    );
    this.stories.set(id, { ...doc, status: 'published', version: doc.version + 1 });
    return { share_url: `/share/${token}`, token };
  }

  async shareHtml(shareUrl: string): Promise<string> {
    const token = shareUrl.split('/').pop()!;
    const html = this.snapshots.get(token);
    if (!html) throw new Error('share_not_found');
    return html;
  }
}
