import { ServiceError } from './api';
import type { StudioBackend } from './api';
import { themeFilter } from './themes';
import type { AutocompleteMode, Block, StoryDocument, Suggestion } from './types';

export interface EditorStats {
  prompts: number;
  declines: number;
  fastPrompts: number;
  hqPrompts: number;
}

interface EditorOptions {
  /** Optional template turning an image id into a real URL ("{id}" substituted). */
  imageUrlTemplate?: string;
  onChange?: (doc: StoryDocument) => void;
  onToast?: (message: string) => void;
}

/** Block editor with inline suggestion chips.
 *
 * Committed text lives in blocks (machine text visually marked); pending
 * suggestions are chips under the text, distinct from committed content, and
 * only an explicit accept turns one into a machine block.  Dismissals are
 * counted so the feedback form can pre-fill the decline-rate question.
 */
export class Editor {
  private doc: StoryDocument | null = null;
  private suggestions: Suggestion[] = [];
  private suggestionMode: AutocompleteMode = 'fast';
  private busy = false;
  private theme = 'plain';
  private stats: EditorStats = { prompts: 0, declines: 0, fastPrompts: 0, hqPrompts: 0 };
  private inflight: Partial<Record<AutocompleteMode, AbortController>> = {};

  private blocksEl!: HTMLElement;
  private chipsEl!: HTMLElement;
  private statusEl!: HTMLElement;
  private inputEl!: HTMLTextAreaElement;

  constructor(
    private container: HTMLElement,
    private api: StudioBackend,
    private options: EditorOptions = {},
  ) {
    this.buildSkeleton();
  }

  private buildSkeleton(): void {
    this.container.classList.add('editor');
    this.container.innerHTML = '';

    this.blocksEl = document.createElement('div');
    this.blocksEl.className = 'editor-blocks';

    this.chipsEl = document.createElement('div');
    this.chipsEl.className = 'suggestion-chips';

    this.statusEl = document.createElement('div');
    this.statusEl.className = 'editor-status';

    this.inputEl = document.createElement('textarea');
    this.inputEl.className = 'editor-input';
    this.inputEl.placeholder = 'Write here... Tab: autocomplete, Shift+Tab: high-quality autocomplete';
    this.inputEl.addEventListener('keydown', (event) => this.handleKeydown(event));

    this.container.append(this.blocksEl, this.chipsEl, this.statusEl, this.inputEl);
  }

  async start(title: string): Promise<StoryDocument> {
    this.doc = await this.api.createStory(title);
    this.render();
    return this.doc;
  }

  async startFromPreset(title: string, paragraphs: string[]): Promise<StoryDocument> {
    this.doc = await this.api.createStory(title);
    this.doc = await this.api.updateBlocks(
      this.doc.id,
      this.doc.version,
      paragraphs.map((content) => ({ content })),
    );
    this.render();
    return this.doc;
  }

  get document(): StoryDocument | null {
    return this.doc;
  }

  getStats(): EditorStats {
    return { ...this.stats };
  }

  get activeTheme(): string {
    return this.theme;
  }

  setTheme(name: string): void {
    this.theme = name;
    // Restyle in place: themes are pure client-side filters, no re-fetch.
    this.container.querySelectorAll<HTMLElement>('.image-tile').forEach((el) => {
      el.style.filter = themeFilter(name);
      el.dataset.theme = name;
    });
  }

  /** Commit the typed paragraph as a human block. */
  async commitInput(): Promise<void> {
    const text = this.inputEl.value.trim();
    if (!text || !this.doc) return;
    const payload = this.doc.blocks.map((b) => ({ ...b })).concat([{ content: text } as Partial<Block> as Block]);
    this.doc = await this.api.updateBlocks(this.doc.id, this.doc.version, payload);
    this.inputEl.value = '';
    this.render();
    this.options.onChange?.(this.doc);
  }

  async handleKeydown(event: KeyboardEvent): Promise<void> {
    if (event.key === 'Tab') {
      event.preventDefault();
      await this.requestSuggestions(event.shiftKey ? 'hq' : 'fast');
    } else if (event.key === 'Enter' && (event.ctrlKey || event.metaKey)) {
      event.preventDefault();
      await this.commitInput();
    }
  }

  async requestSuggestions(mode: AutocompleteMode): Promise<void> {
    if (!this.doc) return;
    await this.commitInput();

    // A newer request cancels the older one for the same mode.
    this.inflight[mode]?.abort();
    const controller = new AbortController();
    this.inflight[mode] = controller;

    this.stats.prompts += 1;
    if (mode === 'fast') this.stats.fastPrompts += 1;
    else this.stats.hqPrompts += 1;

    this.busy = mode === 'hq';
    this.renderStatus(mode === 'hq' ? 'Ranking candidates...' : 'Completing...');
    try {
      const { suggestions } = await this.api.autocomplete(this.doc.id, mode, controller.signal);
      if (controller.signal.aborted) return;
      this.suggestions = suggestions.slice(0, 3);
      this.suggestionMode = mode;
    } catch (error) {
      if ((error as Error).name === 'AbortError') return;
      const message = error instanceof ServiceError ? error.body.message : String(error);
      this.options.onToast?.(message);
      this.suggestions = [];
    } finally {
      if (this.inflight[mode] === controller) delete this.inflight[mode];
      this.busy = false;
      this.render();
    }
  }

  async acceptSuggestion(ref: string): Promise<void> {
    if (!this.doc) return;
    this.doc = await this.api.accept(this.doc.id, ref);
    this.suggestions = [];
    this.render();
    this.options.onChange?.(this.doc);
  }

  /** Dismiss every pending chip; counts one decline event. */
  dismissSuggestions(): void {
    if (this.suggestions.length === 0) return;
    this.suggestions = [];
    this.stats.declines += 1;
    this.render();
  }

  async insertImage(ref: string): Promise<void> {
    if (!this.doc) return;
    this.doc = await this.api.accept(this.doc.id, ref);
    this.render();
    this.options.onChange?.(this.doc);
  }

  async refresh(): Promise<void> {
    if (!this.doc) return;
    this.doc = await this.api.getStory(this.doc.id);
    this.render();
  }

  render(): void {
    this.renderBlocks();
    this.renderChips();
    this.renderStatus(this.busy ? 'Working...' : '');
  }

  private renderBlocks(): void {
    this.blocksEl.innerHTML = '';
    if (!this.doc) return;
    for (const block of this.doc.blocks) {
      this.blocksEl.append(block.kind === 'image' ? this.imageElement(block) : this.textElement(block));
    }
  }

  private textElement(block: Block): HTMLElement {
    const el = document.createElement('p');
    el.className = `block text ${block.provenance ?? 'human'}${block.edited ? ' edited' : ''}`;
    el.dataset.blockId = block.block_id;
    el.textContent = block.content ?? '';
    return el;
  }

  private imageElement(block: Block): HTMLElement {
    const figure = document.createElement('figure');
    figure.className = 'block image';
    figure.dataset.blockId = block.block_id;

    const tile = document.createElement('div');
    tile.className = 'image-tile';
    tile.dataset.imageId = block.image_id ?? '';
    tile.dataset.theme = this.theme;
    tile.style.filter = themeFilter(this.theme);
    if (this.options.imageUrlTemplate && block.image_id) {
      const img = document.createElement('img');
      img.src = this.options.imageUrlTemplate.replace('{id}', block.image_id);
      img.alt = block.query ?? block.image_id;
      tile.append(img);
    } else {
      tile.textContent = block.image_id ?? '';
    }

    const caption = document.createElement('figcaption');
    caption.textContent = block.query ?? '';

    figure.title = `retrieved for: ${block.query ?? ''}`;
    figure.append(tile, caption);
    return figure;
  }

  private renderChips(): void {
    this.chipsEl.innerHTML = '';
    if (this.suggestions.length === 0) return;

    for (const suggestion of this.suggestions) {
      const chip = document.createElement('button');
      chip.type = 'button';
      chip.className = `chip ${this.suggestionMode}`;
      chip.dataset.ref = suggestion.ref;
      chip.textContent = suggestion.text || '(empty completion)';
      if (suggestion.scores) {
        chip.title = `score ${suggestion.scores.total.toFixed(2)}`;
      }
      chip.addEventListener('click', () => void this.acceptSuggestion(suggestion.ref));
      this.chipsEl.append(chip);
    }

    const dismiss = document.createElement('button');
    dismiss.type = 'button';
    dismiss.className = 'chip dismiss';
    dismiss.textContent = 'Dismiss';
    dismiss.addEventListener('click', () => this.dismissSuggestions());
    this.chipsEl.append(dismiss);
  }

  private renderStatus(message: string): void {
    this.statusEl.textContent = message;
    this.statusEl.classList.toggle('busy', this.busy);
  }
}
