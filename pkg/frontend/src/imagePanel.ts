import type { StudioBackend } from './api';
import { Editor } from './editor';
import { themeFilter, THEMES } from './themes';
import type { ImageResult } from './types';

/** Image suggestion panel: query box, result tiles, theme picker. */
export class ImagePanel {
  private resultsEl!: HTMLElement;
  private queryEl!: HTMLInputElement;
  private lastResults: ImageResult[] = [];

  constructor(
    private container: HTMLElement,
    private api: StudioBackend,
    private editor: Editor,
  ) {
    this.build();
  }

  private build(): void {
    this.container.classList.add('image-panel');
    this.container.innerHTML = '';

    const form = document.createElement('form');
    form.className = 'image-query';
    this.queryEl = document.createElement('input');
    this.queryEl.type = 'search';
    this.queryEl.placeholder = 'Find an image...';
    const go = document.createElement('button');
    go.type = 'submit';
    go.textContent = 'Search';
    form.append(this.queryEl, go);
    form.addEventListener('submit', (event) => {
      event.preventDefault();
      void this.search(this.queryEl.value);
    });

    const themes = document.createElement('div');
    themes.className = 'theme-picker';
    for (const theme of THEMES) {
      const button = document.createElement('button');
      button.type = 'button';
      button.dataset.theme = theme.name;
      button.textContent = theme.label;
      button.addEventListener('click', () => {
        this.editor.setTheme(theme.name);
        this.restyleResults(theme.name);
        themes.querySelectorAll('button').forEach((b) => b.classList.toggle('active', b === button));
      });
      themes.append(button);
    }

    this.resultsEl = document.createElement('div');
    this.resultsEl.className = 'image-results';

    this.container.append(form, themes, this.resultsEl);
  }

  async search(query: string): Promise<void> {
    const doc = this.editor.document;
    if (!doc || !query.trim()) return;
    const { results, warning } = await this.api.suggestImages(doc.id, query, 3, this.editor.activeTheme);
    this.lastResults = results;
    this.renderResults(results, warning);
  }

  private renderResults(results: ImageResult[], warning?: string): void {
    this.resultsEl.innerHTML = '';
    if (results.length === 0) {
      const empty = document.createElement('p');
      empty.className = 'no-results';
      empty.textContent = warning === 'index_empty' ? 'No image index is loaded.' : 'No matching images.';
      this.resultsEl.append(empty);
      return;
    }
    for (const result of results) {
      const card = document.createElement('button');
      card.type = 'button';
      card.className = 'image-result';
      card.dataset.ref = result.ref;
      card.dataset.imageId = result.image_id;
      card.title = result.attribution || result.image_id; // attribution on hover
      card.style.filter = themeFilter(this.editor.activeTheme);
      card.textContent = `${result.image_id} (${result.score.toFixed(2)})`;
      card.addEventListener('click', () => void this.editor.insertImage(result.ref));
      this.resultsEl.append(card);
    }
  }

  /** Theme switches restyle existing tiles; no queries are re-issued. */
  private restyleResults(theme: string): void {
    this.resultsEl.querySelectorAll<HTMLElement>('.image-result').forEach((el) => {
      el.style.filter = themeFilter(theme);
    });
  }

  get results(): ImageResult[] {
    return [...this.lastResults];
  }
}
