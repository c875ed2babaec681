import { beforeEach, describe, expect, it } from 'vitest';

import { Editor } from '../src/editor';
import { ImagePanel } from '../src/imagePanel';
import { FakeBackend } from './fakeBackend';

describe('ImagePanel', () => {
  let backend: FakeBackend;
  let editor: Editor;
  let panel: ImagePanel;
  let editorHost: HTMLElement;
  let panelHost: HTMLElement;

  beforeEach(async () => {
    backend = new FakeBackend();
    document.body.innerHTML = '';
    editorHost = document.createElement('div');
    panelHost = document.createElement('aside');
    document.body.append(editorHost, panelHost);
    editor = new Editor(editorHost, backend);
    await editor.start('Panel story');
    panel = new ImagePanel(panelHost, backend, editor);
  });

  it('search renders up to three results with attribution on hover', async () => {
    await panel.search('a blue sky');
    const cards = panelHost.querySelectorAll<HTMLElement>('.image-result');
    expect(cards).toHaveLength(3);
    expect(cards[0].title).toBe('Photo A');
    expect(backend.imageQueries).toEqual(['a blue sky']);
  });

  it('clicking a result inserts an image block recording the query', async () => {
    await panel.search('the moon');
    panelHost.querySelector<HTMLElement>('.image-result')!.click();
    await Promise.resolve();
    const figure = editorHost.querySelector('.block.image')!;
    expect(figure).not.toBeNull();
    expect(figure.querySelector('figcaption')!.textContent).toBe('the moon');
  });

  it('empty result set shows the no-matching-images state', async () => {
    backend.imageResults = [];
    await panel.search('anything');
    expect(panelHost.querySelector('.no-results')!.textContent).toContain('No image index');
  });

  it('theme buttons restyle result cards without a new query', async () => {
    await panel.search('a red apple');
    const before = backend.imageQueries.length;
    panelHost.querySelector<HTMLElement>('button[data-theme="ink"]')!.click();
    const card = panelHost.querySelector<HTMLElement>('.image-result')!;
    expect(card.style.filter).toContain('grayscale');
    expect(backend.imageQueries.length).toBe(before);
    expect(editor.activeTheme).toBe('ink');
  });
});
