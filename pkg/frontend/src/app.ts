import { StudioApi, type StudioBackend } from './api';
import { Editor } from './editor';
import { FeedbackForm } from './feedbackForm';
import { ImagePanel } from './imagePanel';
import { randomPreset } from './presets';
import { renderShareView } from './shareView';
import type { FeedbackPayload } from './types';

/** Wire the landing page, studio, submission form and share view together. */
export class StudioApp {
  readonly api: StudioBackend;
  editor: Editor | null = null;
  imagePanel: ImagePanel | null = null;
  /** Resolves when the in-flight publish (if any) has rendered the share view. */
  publishComplete: Promise<void> | null = null;

  constructor(private root: HTMLElement, api?: StudioBackend) {
    this.api = api ?? new StudioApi('');
  }

  renderLanding(): void {
    this.root.innerHTML = '';
    const landing = document.createElement('section');
    landing.className = 'landing';

    const heading = document.createElement('h1');
    heading.textContent = 'TaleTailor Studio';
    const tagline = document.createElement('p');
    tagline.textContent = 'Weave a story together with the machine: text, images, and your own voice.';

    const blank = document.createElement('button');
    blank.type = 'button';
    blank.className = 'start-blank';
    blank.textContent = 'Start from scratch';
    blank.addEventListener('click', () => void this.startStory('Untitled story'));

    const preset = document.createElement('button');
    preset.type = 'button';
    preset.className = 'start-preset';
    preset.textContent = 'Random preset story';
    preset.addEventListener('click', () => void this.startPreset());

    landing.append(heading, tagline, blank, preset);
    this.root.append(landing);
  }

  async startStory(title: string): Promise<void> {
    this.renderStudio();
    await this.editor!.start(title);
  }

  async startPreset(): Promise<void> {
    this.renderStudio();
    const preset = randomPreset();
    await this.editor!.startFromPreset(preset.title, preset.paragraphs);
  }

  renderStudio(): void {
    this.root.innerHTML = '';

    const studio = document.createElement('section');
    studio.className = 'studio';

    const editorHost = document.createElement('div');
    const panelHost = document.createElement('aside');
    const toast = document.createElement('div');
    toast.className = 'toast';

    const submit = document.createElement('button');
    submit.type = 'button';
    submit.className = 'open-submit';
    submit.textContent = 'Submit story';
    submit.addEventListener('click', () => void this.openSubmitFlow());

    studio.append(editorHost, panelHost, submit, toast);
    this.root.append(studio);

    this.editor = new Editor(editorHost, this.api, {
      onToast: (message) => {
        toast.textContent = message;
        toast.classList.add('visible');
      },
    });
    this.imagePanel = new ImagePanel(panelHost, this.api, this.editor);
  }

  async openSubmitFlow(): Promise<void> {
    if (!this.editor?.document) return;
    await this.editor.commitInput();
    if (this.editor.document.blocks.length === 0) return;

    const host = document.createElement('div');
    host.className = 'submit-flow';
    this.root.append(host);

    new FeedbackForm(
      host,
      (feedback) => {
        this.publishComplete = this.publishAndShare(feedback);
      },
      this.editor.getStats(),
    );
  }

  private async publishAndShare(feedback: FeedbackPayload): Promise<void> {
    const doc = this.editor!.document!;
    const { share_url } = await this.api.publish(doc.id, feedback);
    const snapshot = await this.api.shareHtml(share_url);
    this.root.innerHTML = '';
    renderShareView(this.root, share_url, snapshot);
  }
}

export function mount(root: HTMLElement): StudioApp {
  const app = new StudioApp(root);
  app.renderLanding();
  return app;
}

declare global {
  interface Window {
    studioApp?: StudioApp;
  }
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  window.studioApp = mount(document.getElementById('app')!);
}
