/** Read-only view of a published story. */

export function renderShareView(container: HTMLElement, shareUrl: string, snapshotHtml: string): void {
  container.classList.add('share-view');
  container.innerHTML = '';

  const banner = document.createElement('div');
  banner.className = 'share-banner';
  const label = document.createElement('span');
  label.textContent = 'Published! Share this story: ';
  const link = document.createElement('a');
  link.href = shareUrl;
  link.textContent = shareUrl;
  banner.append(label, link);

  const frame = document.createElement('div');
  frame.className = 'share-content';
  const parsed = new DOMParser().parseFromString(snapshotHtml, 'text/html');
  const article = parsed.querySelector('article');
  if (article) {
    frame.append(document.importNode(article, true));
  } else {
    frame.textContent = parsed.body.textContent ?? '';
  }

  container.append(banner, frame);
}
