/** Tiny DOM helpers shared by the widgets. */

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

/** Group container with a header carrying the per-group source attribution. */
export function group(title: string, source: string): HTMLElement {
  const section = el("section", "scx-group");
  section.dataset.group = title;
  const header = el("header", "scx-group-header");
  header.appendChild(el("span", "scx-group-title", title));
  const badge = el("span", "scx-source", source);
  badge.title = `served by ${source}`;
  header.appendChild(badge);
  section.appendChild(header);
  return section;
}

export function unavailable(section: HTMLElement, kind: string): HTMLElement {
  const note = el("p", "scx-unavailable",
    `temporarily unavailable (${kind})`);
  section.appendChild(note);
  section.classList.add("scx-group-unavailable");
  return section;
}
