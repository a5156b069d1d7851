"""Display-only SVG pictures of arrangements over Q."""
from __future__ import annotations

from .arrangement import LINES, singular_points
from .errors import DomainError

SIZE = 600


def _box(points):
    xs = [x for x, _ in points] or [0.0]
    ys = [y for _, y in points] or [0.0]
    pad = 0.15 * max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    return min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad


def _clip(a, b, c, box):
    """Segment of ``ax + by + c = 0`` inside ``box``."""
    x0, y0, x1, y1 = box
    ends = []
    if b != 0:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 <= y <= y1:
                ends.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 <= x <= x1:
                ends.append((x, y))
    ends = sorted(set(ends))
    return (ends[0], ends[-1]) if len(ends) >= 2 else None


def render_svg(arr) -> str:
    """Draw the affine chart ``z = 1``; exact values become floats only here."""
    if arr.field.is_finite:
        raise DomainError("field not orderable")
    lines = arr if arr.kind == LINES else arr.dual()
    sing = [(p, m) for p, m in singular_points(lines) if p.coords[2] != 0]
    pts = [(float(p.coords[0] / p.coords[2]), float(p.coords[1] / p.coords[2])) for p, _ in sing]
    box = _box(pts)
    x0, y0, x1, y1 = box
    scale = SIZE / max(x1 - x0, y1 - y0)

    def tr(x, y):
        return (x - x0) * scale, SIZE - (y - y0) * scale

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}">',
           f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>']
    for label, l in zip(lines.labels, lines.members):
        seg = _clip(*(float(c) for c in l.coords), box)
        if seg is None:
            continue
        (ax, ay), (bx, by) = tr(*seg[0]), tr(*seg[1])
        out.append(f'<line x1="{ax:.3f}" y1="{ay:.3f}" x2="{bx:.3f}" y2="{by:.3f}" stroke="black" '
                   f'stroke-width="1"><title>{label}</title></line>')
    for (x, y), (_, m) in zip(pts, sing):
        cx, cy = tr(x, y)
        colour = "red" if m > 2 else "grey"
        out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{1.5 + m}" fill="{colour}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
