"""Standalone SVG drawings of embeddings and disk models (inspection only)."""

from collections.abc import Iterable, Sequence

from tss_geo.embed.embedding import RectilinearEmbedding
from tss_geo.graphcore.geometry import DiskRepresentation
from tss_geo.graphcore.graph import Graph

_HEADER = (
    '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
    'viewBox="0 0 %d %d">\n'
)


def _circle(x: float, y: float, r: float, style: dict[str, object]) -> str:
    attrs = " ".join(f'{k}="{v}"' for k, v in style.items())
    return f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{r:.3f}" {attrs}/>'


def _polyline(points: Iterable[tuple[float, float]], style: dict[str, object]) -> str:
    coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in points)
    attrs = " ".join(f'{k}="{v}"' for k, v in style.items())
    return f'<polyline points="{coords}" {attrs}/>'


def _text(x: float, y: float, label: str) -> str:
    return (
        f'<text x="{x:.3f}" y="{y:.3f}" font-family="sans-serif" '
        f'font-size="10" text-anchor="middle">{label}</text>'
    )


class _Canvas:
    """Maps model coordinates to pixels with the y axis pointing up."""

    def __init__(
        self, xs: Sequence[float], ys: Sequence[float], unit: float, pad: float
    ) -> None:
        self.x0 = min(xs, default=0.0)
        self.y1 = max(ys, default=0.0)
        self.unit = unit
        self.pad = pad
        self.width = int((max(xs, default=0.0) - self.x0) * unit + 2 * pad) + 1
        self.height = int((self.y1 - min(ys, default=0.0)) * unit + 2 * pad) + 1
        self.parts: list[str] = []

    def at(self, x: float, y: float) -> tuple[float, float]:
        return (
            (x - self.x0) * self.unit + self.pad,
            (self.y1 - y) * self.unit + self.pad,
        )

    def render(self) -> str:
        body = "\n".join(self.parts)
        header = _HEADER % (self.width, self.height, self.width, self.height)
        return f"{header}{body}\n</svg>\n"


def render_embedding_svg(
    g: Graph, emb: RectilinearEmbedding, *, unit: float = 20.0
) -> str:
    points = emb.all_points()
    canvas = _Canvas([p.x for p in points], [p.y for p in points], unit, unit)
    line_style: dict[str, object] = {
        "fill": "none",
        "stroke": "#3465a4",
        "stroke-width": 2,
    }
    for e in g.sorted_edges:
        canvas.parts.append(
            _polyline((canvas.at(p.x, p.y) for p in emb.epath[e]), line_style)
        )
    for v, p in enumerate(emb.vpoint):
        x, y = canvas.at(p.x, p.y)
        vertex_style: dict[str, object] = {"fill": "white", "stroke": "black"}
        canvas.parts.append(_circle(x, y, unit / 3, vertex_style))
        canvas.parts.append(_text(x, y + 3, str(v)))
    return canvas.render()


def render_disks_svg(
    rep: DiskRepresentation,
    g: Graph | None = None,
    *,
    unit: float = 80.0,
    labels: bool = False,
) -> str:
    """Disks as translucent circles; with ``g`` the intersection edges too."""
    radius = float(rep.diameter / 2)
    xs = [float(c.x) for c in rep.centers]
    ys = [float(c.y) for c in rep.centers]
    canvas = _Canvas(xs, ys, unit, unit * (radius + 0.25))
    if g is not None:
        edge_style: dict[str, object] = {"stroke": "#888888", "stroke-width": 1}
        for u, v in g.sorted_edges:
            canvas.parts.append(
                _polyline(
                    (canvas.at(xs[u], ys[u]), canvas.at(xs[v], ys[v])), edge_style
                )
            )
    disk_style: dict[str, object] = {
        "fill": "#729fcf",
        "fill-opacity": 0.35,
        "stroke": "#204a87",
        "stroke-width": 0.5,
    }
    for i, (cx, cy) in enumerate(zip(xs, ys, strict=True)):
        x, y = canvas.at(cx, cy)
        canvas.parts.append(_circle(x, y, radius * unit, disk_style))
        if labels:
            canvas.parts.append(_text(x, y + 3, str(i)))
    return canvas.render()

