"""SVG picture of a rank-2 system: dominant chamber, Catalan lines, C̄_{h+1} and its lattice points."""

import math
import xml.etree.ElementTree as ET

from weylcat.bijection import alcove_vertices, ideal_to_representative
from weylcat.poset import enumerate_antichains
from weylcat.signtypes import region_witness

SIZE = 560
MARGIN = 40


def _embedding(rs):
    """Euclidean images of α_1, α_2 realizing the Gram matrix."""
    g = [[float(x) for x in row] for row in rs.gram]
    a1 = (math.sqrt(g[0][0]), 0.0)
    x = g[0][1] / a1[0]
    a2 = (x, math.sqrt(g[1][1] - x * x))
    return a1, a2


def _clip(polygon, normal, offset):
    """Sutherland-Hodgman step keeping normal·p ≥ offset."""
    out = []
    for i, p in enumerate(polygon):
        q = polygon[(i + 1) % len(polygon)]
        fp = normal[0] * p[0] + normal[1] * p[1] - offset
        fq = normal[0] * q[0] + normal[1] * q[1] - offset
        if fp >= 0:
            out.append(p)
        if fp * fq < 0:
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def _line_in_box(normal, offset, box):
    x0, y0, x1, y1 = box
    pts = []
    nx, ny = normal
    if abs(ny) > 1e-12:
        for x in (x0, x1):
            y = (offset - nx * x) / ny
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                pts.append((x, y))
    if abs(nx) > 1e-12:
        for y in (y0, y1):
            x = (offset - ny * y) / nx
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                pts.append((x, y))
    pts = sorted(set((round(a, 9), round(b, 9)) for a, b in pts))
    return (pts[0], pts[-1]) if len(pts) >= 2 else None


def render(rs):
    """Return the SVG document as a string."""
    if rs.rank != 2:
        raise ValueError(f"figures need rank 2, got {rs.name}")
    a1, a2 = _embedding(rs)

    def embed(x):
        return (float(x[0]) * a1[0] + float(x[1]) * a2[0], float(x[0]) * a1[1] + float(x[1]) * a2[1])

    def normal(beta):
        # (x, β) = x·embed(β) in the Euclidean picture
        return embed(beta)

    k = rs.coxeter_number + 1
    simplex = [embed(rs.to_root_coords(v)) for v in alcove_vertices(rs, k)]
    xs = [p[0] for p in simplex]
    ys = [p[1] for p in simplex]
    pad = 0.15 * max(max(xs) - min(xs), max(ys) - min(ys))
    box = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    scale = (SIZE - 2 * MARGIN) / max(box[2] - box[0], box[3] - box[1])

    def screen(p):
        return (MARGIN + (p[0] - box[0]) * scale, SIZE - MARGIN - (p[1] - box[1]) * scale)

    def pts(poly):
        return " ".join(f"{x:.3f},{y:.3f}" for x, y in map(screen, poly))

    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(SIZE),
        height=str(SIZE),
        viewBox=f"0 0 {SIZE} {SIZE}",
    )
    ET.SubElement(svg, "title").text = f"{rs.name}: ideals and lattice points of C(h+1)"

    chamber = [(box[0], box[1]), (box[2], box[1]), (box[2], box[3]), (box[0], box[3])]
    for i in range(2):
        e = tuple(int(i == j) for j in range(2))
        chamber = _clip(chamber, normal(e), 0.0)
    ET.SubElement(svg, "polygon", points=pts(chamber), fill="#eef3fb", stroke="none")

    lines = ET.SubElement(svg, "g", stroke="#999999", fill="none")
    for beta in rs.positive_roots:
        for c in (-1, 0, 1):
            seg = _line_in_box(normal(beta), float(c), box)
            if seg:
                (x1, y1), (x2, y2) = map(screen, seg)
                ET.SubElement(
                    lines,
                    "line",
                    x1=f"{x1:.3f}",
                    y1=f"{y1:.3f}",
                    x2=f"{x2:.3f}",
                    y2=f"{y2:.3f}",
                    **{"stroke-width": "1.5" if c == 0 else "0.8"},
                )

    ET.SubElement(svg, "polygon", points=pts(simplex), fill="none", stroke="#1f5fbf", **{"stroke-width": "2"})

    ideals = enumerate_antichains(rs)
    marks = ET.SubElement(svg, "g", **{"font-family": "sans-serif", "font-size": "12"})
    for idx, ideal in enumerate(ideals, start=1):
        x, y = screen(embed(rs.to_root_coords(ideal_to_representative(ideal))))
        ET.SubElement(marks, "circle", cx=f"{x:.3f}", cy=f"{y:.3f}", r="4", fill="#c0392b")
        ET.SubElement(marks, "text", x=f"{x + 6:.3f}", y=f"{y - 6:.3f}", fill="#c0392b").text = f"i{idx}"
        wx, wy = screen(embed(region_witness(ideal).point))
        ET.SubElement(marks, "text", x=f"{wx:.3f}", y=f"{wy:.3f}", fill="#2c3e50").text = f"X{idx}"

    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode") + "\n"
