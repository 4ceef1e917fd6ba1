"""CSV and SVG writers.

CSV is the primary output: numbers are written with repr(), which is the
shortest string that round-trips the exact double, so identical runs give
byte-identical files. The SVG output is a deliberately small hand-rolled
plot (no plotting dependency): curves become styled polylines, scan points
become one circle per CSV data row.
"""

from .stability_curves import B_MINUS, B_PLUS, FLIP, FOLD, NS

_DASH = {FOLD: "", FLIP: "8 5", NS: "2 4"}
_SINGLE_BRANCH = {FOLD: B_PLUS, FLIP: B_MINUS}
_LEG_COLOR = {"first": "#1f77b4", "second": "#d62728"}

WIDTH = 800
HEIGHT = 600
MARGIN = 60


def _fmt(v):
    return repr(float(v))


def _open(path):
    return open(path, "w", encoding="utf-8", newline="\n")


def curve_label(curve):
    """CSV/JSON label: B_plus/B_minus in the (b, w) plane, else the kind."""
    if curve.plane == ("b", "w"):
        return _SINGLE_BRANCH[curve.kind]
    return curve.kind


def write_curves_csv(path, curves):
    if not curves:
        raise ValueError("no curves to write")
    plane = curves[0].plane
    label_col = "branch" if plane == ("b", "w") else "kind"
    with _open(path) as fh:
        fh.write(f"# stability boundaries in the ({plane[0]}, {plane[1]}) plane\n")
        fh.write(f"x,{plane[0]},{plane[1]},{label_col}\n")
        for curve in curves:
            label = curve_label(curve)
            for s in curve.samples:
                fh.write(f"{_fmt(s.x)},{_fmt(s.point[0])},{_fmt(s.point[1])},{label}\n")


def write_scan_csv(path, scan):
    names = [s.param for s in scan.schedules]
    cols = ["leg", "step"] + names + (["x"] if scan.system == "single" else ["x", "y"])
    with _open(path) as fh:
        fh.write(",".join(cols) + "\n")
        for pt in scan.points():
            row = [pt["leg"], str(pt["step"])]
            row += [_fmt(pt["params"][nm]) for nm in names]
            row.append(_fmt(pt["x"]))
            if scan.system == "two":
                row.append(_fmt(pt["y"]))
            fh.write(",".join(row) + "\n")


def write_spectrum_csv(path, frequencies, power):
    with _open(path) as fh:
        fh.write("frequency,power\n")
        for f, p in zip(frequencies, power):
            fh.write(f"{_fmt(f)},{_fmt(p)}\n")


class _Scale:
    """Maps data rectangle to the SVG viewport (y axis flipped)."""

    def __init__(self, xs, ys):
        self.x0, self.x1 = self._padded(min(xs), max(xs))
        self.y0, self.y1 = self._padded(min(ys), max(ys))

    @staticmethod
    def _padded(lo, hi):
        if lo == hi:
            return lo - 1.0, hi + 1.0
        return lo, hi

    def x(self, v):
        f = (v - self.x0) / (self.x1 - self.x0)
        return MARGIN + f * (WIDTH - 2 * MARGIN)

    def y(self, v):
        f = (v - self.y0) / (self.y1 - self.y0)
        return HEIGHT - MARGIN - f * (HEIGHT - 2 * MARGIN)


def _svg_header(fh, title):
    fh.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">\n'
    )
    fh.write(f"<title>{title}</title>\n")
    fh.write(f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>\n')
    fh.write(
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" '
        f'height="{HEIGHT - 2 * MARGIN}" fill="none" stroke="#888"/>\n'
    )


def _axis_labels(fh, xlabel, ylabel):
    fh.write(
        f'<text x="{WIDTH // 2}" y="{HEIGHT - MARGIN // 3}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{xlabel}</text>\n'
    )
    fh.write(
        f'<text x="{MARGIN // 3}" y="{HEIGHT // 2}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14" '
        f'transform="rotate(-90 {MARGIN // 3} {HEIGHT // 2})">{ylabel}</text>\n'
    )


def write_curves_svg(path, curves, title="stability boundaries"):
    if not curves:
        raise ValueError("no curves to write")
    plane = curves[0].plane
    xs = [s.point[0] for c in curves for s in c.samples]
    ys = [s.point[1] for c in curves for s in c.samples]
    if not xs:
        raise ValueError("curves contain no samples")
    sc = _Scale(xs, ys)
    with _open(path) as fh:
        _svg_header(fh, title)
        _axis_labels(fh, plane[0], plane[1])
        for curve in curves:
            dash = _DASH.get(curve.kind, "")
            attr = f' stroke-dasharray="{dash}"' if dash else ""
            pts = " ".join(
                f"{sc.x(s.point[0]):.2f},{sc.y(s.point[1]):.2f}" for s in curve.samples
            )
            fh.write(
                f'<polyline fill="none" stroke="black" stroke-width="1.5"{attr} '
                f'points="{pts}"/>\n'
            )
        fh.write("</svg>\n")


def write_scan_svg(path, scan, title="bifurcation scan"):
    pts = list(scan.points())
    if not pts:
        raise ValueError("scan contains no points")
    pname = scan.schedules[0].param
    xs = [pt["params"][pname] for pt in pts]
    ys = [pt["x"] for pt in pts]
    sc = _Scale(xs, ys)
    with _open(path) as fh:
        _svg_header(fh, title)
        _axis_labels(fh, pname, "x")
        for pt, px, py in zip(pts, xs, ys):
            fh.write(
                f'<circle cx="{sc.x(px):.2f}" cy="{sc.y(py):.2f}" r="1" '
                f'fill="{_LEG_COLOR[pt["leg"]]}"/>\n'
            )
        fh.write("</svg>\n")


def write_spectrum_svg(path, frequencies, power, title="power spectrum"):
    sc = _Scale(frequencies, power)
    with _open(path) as fh:
        _svg_header(fh, title)
        _axis_labels(fh, "frequency", "power")
        pts = " ".join(
            f"{sc.x(f):.2f},{sc.y(p):.2f}" for f, p in zip(frequencies, power)
        )
        fh.write(
            f'<polyline fill="none" stroke="black" stroke-width="1" points="{pts}"/>\n'
        )
        fh.write("</svg>\n")
