"""Snapshot persistence (JSONL / CSV) and SVG rendering.

Integer data round-trips exactly; doubles are written with 17 significant
digits so they reparse to the same bits.  Output is deterministic: identical
snapshots and options give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .cyclotomic import CycInt, GoldenInt, ZETA_POWERS, abs_sq_coords, embed_approx
from .modelset import PointRecord, Snapshot, Window

CSV_COLUMNS = ["a0", "a1", "a2", "a3", "x", "y", "iabs_p", "iabs_q", "class"]
_CLASSES = {"short", "long", "other", "unknown"}


class SnapshotFormatError(ValueError):
    """Malformed or inconsistent snapshot file."""


def _fmt(x: float) -> str:
    return format(x, ".17g")


def write_snapshot(snapshot: Snapshot, fmt: str, destination) -> None:
    """Write one record per point in canonical order, preceded by a header
    carrying R^2, w, and the tool version.  destination is a text stream."""
    if fmt == "jsonl":
        _write_jsonl(snapshot, destination)
    elif fmt == "csv":
        _write_csv(snapshot, destination)
    else:
        raise ValueError(f"unsupported format {fmt!r}")


def _write_jsonl(snapshot: Snapshot, out) -> None:
    header = {"format": "pentaset-snapshot",
              "radius_sq": str(snapshot.radius_sq),
              "window_sq": str(snapshot.window.w),
              "version": __version__}
    out.write(json.dumps(header, sort_keys=True, separators=(",", ":")) + "\n")
    for p in snapshot.points:
        a = p.z.coords()
        out.write('{"a":[%d,%d,%d,%d],"x":%s,"y":%s,"iabs":[%d,%d],"class":"%s"}\n'
                  % (a[0], a[1], a[2], a[3], _fmt(p.x), _fmt(p.y),
                     p.abs_sq_internal.p, p.abs_sq_internal.q, p.dist_class))


def _write_csv(snapshot: Snapshot, out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["radius_sq", str(snapshot.radius_sq),
                     "window_sq", str(snapshot.window.w),
                     "version", __version__])
    writer.writerow(CSV_COLUMNS)
    for p in snapshot.points:
        a = p.z.coords()
        writer.writerow([a[0], a[1], a[2], a[3], _fmt(p.x), _fmt(p.y),
                         p.abs_sq_internal.p, p.abs_sq_internal.q, p.dist_class])


def _rebuild_record(a, x, y, iabs, cls, lineno) -> PointRecord:
    if cls not in _CLASSES:
        raise SnapshotFormatError(f"line {lineno}: unknown class {cls!r}")
    z = CycInt(*a)
    phys, intr = abs_sq_coords(*a)
    if list(intr) != list(iabs):
        raise SnapshotFormatError(
            f"line {lineno}: stored iabs {list(iabs)} does not match "
            f"recomputed {list(intr)} for a = {list(a)}")
    return PointRecord(z, GoldenInt(*phys), GoldenInt(*intr),
                       float(x), float(y), dist_class=cls)


def read_snapshot(source) -> Snapshot:
    """Read a snapshot written by write_snapshot; the internal squared
    modulus of every record is recomputed and checked against the file."""
    first = source.readline()
    if not first:
        raise SnapshotFormatError("empty file: header required")
    if first.lstrip().startswith("{"):
        return _read_jsonl(first, source)
    return _read_csv(first, source)


def _read_jsonl(first: str, source) -> Snapshot:
    try:
        header = json.loads(first)
    except json.JSONDecodeError as e:
        raise SnapshotFormatError(f"line 1: bad header: {e}") from e
    if header.get("format") != "pentaset-snapshot":
        raise SnapshotFormatError("line 1: missing snapshot header")
    radius_sq = Fraction(header["radius_sq"])
    window = Window(Fraction(header["window_sq"]))
    points = []
    for lineno, line in enumerate(source, start=2):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            points.append(_rebuild_record(rec["a"], rec["x"], rec["y"],
                                          rec["iabs"], rec["class"], lineno))
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise SnapshotFormatError(f"line {lineno}: malformed record: {e}") from e
    return Snapshot(window, radius_sq, points)


def _read_csv(first: str, source) -> Snapshot:
    head = next(csv.reader([first]))
    if len(head) < 4 or head[0] != "radius_sq" or head[2] != "window_sq":
        raise SnapshotFormatError("line 1: missing snapshot header")
    radius_sq = Fraction(head[1])
    window = Window(Fraction(head[3]))
    rows = csv.reader(source)
    columns = next(rows, None)
    if columns != CSV_COLUMNS:
        raise SnapshotFormatError(f"line 2: expected columns {CSV_COLUMNS}")
    points = []
    for lineno, row in enumerate(rows, start=3):
        if not row:
            continue
        try:
            a = [int(v) for v in row[0:4]]
            iabs = [int(row[6]), int(row[7])]
            points.append(_rebuild_record(a, row[4], row[5], iabs, row[8], lineno))
        except (ValueError, IndexError) as e:
            if isinstance(e, SnapshotFormatError):
                raise
            raise SnapshotFormatError(f"line {lineno}: malformed record: {e}") from e
    return Snapshot(window, radius_sq, points)


@dataclass(frozen=True)
class RenderOptions:
    canvas: int = 1000
    dot_radius: float = 3.0
    highlight_radius: float = 10.0
    highlight_roots: bool = False
    color_classes: bool = False


_CLASS_COLORS = {"short": "#d62728", "long": "#000000",
                 "other": "#ff7f0e", "unknown": "#808080"}


def render_svg(snapshot: Snapshot, options: RenderOptions | None = None) -> str:
    """One dot per point, y axis flipped, disc of radius R scaled to the
    canvas; optional unfilled circles around 0 and the five fifth roots of
    unity, optional coloring by nearest-neighbor class."""
    opt = options or RenderOptions()
    r = math.sqrt(float(snapshot.radius_sq))
    scale = opt.canvas / (2.0 * r) if r > 0 else 1.0
    c = opt.canvas / 2.0

    def place(x: float, y: float) -> tuple[str, str]:
        return format(c + x * scale, ".6f"), format(c - y * scale, ".6f")

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{opt.canvas}" height="{opt.canvas}" '
        f'viewBox="0 0 {opt.canvas} {opt.canvas}">',
        f'<rect width="{opt.canvas}" height="{opt.canvas}" fill="#ffffff"/>',
    ]
    for p in snapshot.points:
        fill = _CLASS_COLORS[p.dist_class] if opt.color_classes else "#000000"
        px, py = place(p.x, p.y)
        lines.append(f'<circle cx="{px}" cy="{py}" r="{opt.dot_radius:g}" '
                     f'fill="{fill}" class="pt-{p.dist_class}"/>')
    if opt.highlight_roots:
        members = snapshot.coord_set()
        targets = [CycInt(0, 0, 0, 0)] + list(ZETA_POWERS)
        for z in targets:
            if z.coords() not in members:
                continue
            e = embed_approx(z, "physical")
            px, py = place(e.real, e.imag)
            lines.append(f'<circle cx="{px}" cy="{py}" r="{opt.highlight_radius:g}" '
                         f'fill="none" stroke="#000000" stroke-width="1.5" '
                         f'class="highlight"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def snapshot_to_jsonl_bytes(snapshot: Snapshot) -> bytes:
    buf = io.StringIO()
    write_snapshot(snapshot, "jsonl", buf)
    return buf.getvalue().encode("utf-8")
