"""Command-line front end: ``intervaldft transform | polygon | verify``.

Input files hold one sample per line, either ``lo,hi`` or a single value
``v`` (read as ``[v, v]``). A first line with no numeric field is taken as a
header. Exit codes: 0 success, 2 input error, 3 verification failure.
"""
from __future__ import annotations

import csv
import io
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

import click

from .dft import MODES, SpectrumBounds, select_harmonics, spectrum, united_set
from .interval import IntervalVector
from .verification import CORNER_LIMIT, verify_harmonic

EXIT_INPUT = 2
EXIT_VERIFY = 3


class InputError(click.ClickException):
    exit_code = EXIT_INPUT


def fmt(value: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return format(float(value), ".17g")


def _parse_number(text: str) -> Optional[float]:
    try:
        return float(text)
    except ValueError:
        return None


def parse_signal(text: str) -> IntervalVector:
    """Parse CSV text into an interval vector, rejecting bad rows by line number."""
    rows = [(i, [f.strip() for f in row]) for i, row in enumerate(csv.reader(io.StringIO(text)), start=1)]
    rows = [(i, row) for i, row in rows if any(row) and not row[0].startswith("#")]
    if rows and all(_parse_number(f) is None for f in rows[0][1]):
        rows = rows[1:]
    if not rows:
        raise InputError("empty signal")
    lo, hi = [], []
    for line, row in rows:
        if len(row) not in (1, 2):
            raise InputError(f"row {line}: expected 'lo,hi' or a single value, got {len(row)} fields")
        values = [_parse_number(f) for f in row]
        if any(v is None for v in values):
            raise InputError(f"row {line}: non-numeric value in {','.join(row)!r}")
        if any(not math.isfinite(v) for v in values):
            raise InputError(f"row {line}: non-finite value in {','.join(row)!r}; "
                             "encode missing samples as explicit bounds")
        a, b = values[0], values[-1]
        if a > b:
            raise InputError(f"row {line}: lower bound {fmt(a)} exceeds upper bound {fmt(b)}")
        lo.append(a)
        hi.append(b)
    return IntervalVector.from_bounds(lo, hi)


def _read_signal(stream) -> IntervalVector:
    return parse_signal(stream.read())


def _harmonics(N: int, selection: str) -> List[int]:
    if selection in ("all", "half"):
        return select_harmonics(N, selection)
    try:
        chosen = [int(s) for s in selection.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"harmonic selection {selection!r} is not 'all', 'half' or a comma list")
    try:
        return select_harmonics(N, chosen)
    except ValueError as exc:
        raise InputError(str(exc))


def record(b: SpectrumBounds, vertices: bool = False, configs: bool = False) -> Dict:
    """One harmonic's bounds as a flat, JSON-ready dictionary."""
    rec = {
        "h": b.h,
        "re_lo": b.box.re.lo, "re_hi": b.box.re.hi,
        "im_lo": b.box.im.lo, "im_hi": b.box.im.hi,
        "amp_lo": b.amplitude.lo, "amp_hi": b.amplitude.hi,
        "phase_lo": b.phase.lo if b.phase else None,
        "phase_hi": b.phase.hi if b.phase else None,
        "phase_defined": b.phase_defined,
        "phase_wrapped": bool(b.phase and b.phase.wrapped),
        "phase_undefined_reason": b.phase_undefined_reason,
    }
    if vertices:
        rec["vertices"] = [[float(x), float(y)] for x, y in b.polygon.vertices]
    if configs:
        rec["config_max"] = b.config_max if isinstance(b.config_max, str) else list(b.config_max)
        rec["config_min"] = b.config_min if isinstance(b.config_min, str) else list(b.config_min)
    return rec


def dump_json(obj, indent: int = 0) -> str:
    """JSON with every float printed at 17 significant digits."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{inner}"{k}": {dump_json(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            return "[" + ", ".join(dump_json(v) for v in obj) + "]"
        return "[\n" + ",\n".join(inner + dump_json(v, indent + 1) for v in obj) + "\n" + pad + "]"
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt(obj)
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


_COLUMNS = ("h", "re_lo", "re_hi", "im_lo", "im_hi", "amp_lo", "amp_hi",
            "phase_lo", "phase_hi", "phase_defined", "phase_wrapped")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt(value)
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return ";".join(" ".join(fmt(c) for c in v) for v in value)
        return " ".join(value)
    return str(value)


def render(records: List[Dict], N: int, mode: str, style: str) -> str:
    extra = [k for k in ("vertices", "config_max", "config_min") if records and k in records[0]]
    if style == "json":
        return dump_json({"N": N, "mode": mode, "harmonics": records}) + "\n"
    columns = list(_COLUMNS) + extra
    if style == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([_cell(rec[c]) for c in columns])
        return buf.getvalue()
    table = [list(_COLUMNS)] + [[_cell(rec[c]) or "-" for c in _COLUMNS] for rec in records]
    widths = [max(len(row[j]) for row in table) for j in range(len(_COLUMNS))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in table]
    for rec in records:
        for key in extra:
            lines.append(f"h={rec['h']} {key}: {_cell(rec[key])}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


_mode_option = click.option("--mode", type=click.Choice(MODES), default="fast", show_default=True,
                            help="Chained Minkowski additions or one global edge sort.")
_harmonics_option = click.option("--harmonics", default="all", show_default=True,
                                 help="'all', 'half' (0..N/2) or a comma list such as 0,1,5.")
_threads_option = click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True,
                               help="Harmonics computed concurrently.")


@click.group()
def main():
    """Exact spectrum bounds for interval-valued signals."""


@main.command()
@click.argument("input", type=click.File("r"))
@_harmonics_option
@_mode_option
@click.option("--format", "style", type=click.Choice(["table", "json", "csv"]), default="table", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="Write here instead of stdout.")
@click.option("--vertices", is_flag=True, help="Include each polygon's vertex list.")
@click.option("--configs", is_flag=True, help="Include the endpoint configurations of the amplitude extremes.")
@_threads_option
def transform(input, harmonics, mode, style, out, vertices, configs, threads):
    """Bounds on real part, imaginary part, amplitude and phase per harmonic."""
    x = _read_signal(input)
    hs = _harmonics(len(x), harmonics)
    bounds = spectrum(x, hs, mode=mode, threads=threads)
    records = [record(b, vertices, configs) for b in bounds]
    _emit(render(records, len(x), mode, style), out)


@main.command()
@click.argument("input", type=click.File("r"))
@click.argument("h", type=int)
@_mode_option
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def polygon(input, h, mode, out):
    """Counter-clockwise vertices of the reachable set at harmonic H, as x,y lines."""
    x = _read_signal(input)
    _harmonics(len(x), str(h))
    P = united_set(x, h, mode)
    if P.n_vertices > 2 * len(x):
        raise click.ClickException(f"vertex count {P.n_vertices} exceeds 2N = {2 * len(x)}")
    _emit("".join(f"{fmt(a)},{fmt(b)}\n" for a, b in P.vertices), out)


@main.command()
@click.argument("input", type=click.File("r"))
@_harmonics_option
@_mode_option
@click.option("--samples", type=click.IntRange(min=0), default=10_000, show_default=True,
              help="Monte Carlo samples per harmonic.")
@click.option("--seed", type=int, default=0, show_default=True)
@_threads_option
def verify(input, harmonics, mode, samples, seed, threads):
    """Check each harmonic against the brute-force oracles. Exit 3 on any failure."""
    x = _read_signal(input)
    hs = _harmonics(len(x), harmonics)
    if len(x) > CORNER_LIMIT:
        click.echo(f"notice: corner oracle skipped, N={len(x)} exceeds {CORNER_LIMIT}", err=True)

    def run(h):
        return verify_harmonic(x, h, samples=samples, seed=seed, mode=mode)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(run, hs))
    else:
        reports = [run(h) for h in hs]
    for r in reports:
        hd = "skipped" if r.hausdorff_distance is None else fmt(r.hausdorff_distance)
        click.echo(f"h={r.harmonic} hausdorff={hd} box_deviation={fmt(r.box_deviation)} "
                   f"samples_outside={r.samples_outside}/{r.samples} area_ratio={fmt(r.area_ratio)} "
                   f"{r.verdict}")
    failed = sum(not r.passed for r in reports)
    click.echo(f"{len(reports) - failed}/{len(reports)} harmonics pass")
    if failed:
        sys.exit(EXIT_VERIFY)


if __name__ == "__main__":
    main()
