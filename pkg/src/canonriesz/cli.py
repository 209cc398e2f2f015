"""Command-line front end.

Subcommands: ``gaussian``, ``lct``, ``lcrt``, ``hlcht``, ``edge``,
``converge`` and ``bench``. Relative output paths are resolved against
``$CANONRIESZ_OUT`` when it is set.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import plotting
from .core import ParamMatrix, ParamPair
from .edge import SweepPlan, gaussian_test_image, normalize_minmax, run_sweep
from .errors import CanonRieszError
from .grids import ComplexRaster
from .imageio import read_image, write_image
from .lcrt import hlcht_apply, lcrt_apply
from .lct import lct_forward_2d
from .metrics import convergence_family, convergence_sweep
from .presets import GRAY_SWEEP, COLOR_SWEEP

log = logging.getLogger("canonriesz")

OUT_ENV = "CANONRIESZ_OUT"
COMPONENTS = ("amplitude", "real", "imag")
PRESETS = {"gray": GRAY_SWEEP, "color": COLOR_SWEEP}


class UsageError(Exception):
    pass


def _out_path(path) -> Path:
    p = Path(path)
    base = os.environ.get(OUT_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _matrix(text: str) -> ParamMatrix:
    try:
        values = [float(v) for v in text.replace("[", "").replace("]", "").split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"matrix must be 'a,b,c,d', got {text!r}") from None
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"matrix must have 4 entries, got {text!r}")
    return ParamMatrix(*values)


def _pair(matrices) -> ParamPair:
    if not matrices or len(matrices) != 2:
        raise UsageError("give --matrix twice: axis-1 matrix, then axis-2 matrix")
    return ParamPair(*matrices)


def _suffix(fmt: str) -> str:
    return {"pgm": ".pgm", "floatraster": ".lcrtf"}[fmt]


def _components(z: np.ndarray) -> dict:
    return {"amplitude": np.abs(z), "real": z.real, "imag": z.imag}


def _write_components(z: np.ndarray, prefix: str, names, fmt: str) -> list:
    written = []
    parts = _components(z)
    for name in names:
        arr = parts[name]
        if fmt == "pgm":
            arr = normalize_minmax(arr)
        path = _out_path(f"{prefix}_{name}{_suffix(fmt)}")
        path.parent.mkdir(parents=True, exist_ok=True)
        write_image(arr, path, fmt)
        written.append(path)
    return written


def _gray_input(path) -> np.ndarray:
    img = read_image(path)
    if img.ndim != 2:
        raise UsageError(f"{path}: this command needs a single-channel image")
    return img


def _emit_list(emit) -> list:
    names = emit or ["all"]
    return list(COMPONENTS) if "all" in names else list(dict.fromkeys(names))


# -- commands -----------------------------------------------------------------

def cmd_gaussian(args) -> list:
    if args.size < 2:
        raise UsageError("--size must be at least 2")
    if not args.sigma > 0:
        raise UsageError("--sigma must be positive")
    out = _out_path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    write_image(gaussian_test_image(args.size, args.sigma), out)
    return [out]


def cmd_lct(args) -> list:
    pair = _pair(args.matrix)
    img = _gray_input(args.input)
    F = lct_forward_2d(ComplexRaster.from_array(img), pair)
    names = _emit_list(args.emit)
    written = _write_components(F.samples, args.out, names, args.format)
    if args.figures:
        fig = _out_path(f"{args.out}_lct.png")
        plotting.save_components({k: v for k, v in _components(F.samples).items() if k in names}, fig,
                                 "LCT domain")
        written.append(fig)
    return written


def _transform_outputs(out: np.ndarray, pair: ParamPair, args, title: str) -> list:
    spatial = _write_components(out, f"{args.out}_spatial", COMPONENTS, args.format)
    lct_dom = lct_forward_2d(ComplexRaster.from_array(out), pair).samples
    companions = _write_components(lct_dom, f"{args.out}_lct", COMPONENTS, args.format)
    written = spatial + companions
    if args.figures:
        fig = _out_path(f"{args.out}_lct.png")
        plotting.save_components(_components(lct_dom), fig, title)
        written.append(fig)
    return written


def cmd_lcrt(args) -> list:
    pair = _pair(args.matrix)
    img = _gray_input(args.input)
    out = lcrt_apply(img, pair, args.axis).samples
    return _transform_outputs(out, pair, args, f"LCT domain after R_{args.axis}")


def cmd_hlcht(args) -> list:
    pair = _pair(args.matrix)
    img = _gray_input(args.input)
    out = hlcht_apply(img, pair[args.axis], args.axis).samples
    return _transform_outputs(out, pair, args, f"LCT domain after HLCHT (axis {args.axis})")


def load_edge_config(path) -> dict:
    """Read a sweep config; see the README for the keys."""
    try:
        cfg = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    if "preset" in cfg:
        if cfg["preset"] not in PRESETS:
            raise UsageError(f"unknown preset {cfg['preset']!r}; choose from {sorted(PRESETS)}")
        pairs = list(PRESETS[cfg["preset"]])
    elif "pairs" in cfg:
        pairs = [ParamPair.from_sequence(p) for p in cfg["pairs"]]
    elif "axis2_sweep" in cfg:
        axis1 = ParamMatrix.from_sequence(cfg.get("axis1", [0, 1, -1, 0]))
        pairs = [ParamPair(axis1, ParamMatrix.from_sequence(m)) for m in cfg["axis2_sweep"]]
    else:
        raise UsageError("config needs one of 'preset', 'pairs' or 'axis2_sweep'")
    return {"pairs": pairs, "dx": cfg.get("dx"), "figures": bool(cfg.get("figures", False)),
            "input": cfg.get("input")}


def cmd_edge(args) -> list:
    cfg = load_edge_config(args.config)
    source = args.input or cfg["input"]
    if not source:
        raise UsageError("no input image: pass --in or set 'input' in the config")
    img = read_image(source)
    entries = run_sweep(SweepPlan(img, cfg["pairs"], dx=cfg["dx"]))
    outdir = _out_path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    manifest = {"input": str(source), "entries": []}
    rows = []
    ext = ".ppm" if img.ndim == 3 else ".pgm"
    for k, entry in enumerate(entries, start=1):
        for path in (outdir / f"edge_{k:02d}{ext}", outdir / f"edge_{k:02d}.lcrtf"):
            write_image(entry.edge.values, path)
            written.append(path)
        manifest["entries"].append({
            "index": k,
            "pair": entry.edge.pair.as_list(),
            "sharpness": list(entry.edge.sharpness),
            "is_target": entry.is_target,
            "edge_map": f"edge_{k:02d}{ext}",
            "reports": [r.to_dict() for r in entry.reports],
        })
        for r in entry.reports:
            rows.append([k, r.channel, *entry.edge.sharpness, repr(r.global_mse)])
        if args.figures or cfg["figures"]:
            for r in entry.reports:
                fig = outdir / f"subregion_{k:02d}_{r.channel}.png"
                plotting.save_subregion_grid(r.subregion_mse, fig, f"entry {k} ({r.channel}) sub-region MSE")
                written.append(fig)
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2))
    with open(outdir / "metrics.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "channel", "sharpness_axis1", "sharpness_axis2", "mse"])
        writer.writerows(rows)
    written += [outdir / "manifest.json", outdir / "metrics.csv"]
    if args.figures or cfg["figures"]:
        fig = outdir / "sweep.png"
        plotting.save_sweep(img, entries, fig)
        written.append(fig)
    return written


def _float_list(text: str, cast=float) -> list:
    items = [s for s in text.split(",") if s.strip()]
    if not items:
        raise UsageError("expected a non-empty comma-separated list")
    try:
        return [cast(s) for s in items]
    except ValueError:
        raise UsageError(f"bad list {text!r}") from None


def cmd_converge(args) -> list:
    img = _gray_input(args.input) if args.input else gaussian_test_image(args.size, args.size / 8)
    eps = _float_list(args.eps)
    curve = convergence_sweep(img, convergence_family(eps), eps, axis=args.axis)
    out = _out_path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    curve.to_csv(out)
    written = [out]
    if args.figures:
        fig = out.with_suffix(".png")
        plotting.save_convergence(curve, fig)
        written.append(fig)
    return written


def cmd_bench(args) -> list:
    from .bench import time_lcrt

    sizes = _float_list(args.sizes, int)
    if any(n < 2 or n % 2 for n in sizes):
        raise UsageError("--sizes must be even integers >= 2")
    rows = time_lcrt(sizes, args.repeats)
    out = _out_path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "fast_ms", "oracle_ms"])
        for n, fast, oracle in rows:
            writer.writerow([n, f"{fast:.6f}", f"{oracle:.6f}"])
    written = [out]
    if args.figures:
        fig = out.with_suffix(".png")
        plotting.save_bench(rows, fig)
        written.append(fig)
    return written


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="canonriesz", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gaussian", help="write the Gaussian test image")
    g.add_argument("--size", type=int, default=400)
    g.add_argument("--sigma", type=float, default=50.0)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gaussian)

    def transform_args(sp, axis: bool):
        sp.add_argument("--in", dest="input", required=True)
        sp.add_argument("--matrix", type=_matrix, action="append", required=True,
                        help="a,b,c,d; give twice (axis 1, then axis 2)")
        if axis:
            sp.add_argument("--axis", type=int, choices=(1, 2), required=True)
        sp.add_argument("--out", required=True, help="output prefix")
        sp.add_argument("--format", choices=("pgm", "floatraster"), default="pgm")
        sp.add_argument("--figures", action="store_true", help="also render PNG panels")

    lct = sub.add_parser("lct", help="forward 2D LCT components")
    transform_args(lct, axis=False)
    lct.add_argument("--emit", action="append", choices=(*COMPONENTS, "all"))
    lct.set_defaults(func=cmd_lct)

    for name, func, help_text in (("lcrt", cmd_lcrt, "linear canonical Riesz transform"),
                                  ("hlcht", cmd_hlcht, "half-plane linear canonical Hilbert transform")):
        sp = sub.add_parser(name, help=help_text)
        transform_args(sp, axis=True)
        sp.set_defaults(func=func)

    e = sub.add_parser("edge", help="Riesz-energy edge detection sweep")
    e.add_argument("--in", dest="input")
    e.add_argument("--config", required=True)
    e.add_argument("--out", required=True, help="output directory")
    e.add_argument("--figures", action="store_true")
    e.set_defaults(func=cmd_edge)

    c = sub.add_parser("converge", help="distance to the classical Riesz transform as epsilon shrinks")
    c.add_argument("--in", dest="input")
    c.add_argument("--size", type=int, default=128)
    c.add_argument("--eps", default="0.1,0.01,0.001,0.0001")
    c.add_argument("--axis", type=int, choices=(1, 2), default=1)
    c.add_argument("--out", required=True)
    c.add_argument("--figures", action="store_true")
    c.set_defaults(func=cmd_converge)

    b = sub.add_parser("bench", help="time the multiplier path against the oracle path")
    b.add_argument("--sizes", default="64,128,256,512")
    b.add_argument("--repeats", type=int, default=3)
    b.add_argument("--out", required=True)
    b.add_argument("--figures", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        written = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (CanonRieszError, OSError) as exc:
        print(f"canonriesz {args.command}: error: {exc}", file=sys.stderr)
        return 1
    for path in written:
        log.info("wrote %s", path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
