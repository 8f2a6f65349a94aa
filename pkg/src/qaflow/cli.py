"""Command-line front end.

Subcommands: ``brute`` (exhaustive Max-Cut), ``qaa`` (sample the
adiabatic circuit, optionally with noise), ``flow`` (circuit eigenphase
sweep as CSV), ``index`` (signed crossing count of the Hermitian flow).

Primary output goes to stdout, or to ``--out FILE`` with a
``FILE.manifest.json`` sidecar recording the resolved parameters, the
graph digest, and timing, so a run can be reproduced exactly.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .errors import GraphFormatError, QaflowError
from .flow import compute_flow, intersection_index
from .graphs import Graph, brute_force_maxcut, parse_graph
from .noise import NoisyRunConfig, noisy_qaa_histogram, parse_noise_spec
from .statevector import TrotterSchedule


def _read_graph(path: str) -> tuple[Graph, str]:
    """Load a graph file and return it with the file's SHA-256 digest."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise GraphFormatError(
            f"cannot read graph file {path}: {exc.strerror or exc}"
        ) from exc
    digest = hashlib.sha256(raw).hexdigest()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"{path}: not valid UTF-8: {exc}") from exc
    try:
        graph = parse_graph(text)
    except GraphFormatError as exc:
        raise GraphFormatError(f"{path}: {exc}") from exc
    return graph, digest


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(out).write_text(text, encoding="utf-8")


def _write_manifest(args: argparse.Namespace, digest: str,
                    duration: float) -> None:
    if args.out is None:
        return
    skip = {"func", "graph", "out", "command"}
    params = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    manifest = {
        "command": args.command,
        "graph": args.graph,
        "graph_sha256": digest,
        "parameters": params,
        "seed": getattr(args, "seed", None),
        "version": __version__,
        "duration_s": round(duration, 6),
        "output": args.out,
    }
    path = Path(f"{args.out}.manifest.json")
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                    encoding="utf-8")


def cmd_brute(args: argparse.Namespace) -> None:
    graph, digest = _read_graph(args.graph)
    start = time.perf_counter()
    best = brute_force_maxcut(graph)
    duration = time.perf_counter() - start
    doc = {
        "max_cut": best.max_cut,
        "degeneracy": best.degeneracy,
        "solutions": list(best.bitstrings()),
    }
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    _write_manifest(args, digest, duration)


def cmd_qaa(args: argparse.Namespace) -> None:
    graph, digest = _read_graph(args.graph)
    config = NoisyRunConfig(
        graph=graph,
        schedule=TrotterSchedule(dt=args.dt, n_steps=args.steps),
        noise=parse_noise_spec(args.noise),
        shots=args.shots,
        seed=args.seed,
    )
    start = time.perf_counter()
    hist = noisy_qaa_histogram(config)
    duration = time.perf_counter() - start
    top = hist.top(args.top)
    doc = {
        "n_qubits": hist.n_qubits,
        "shots": hist.shots,
        "counts": dict(sorted(hist.counts.items())),
        "top": [[word, count] for word, count in top],
    }
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    if args.out is not None:
        print(f"top outcomes ({len(top)} of {len(hist.counts)} observed):")
        for word, count in top:
            print(f"  {word}  {count:>8}  {count / hist.shots:.5f}")
    _write_manifest(args, digest, duration)


def cmd_flow(args: argparse.Namespace) -> None:
    graph, digest = _read_graph(args.graph)
    schedule = TrotterSchedule(dt=args.dt, n_steps=args.steps)
    start = time.perf_counter()
    result = compute_flow(graph, args.samples, schedule, scale=args.scale)
    duration = time.perf_counter() - start
    lines = ["s,k,phase,re_scaled,im_scaled"]
    for sample in result.samples:
        for k, phase in enumerate(sample.phases):
            point = sample.points[k]
            lines.append(f"{sample.s:.17g},{k},{phase:.17g},"
                         f"{point.real:.17g},{point.imag:.17g}")
    _emit("\n".join(lines) + "\n", args.out)
    if result.any_wrap:
        flagged = int(result.wrap_flags.sum())
        print(f"warning: eigenphase spread exceeds one turn at {flagged} "
              f"of {len(result.samples)} samples; phases may alias there",
              file=sys.stderr)
    if args.out is not None:
        branch_lines = ["branch_id,s,phase"]
        for b in range(result.branches.shape[0]):
            for j, s in enumerate(result.s_values):
                branch_lines.append(
                    f"{b},{s:.17g},{result.branches[b, j]:.17g}")
        branch_path = Path(args.out).with_suffix(".branches.csv")
        branch_path.write_text("\n".join(branch_lines) + "\n",
                               encoding="utf-8")
    _write_manifest(args, digest, duration)


def cmd_index(args: argparse.Namespace) -> None:
    graph, digest = _read_graph(args.graph)
    start = time.perf_counter()
    report = intersection_index(graph, n_samples=args.samples)
    duration = time.perf_counter() - start
    doc = {
        "index": report.index,
        "crossings_down": report.crossings_down,
        "crossings_up": report.crossings_up,
        "rank_start": report.rank_start,
        "rank_end": report.rank_end,
    }
    _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    _write_manifest(args, digest, duration)


def _noise_arg(text: str) -> str:
    # argparse turns the ValueError from a bad spec into a usage error;
    # the original spelling is kept for the manifest
    parse_noise_spec(text)
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qaflow",
        description="Adiabatic Max-Cut simulator and spectral-flow tools")
    parser.add_argument("--version", action="version",
                        version=f"qaflow {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("brute", help="exhaustive Max-Cut solve")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--out", help="write JSON here plus a manifest")
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("qaa", help="sample the adiabatic circuit")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--dt", type=float, default=0.1,
                   help="Trotter step duration (default 0.1)")
    p.add_argument("--steps", type=int, default=1000,
                   help="number of Trotter steps (default 1000)")
    p.add_argument("--shots", type=int, default=40960,
                   help="measurement samples (default 40960)")
    p.add_argument("--seed", type=int, default=0,
                   help="master seed (default 0)")
    p.add_argument("--noise", type=_noise_arg, default="none",
                   help="none, heron-r3-opt, heron-r2-med, or "
                        "custom:p_1q,p_2q,p_ro")
    p.add_argument("--top", type=int, default=8,
                   help="entries in the top-outcome summary (default 8, "
                        "0 for all)")
    p.add_argument("--out", help="write histogram JSON here plus a "
                                 "manifest")
    p.set_defaults(func=cmd_qaa)

    p = sub.add_parser("flow", help="circuit eigenphase sweep (CSV)")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--samples", type=int, default=20,
                   help="number of s values (default 20)")
    p.add_argument("--steps", type=int, default=50,
                   help="Trotter steps per unitary (default 50)")
    p.add_argument("--dt", type=float, default=0.1,
                   help="Trotter step duration (default 0.1)")
    p.add_argument("--scale", type=float, default=20.0,
                   help="radial scale of the spiral embedding "
                        "(default 20)")
    p.add_argument("--out", help="write sample CSV here (branch CSV and "
                                 "manifest alongside)")
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("index", help="signed crossing count of the "
                                     "Hermitian flow")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--samples", type=int, default=20,
                   help="initial s-grid size (default 20)")
    p.add_argument("--out", help="write JSON here plus a manifest")
    p.set_defaults(func=cmd_index)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except QaflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
