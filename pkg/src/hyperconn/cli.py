"""Command-line surface: generation, analysis, oracle runs, verification.

Commands communicate through text and exit codes only: 0 for success,
1 for a verification finding, 2 for usage or parse errors.  The
``--machine`` view of ``analyze`` prints exactly ten fixed ``key=value``
lines and never includes timings, so identical inputs give byte-identical
machine output.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .connectivity import CutResult, edge_atom, edge_connectivity, edge_connectivity_oracle
from .constructions import (
    SplitMix64,
    affine_doubled_family,
    affine_hypergraph,
    builtin_corpus,
    circulant_graph,
    complete_uniform,
    cyclic_difference_hypergraph,
    glued_complete_family,
    random_uniform_hypergraph,
)
from .model import (
    Hypergraph,
    HypergraphError,
    _edge_bitmasks,
    boundary,
    components,
    degree_extremes,
    is_connected,
    is_linear,
    is_uniform,
    parse_hypergraph,
    serialize_hypergraph,
)
from .symmetry import transitivity_generators

__all__ = ["AnalysisReport", "analyze", "render_machine", "render_human", "main"]

_MACHINE_KEYS = (
    "n",
    "m",
    "delta",
    "Delta",
    "uniform_k",
    "linear",
    "connected",
    "kappa",
    "transitive",
    "maximal",
)

_FAMILIES = (
    "complete",
    "glued-complete",
    "affine",
    "affine-doubled",
    "cyclic-difference",
    "circulant",
    "random",
)


@dataclass
class AnalysisReport:
    """Everything one analysis run established about an instance.

    Optional fields stay None when their phase was not requested or hit a
    per-field guard (see ``notes``); ``maximal`` is kappa == delta whenever
    kappa is known.  ``timings_ms`` is per-phase wall time, rendered only in
    the human view.
    """

    n: int
    m: int
    edge_sizes: tuple[tuple[int, int], ...]
    delta: int
    Delta: int
    uniform_k: int | None
    linear: bool
    linear_witness: tuple[tuple[int, int], int, int] | None
    connected: bool
    component_count: int
    kappa: int | None = None
    cut: CutResult | None = None
    maximal: bool | None = None
    transitive: bool | None = None
    generators: tuple[tuple[int, ...], ...] = ()
    atom: CutResult | None = None
    notes: tuple[str, ...] = ()
    timings_ms: dict[str, float] = field(default_factory=dict)


def analyze(
    H: Hypergraph,
    *,
    connectivity: bool = False,
    transitivity: bool = False,
    atom: bool = False,
) -> AnalysisReport:
    """Run the requested phases; guard violations become notes, not failures."""
    notes: list[str] = []
    timings: dict[str, float] = {}

    start = time.perf_counter()
    sizes = tuple(sorted(Counter(len(e) for e in H.edges).items()))
    delta, big_delta = degree_extremes(H)
    try:
        uniform_k = is_uniform(H)
    except HypergraphError:
        uniform_k = None
        notes.append("uniformity: undefined (no edges)")
    verdict = is_linear(H)
    comps = components(H)
    timings["base"] = (time.perf_counter() - start) * 1000.0

    report = AnalysisReport(
        n=H.n,
        m=H.m,
        edge_sizes=sizes,
        delta=delta,
        Delta=big_delta,
        uniform_k=uniform_k,
        linear=verdict.linear,
        linear_witness=verdict.witness,
        connected=len(comps) == 1,
        component_count=len(comps),
    )

    if connectivity:
        start = time.perf_counter()
        try:
            cut = edge_connectivity(H)
            report.kappa = cut.value
            report.cut = cut
            report.maximal = cut.value == delta
        except HypergraphError as exc:
            notes.append(f"edge connectivity: skipped ({exc})")
        timings["connectivity"] = (time.perf_counter() - start) * 1000.0

    if transitivity:
        start = time.perf_counter()
        gens = transitivity_generators(H)
        report.transitive = gens is not None
        report.generators = tuple(gens) if gens else ()
        timings["transitivity"] = (time.perf_counter() - start) * 1000.0

    if atom:
        start = time.perf_counter()
        try:
            report.atom = edge_atom(H)
        except HypergraphError as exc:
            notes.append(f"edge atom: skipped ({exc})")
        timings["atom"] = (time.perf_counter() - start) * 1000.0

    report.notes = tuple(notes)
    report.timings_ms = timings
    return report


def render_machine(report: AnalysisReport) -> str:
    values = {
        "n": report.n,
        "m": report.m,
        "delta": report.delta,
        "Delta": report.Delta,
        "uniform_k": _render_opt(report.uniform_k),
        "linear": _render_bool(report.linear),
        "connected": _render_bool(report.connected),
        "kappa": _render_opt(report.kappa),
        "transitive": "none" if report.transitive is None else _render_bool(report.transitive),
        "maximal": "none" if report.maximal is None else _render_bool(report.maximal),
    }
    return "".join(f"{key}={values[key]}\n" for key in _MACHINE_KEYS)


def render_human(report: AnalysisReport) -> str:
    size_text = ", ".join(f"{s} (x{c})" for s, c in report.edge_sizes) or "none"
    lines = [
        f"vertices: {report.n}",
        f"edges: {report.m}",
        f"edge sizes: {size_text}",
        f"degree: min {report.delta}, max {report.Delta}",
        "uniform: " + (f"k={report.uniform_k}" if report.uniform_k is not None else "no"),
    ]
    if report.linear:
        lines.append("linear: yes")
    else:
        pair, i, j = report.linear_witness
        lines.append(f"linear: no (pair {pair[0]},{pair[1]} repeats in edges {i} and {j})")
    if report.connected:
        lines.append("connected: yes")
    else:
        lines.append(f"connected: no ({report.component_count} components)")
    if report.kappa is not None:
        lines.append(f"edge connectivity: {report.kappa}")
        lines.append("  witness side: " + _render_ints(report.cut.side))
        lines.append("  cut edges: " + (_render_ints(report.cut.cut_edges) or "(none)"))
        lines.append("maximally edge-connected: " + ("yes" if report.maximal else "no"))
    if report.transitive is not None:
        lines.append("vertex-transitive: " + ("yes" if report.transitive else "no"))
        for gen in report.generators:
            lines.append("  generator: " + format_permutation(gen))
    if report.atom is not None:
        lines.append(
            f"edge atom: {_render_ints(report.atom.side)} (boundary {report.atom.value})"
        )
    for note in report.notes:
        lines.append(f"note: {note}")
    if report.timings_ms:
        lines.append(
            "timings [ms]: "
            + " ".join(f"{name}={ms:.1f}" for name, ms in report.timings_ms.items())
        )
    return "\n".join(lines) + "\n"


def format_permutation(p: tuple[int, ...]) -> str:
    """One-line machine-consumable permutation rendering."""
    return "p " + " ".join(str(i) for i in p)


def cmd_generate(args: argparse.Namespace) -> int:
    H, provenance = _build_instance(args)
    text = "".join(f"# {line}\n" for line in provenance) + serialize_hypergraph(H)
    out = Path(args.out)
    out.write_text(text, encoding="utf-8", newline="\n")
    print(f"wrote {out} (n={H.n}, m={H.m})")
    return 0


def _build_instance(args: argparse.Namespace) -> tuple[Hypergraph, list[str]]:
    family = args.family
    if family == "complete":
        n, k = _require(args, "n"), _require(args, "k")
        return complete_uniform(n, k), [f"family=complete n={n} k={k}"]
    if family == "glued-complete":
        n, k = _require(args, "n"), _require(args, "k")
        H = glued_complete_family(n, k)
        return H, [
            f"family=glued-complete n={n} k={k}",
            "labels: block i (1-based) holds vertices (i-1)*n..i*n-1; label (v,i) -> (i-1)*n+(v-1)",
        ]
    if family == "affine":
        k = _require(args, "k")
        return affine_hypergraph(k), [
            f"family=affine k={k}",
            "labels: 1-based grid point p -> vertex p-1",
        ]
    if family == "affine-doubled":
        k = _require(args, "k")
        return affine_doubled_family(k), [
            f"family=affine-doubled k={k}",
            "labels: 1-based grid point p -> vertex p-1; twin copy at offset k*k",
        ]
    if family == "cyclic-difference":
        n, base = _require(args, "n"), _require(args, "base")
        H = cyclic_difference_hypergraph(n, base)
        return H, [
            f"family=cyclic-difference n={n} base={_render_csv(base)}",
            f"linear={_render_bool(bool(is_linear(H)))}",
        ]
    if family == "circulant":
        n, offsets = _require(args, "n"), _require(args, "offsets")
        H = circulant_graph(n, offsets)
        return H, [
            f"family=circulant n={n} offsets={_render_csv(offsets)}",
            f"connected={_render_bool(is_connected(H))}",
        ]
    if family == "random":
        n, k, m = _require(args, "n"), _require(args, "k"), _require(args, "m")
        seed = args.seed
        return random_uniform_hypergraph(n, k, m, seed), [
            f"family=random n={n} k={k} m={m} seed={seed}"
        ]
    raise HypergraphError(f"unknown family {family!r}")


def cmd_analyze(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    H = parse_hypergraph(Path(args.path).read_text(encoding="utf-8"))
    parse_ms = (time.perf_counter() - start) * 1000.0
    report = analyze(
        H,
        connectivity=args.connectivity,
        transitivity=args.transitivity,
        atom=args.atom,
    )
    report.timings_ms = {"parse": parse_ms, **report.timings_ms}
    if args.machine:
        sys.stdout.write(render_machine(report))
    else:
        sys.stdout.write(render_human(report))
    return 0


def cmd_verify_lemma(args: argparse.Namespace) -> int:
    if args.trials < 0 or args.nmax < 2:
        raise HypergraphError("lemma check needs --trials >= 0 and --nmax >= 2")
    exhaustive = [
        (name, H)
        for name, H in builtin_corpus()
        if H.n <= 8 and H.m > 0 and is_uniform(H) is not None
    ]
    pair_count = 0
    for name, H in exhaustive:
        table = _boundary_size_table(H)
        size = 1 << H.n
        for x_mask in range(size):
            bx = table[x_mask]
            for y_mask in range(x_mask, size):
                pair_count += 1
                if table[x_mask | y_mask] + table[x_mask & y_mask] > bx + table[y_mask]:
                    _print_uncrossing_violation(name, H, x_mask, y_mask)
                    print("FAIL")
                    return 1
    print(
        f"uncrossing exhaustive: {len(exhaustive)} uniform corpus instances with n <= 8, "
        f"{pair_count} (X, Y) pairs, 0 violations"
    )

    rng = SplitMix64(args.seed)
    for trial in range(args.trials):
        n = 2 + rng.below(args.nmax - 1)
        k = 2 + rng.below(min(n, 4) - 1)
        m = 1 + rng.below(2 * n)
        H = random_uniform_hypergraph(n, k, m, seed=rng.next_u64())
        x_mask = rng.below(1 << n)
        y_mask = rng.below(1 << n)
        xs = _mask_set(x_mask, n)
        ys = _mask_set(y_mask, n)
        lhs = len(boundary(H, xs | ys)) + len(boundary(H, xs & ys))
        rhs = len(boundary(H, xs)) + len(boundary(H, ys))
        if lhs > rhs:
            _print_uncrossing_violation(f"random trial {trial}", H, x_mask, y_mask)
            print("FAIL")
            return 1
    print(
        f"uncrossing random: {args.trials} trials (seed={args.seed}, nmax={args.nmax}), "
        "0 violations"
    )
    print("PASS")
    return 0


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise HypergraphError(f"corpus directory not found: {corpus}")
    files = sorted(p for p in corpus.iterdir() if p.is_file())
    if not files:
        raise HypergraphError(f"corpus directory is empty: {corpus}")
    rows = []
    for path in files:
        H = parse_hypergraph(path.read_text(encoding="utf-8"))
        gap = _hypothesis_gap(H, args.which)
        if gap is None:
            kappa = edge_connectivity(H).value
            delta = degree_extremes(H)[0]
            verdict = "pass" if kappa == delta else "FAIL"
            rows.append((path.name, "ok", str(kappa), str(delta), verdict))
        else:
            rows.append((path.name, gap, "-", "-", "skipped (hypothesis)"))
    print(f"which={args.which} corpus={corpus}")
    for line in _format_table(("instance", "gate", "kappa", "delta", "verdict"), rows):
        print(line)
    gated = [r for r in rows if r[1] == "ok"]
    failed = [r for r in rows if r[4] == "FAIL"]
    print(
        f"summary: {len(rows)} instances, {len(gated)} gated, "
        f"{len(gated) - len(failed)} pass, {len(failed)} fail, {len(rows) - len(gated)} skipped"
    )
    return _verdict_exit_code(rows)


def _verdict_exit_code(rows) -> int:
    failed = [r for r in rows if r[4] == "FAIL"]
    if failed:
        for row in failed:
            print(f"critical: {row[0]} violates kappa == delta under satisfied hypotheses")
        return 1
    return 0


def _hypothesis_gap(H: Hypergraph, which: str) -> str | None:
    """None when every hypothesis of the selected statement holds, else the
    first one that fails (cheap checks first)."""
    try:
        k = is_uniform(H)
    except HypergraphError:
        return "no edges"
    if which == "mader":
        if k != 2:
            return "not 2-uniform"
    else:
        if k is None:
            return "not uniform"
        if k < 3:
            return "edge size below 3"
        if not is_linear(H):
            return "not linear"
    if not is_connected(H):
        return "not connected"
    if transitivity_generators(H) is None:
        return "not vertex-transitive"
    return None


def cmd_oracle(args: argparse.Namespace) -> int:
    H = parse_hypergraph(Path(args.path).read_text(encoding="utf-8"))
    result = edge_connectivity_oracle(H)
    print(f"kappa={result.value}")
    if result.value == 0:
        print("side=" + _render_ints(result.side))
        print("cut=")
    else:
        atom = edge_atom(H)
        print("atom=" + _render_ints(atom.side))
        print("cut=" + _render_ints(atom.cut_edges))
    return 0


def _boundary_size_table(H: Hypergraph) -> list[int]:
    """|boundary(X)| for every vertex subset X, indexed by bitmask."""
    emasks = _edge_bitmasks(H)
    table = [0] * (1 << H.n)
    for mask in range(1 << H.n):
        count = 0
        for em in emasks:
            inside = em & mask
            if inside and inside != em:
                count += 1
        table[mask] = count
    return table


def _print_uncrossing_violation(name: str, H: Hypergraph, x_mask: int, y_mask: int) -> None:
    xs = _mask_set(x_mask, H.n)
    ys = _mask_set(y_mask, H.n)
    print(f"violation in {name}:")
    print("  X = " + _render_ints(sorted(xs)))
    print("  Y = " + _render_ints(sorted(ys)))
    print(
        f"  |boundary(X u Y)|={len(boundary(H, xs | ys))}"
        f" |boundary(X n Y)|={len(boundary(H, xs & ys))}"
        f" |boundary(X)|={len(boundary(H, xs))}"
        f" |boundary(Y)|={len(boundary(H, ys))}"
    )
    sys.stdout.write(serialize_hypergraph(H))


def _mask_set(mask: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(n) if mask >> v & 1)


def _format_table(headers: tuple[str, ...], rows) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return lines


def _render_bool(value: bool) -> str:
    return "true" if value else "false"


def _render_opt(value: int | None) -> str:
    return "none" if value is None else str(value)


def _render_ints(values) -> str:
    return " ".join(str(v) for v in values)


def _render_csv(values) -> str:
    return ",".join(str(v) for v in values)


def _require(args: argparse.Namespace, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise HypergraphError(f"family {args.family!r} requires --{name}")
    return value


def _int_tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperconn",
        description="Edge-connectivity, boundary, and symmetry toolkit for small hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a generated instance to a file")
    gen.add_argument("--family", required=True, choices=_FAMILIES)
    gen.add_argument("--n", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--offsets", type=_int_tuple, help="comma-separated, e.g. 1,2")
    gen.add_argument("--base", type=_int_tuple, help="comma-separated residues, e.g. 0,1,4")
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_generate)

    ana = sub.add_parser("analyze", help="report structure of an instance file")
    ana.add_argument("path")
    ana.add_argument("--connectivity", action="store_true")
    ana.add_argument("--transitivity", action="store_true")
    ana.add_argument("--atom", action="store_true")
    ana.add_argument("--machine", action="store_true")
    ana.set_defaults(func=cmd_analyze)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver_sub = ver.add_subparsers(dest="check", required=True)
    lem = ver_sub.add_parser("lemma", help="uncrossing inequality for boundaries")
    lem.add_argument("--trials", type=int, default=1000)
    lem.add_argument("--seed", type=int, default=0)
    lem.add_argument("--nmax", type=int, default=10)
    lem.set_defaults(func=cmd_verify_lemma)
    thm = ver_sub.add_parser("theorem", help="kappa == delta on gated corpus files")
    thm.add_argument("--corpus", required=True)
    thm.add_argument("--which", required=True, choices=("mader", "main"))
    thm.set_defaults(func=cmd_verify_theorem)

    orc = sub.add_parser("oracle", help="brute-force connectivity and edge atom")
    orc.add_argument("path")
    orc.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HypergraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    sys.exit(main())
