"""Command-line interface: one subcommand per capability, JSON out.

Graphs travel as JSON documents {"n": <int>, "chords": [[u, v], ...]} with
u < v and chords sorted; extra top-level keys (source, notes, ...) are
carried through untouched. Input comes from a file path or standard input
("-"). All output is stable-ordered JSON (sorted keys) or plain CSV, so runs
can be diffed byte for byte.

Exit codes: 0 ok, 1 computational failure or exhausted budget, 2 usage or
malformed input, 3 structurally invalid graph data.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .analysis import (
    complete_with_single_chord,
    contractible_arcs,
    half_arc_dichotomy,
    is_pancyclic,
    missing_lengths,
    parallel_chord_reduction,
)
from .bounds import bounds_report
from .constructions import five_chord_for_n
from .cycle_enum import brute_force_spectrum, max_cycle_bound, spectrum
from .graph_core import (
    ChordedCycle,
    InvalidGraphError,
    arcs_of,
    contract_arc,
    normalize_chord,
)
from .search import (
    ChordCeilingReached,
    SearchBudgetExceeded,
    SearchConfig,
    SearchFailure,
    SearchResult,
    build_table,
    find_min_chords,
    prove_no_pancyclic,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INVALID = 3


@dataclass
class GraphDocument:
    """The JSON interchange object plus any metadata keys it carried."""

    graph: ChordedCycle
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_text(cls, text: str) -> "GraphDocument":
        doc = json.loads(text)
        if not isinstance(doc, dict):
            raise InvalidGraphError("graph document must be a JSON object")
        graph = ChordedCycle.from_json_dict(doc)
        metadata = {k: v for k, v in doc.items() if k not in ("n", "chords")}
        return cls(graph, metadata)

    def to_json_dict(self) -> dict:
        doc = self.graph.to_json_dict()
        doc.update(self.metadata)
        return doc


def _read_document(path: str) -> GraphDocument:
    if path == "-":
        return GraphDocument.from_text(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return GraphDocument.from_text(fh.read())


def _emit(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _spectrum_report(g: ChordedCycle) -> dict:
    s = spectrum(g)
    bound = max_cycle_bound(g.k)
    return {
        "n": g.n,
        "edge_count": g.edge_count,
        "lengths": sorted(s.lengths),
        "cycle_count": s.cycle_count,
        "pancyclic": s.is_pancyclic(),
        "missing_lengths": sorted(missing_lengths(g)),
        "shi_bound": bound,
        "within_shi_bound": s.cycle_count <= bound,
    }


def cmd_spectrum(args) -> int:
    doc = _read_document(args.input)
    _emit(_spectrum_report(doc.graph))
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = _read_document(args.input)
    g = doc.graph
    report = _spectrum_report(g)
    report["oracle_used"] = False
    report["methods_agree"] = None
    if args.oracle:
        if g.n <= 20:
            oracle = brute_force_spectrum(g)
            report["oracle_used"] = True
            report["methods_agree"] = (
                sorted(oracle.lengths) == report["lengths"]
                and oracle.cycle_count == report["cycle_count"])
        else:
            print(f"verify: oracle limited to n <= 20, skipping for n={g.n}",
                  file=sys.stderr)
    _emit(report)
    if report["oracle_used"] and not report["methods_agree"]:
        print("verify: enumeration methods disagree", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def _search_config(args) -> SearchConfig:
    return SearchConfig(
        max_k=args.max_k,
        jobs=args.jobs,
        degree_prune=getattr(args, "degree_prune", False),
        validate=getattr(args, "validate", False),
    )


def cmd_search(args) -> int:
    result = find_min_chords(args.n, _search_config(args))
    print(f"search: n={args.n} done in {result.wall_time:.2f}s", file=sys.stderr)
    _emit(result.to_json_dict())
    return EXIT_OK


def cmd_prove_none(args) -> int:
    cert = prove_no_pancyclic(args.n, args.k, _search_config(args))
    _emit(cert.to_json_dict())
    return EXIT_OK if cert.complete else EXIT_FAILURE


def cmd_table(args) -> int:
    rows = build_table(args.from_n, args.to_n, _search_config(args))
    failures = [r for r in rows if isinstance(r, SearchFailure)]
    if args.format == "csv":
        for row in rows:
            if isinstance(row, SearchResult):
                print(f"{row.n},{row.k_min},{row.m}")
    else:
        _emit([row.to_json_dict() for row in rows])
    for failure in failures:
        print(f"table: n={failure.n}: {failure.reason}", file=sys.stderr)
    return EXIT_FAILURE if failures else EXIT_OK


def cmd_bounds(args) -> int:
    _emit(bounds_report(args.n).to_json_dict())
    return EXIT_OK


def cmd_construct(args) -> int:
    g = five_chord_for_n(args.n)
    s = spectrum(g)
    _emit({
        "graph": g.to_json_dict(),
        "verification": {
            "edge_count": g.edge_count,
            "pancyclic": s.is_pancyclic(),
            "lengths": sorted(s.lengths),
            "cycle_count": s.cycle_count,
            "missing_lengths": sorted(missing_lengths(g)),
        },
    })
    return EXIT_OK


def _arc_dict(arc) -> dict:
    return {"start": arc.start, "end": arc.end, "length": arc.length}


def cmd_reduce(args) -> int:
    doc = _read_document(args.input)
    g = doc.graph
    report: dict = {"n": g.n, "edge_count": g.edge_count, "pancyclic": is_pancyclic(g)}
    if not report["pancyclic"]:
        report["missing_lengths"] = sorted(missing_lengths(g))
        report["note"] = "reductions apply to pancyclic graphs only"
        _emit(report)
        return EXIT_OK

    chord_red = parallel_chord_reduction(g)
    report["parallel_chord"] = None
    if chord_red is not None:
        p, q = chord_red.witness
        report["parallel_chord"] = {
            "deleted_chord": list(p),
            "paired_with": list(q),
            "result": chord_red.result_graph.to_json_dict(),
            "result_pancyclic": chord_red.result_pancyclic,
        }

    report["contractible_arcs"] = []
    if g.n > 6:
        for arc, case in contractible_arcs(g):
            contracted = contract_arc(g, arc)
            report["contractible_arcs"].append({
                "arc": _arc_dict(arc),
                "case": case,
                "result": contracted.to_json_dict(),
                "result_pancyclic": is_pancyclic(contracted),
            })

    report["half_arc"] = []
    if g.n % 2 == 0:
        for arc in arcs_of(g):
            if arc.length != g.n // 2 - 1:
                continue
            if normalize_chord(arc.start, arc.end) in g.chords:
                continue
            outcome = half_arc_dichotomy(g, arc)
            entry = {
                "arc": _arc_dict(arc),
                "case": outcome.case,
                "graph": outcome.graph.to_json_dict(),
                "lengths": sorted(outcome.graph_spectrum.lengths),
            }
            if outcome.case == "subgraph":
                entry["missing_length"] = outcome.missing_length
                entry["subgraph_vertices"] = list(outcome.subgraph_vertices)
                completion = complete_with_single_chord(outcome.graph)
                if completion is not None:
                    completed, added = completion
                    entry["completed"] = completed.to_json_dict()
                    entry["added_chord"] = list(added) if added else None
                else:
                    entry["completed"] = None
            report["half_arc"].append(entry)

    _emit(report)
    return EXIT_OK


def _add_input_argument(sub) -> None:
    sub.add_argument("input", nargs="?", default="-",
                     help="graph JSON file, or - for standard input (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pancyclic",
        description="Minimum edge counts of pancyclic graphs: spectra, bounds, "
                    "constructions and exhaustive search.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="cycle lengths and count of a graph")
    _add_input_argument(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="pancyclicity check, optionally cross-checked")
    _add_input_argument(p)
    p.add_argument("--oracle", action="store_true",
                   help="also run the brute-force enumerator (n <= 20) and compare")
    p.set_defaults(func=cmd_verify)

    for name, helptext in (("search", "minimum chord count for one n"),
                           ("prove-none", "certify no pancyclic graph at (n, k)"),
                           ("table", "search a range of n")):
        p = sub.add_parser(name, help=helptext)
        if name == "table":
            p.add_argument("--from", dest="from_n", type=int, required=True)
            p.add_argument("--to", dest="to_n", type=int, required=True)
            p.add_argument("--format", choices=("csv", "json"), default="json")
        else:
            p.add_argument("--n", type=int, required=True)
        if name == "prove-none":
            p.add_argument("--k", type=int, required=True)
        p.add_argument("--max-k", dest="max_k", type=int, default=6)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--degree-prune", dest="degree_prune", action="store_true",
                       help="skip candidates with cycle-count-infeasible max degree")
        p.add_argument("--validate", action="store_true",
                       help="re-test pruned candidates; fail on any violation")
        p.set_defaults(func={"search": cmd_search,
                             "prove-none": cmd_prove_none,
                             "table": cmd_table}[name])

    p = sub.add_parser("bounds", help="lower bounds on m(n)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="five-chord family member with n vertices")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("reduce", help="apply the size reductions to a graph")
    p.add_argument("--input", default="-",
                   help="graph JSON file, or - for standard input (default)")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidGraphError as exc:
        print(f"pancyclic: invalid graph: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except json.JSONDecodeError as exc:
        print(f"pancyclic: malformed JSON: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"pancyclic: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchBudgetExceeded, ChordCeilingReached) as exc:
        print(f"pancyclic: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        print(f"pancyclic: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
