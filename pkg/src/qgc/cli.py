"""Command-line front end.

Subcommands map one-to-one onto library entry points; output is
deterministic, human tables by default and JSON lines with --json.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import codes, constructions, orbits, transforms
from .boolfn import BooleanFunction, apc_distance, graph_function
from .canon import canonical_form
from .codes import (
    code_distance,
    code_type,
    graph_to_code,
    partial_weight_distribution,
)
from .generate import connected_keys
from .graphs import Graph, from_graph6, to_graph6
from .orbits import OrbitRecord, classify, record_from_json, record_to_json
from .transforms import IHN, IH, HN, multispectrum, par, SpectralVector


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("QGC_THREADS", "1")))
    except ValueError:
        return 1


# -- input helpers -------------------------------------------------------------


def _graph_from_args(args) -> Graph:
    if getattr(args, "g6", None):
        return from_graph6(args.g6)
    if getattr(args, "circulant", None):
        row = constructions.circulant_row_from_text(args.circulant)
        return constructions.circulant_graph(row)
    if getattr(args, "edges", None):
        with open(args.edges) as fh:
            from .graphs import from_edge_list

            return from_edge_list(fh.read())
    if getattr(args, "generator", None):
        with open(args.generator) as fh:
            s = codes.generator_from_text(fh.read())
        s.validate()
        return codes.stabilizer_to_graph(s)
    if getattr(args, "stabilizer", None):
        with open(args.stabilizer) as fh:
            s = codes.stabilizer_from_text(fh.read())
        s.validate()
        return codes.stabilizer_to_graph(s)
    data = sys.stdin.readline().strip()
    if not data:
        raise ValueError("no graph given (use --g6/--circulant/... or stdin graph6)")
    return from_graph6(data)


def _function_from_args(args) -> BooleanFunction:
    if getattr(args, "anf", None) is not None:
        return BooleanFunction.from_anf_string(args.anf, getattr(args, "n", None))
    if getattr(args, "hex", None):
        if not getattr(args, "n", None):
            raise ValueError("--hex needs --n")
        return BooleanFunction.from_hex(args.n, args.hex)
    return graph_function(_graph_from_args(args))


def _out(args):
    if getattr(args, "out", None):
        return open(args.out, "w")
    return sys.stdout


# -- census io ------------------------------------------------------------------


def census_write(records: list[OrbitRecord], fh) -> None:
    for r in records:
        fh.write(record_to_json(r) + "\n")


def census_read(fh) -> list[OrbitRecord]:
    out = []
    for lineno, line in enumerate(fh, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(record_from_json(line))
        except (json.JSONDecodeError, KeyError) as exc:
            raise ValueError(f"malformed census line {lineno}: {exc}") from exc
    return out


def census_io(path: str, records: list[OrbitRecord] | None = None) -> list[OrbitRecord]:
    """Write records when given, else read them back from path."""
    if records is not None:
        with open(path, "w") as fh:
            census_write(records, fh)
        return records
    with open(path) as fh:
        return census_read(fh)


# -- subcommands ------------------------------------------------------------------


def cmd_distance(args) -> int:
    g = _graph_from_args(args)
    code = graph_to_code(g)
    d = code_distance(code)
    t = code_type(code)
    if args.json:
        print(json.dumps({"d": d, "n": g.n, "type": t}, separators=(",", ":")))
    else:
        print(f"d={d} n={g.n} type={t}")
    return 0


def cmd_wdist(args) -> int:
    g = _graph_from_args(args)
    p = args.p if args.p is not None else g.n
    pwd = partial_weight_distribution(graph_to_code(g), p)
    if args.json:
        print(json.dumps({"n": g.n, "p": p, "pwd": list(pwd)}, separators=(",", ":")))
    else:
        for w, c in enumerate(pwd):
            print(f"w_{w} = {c}")
    return 0


def cmd_canonise(args) -> int:
    g = _graph_from_args(args)
    cf = canonical_form(g)
    print(cf.code.decode())
    return 0


def cmd_orbit(args) -> int:
    g = _graph_from_args(args)
    keys = orbits.lc_orbit_keys(g, max_members=args.max_members)
    fh = _out(args)
    if args.members:
        for k in keys:
            fh.write(k.decode() + "\n")
    line = {"orbit_size": len(keys), "n": g.n}
    if args.json:
        print(json.dumps(line, separators=(",", ":")))
    else:
        print(f"orbit_size={len(keys)} n={g.n}")
    if fh is not sys.stdout:
        fh.close()
    return 0


def cmd_lambda(args) -> int:
    g = _graph_from_args(args)
    lam = orbits.lambda_of(g)
    if args.json:
        print(json.dumps({"lambda": lam, "n": g.n}, separators=(",", ":")))
    else:
        print(f"lambda={lam} n={g.n}")
    return 0


def cmd_classify(args) -> int:
    seed = {"all": "all_connected", "ext": "extensions"}[args.seed_strategy]
    if args.checkpoint or args.threads > 1:
        records = orbits.classify_buckets(
            args.n,
            seed=seed,
            pwd_cutoff=args.pwd_cutoff,
            threads=args.threads,
            checkpoint=args.checkpoint,
        )
    else:
        records = classify(
            args.n,
            strategy=args.strategy,
            seed=seed,
            pwd_cutoff=args.pwd_cutoff,
            max_members=_max_members(args),
        )
    fh = _out(args)
    if args.json or args.out:
        census_write(records, fh)
    else:
        print(f"# {len(records)} orbits, n={args.n}")
        for r in records:
            print(
                f"{r.g6}  d={r.d} type={r.type} orbit_size={r.orbit_size} "
                f"lambda={r.lam} pwd={','.join(map(str, r.pwd))}"
            )
    if fh is not sys.stdout:
        fh.close()
        print(f"wrote {len(records)} records to {args.out}")
    return 0


def _max_members(args):
    if args.max_mem is None:
        return None
    # rough budget: ~64 bytes per stored key
    return max(1000, int(args.max_mem * 1_000_000 // 64))


def cmd_search_circulant(args) -> int:
    if args.checkpoint:
        hits = _search_circulant_checkpointed(args)
    else:
        hits = constructions.circulant_search(
            args.n, args.target_d, threads=args.threads
        )
    fh = _out(args)
    for row, d, deg in hits:
        if args.json:
            fh.write(
                json.dumps(
                    {"row": str(row), "n": args.n, "d": d, "degree": deg},
                    separators=(",", ":"),
                )
                + "\n"
            )
        else:
            fh.write(f"{row} d={d} degree={deg}\n")
    if fh is not sys.stdout:
        fh.close()
    if not args.json and hits:
        best = min(hits, key=lambda h: (h[2], h[0].mask))
        print(f"best: {best[0]} d={best[1]} degree={best[2]}")
    return 0


def _search_circulant_checkpointed(args):
    """Sweep the row space in ranges, appending scored rows and a
    '#range i/k done' header per finished range; finished ranges are
    skipped when the file already exists."""
    rows = list(constructions.symmetric_rows(args.n))
    nchunks = max(1, len(rows) // 256)
    chunks = [rows[i::nchunks] for i in range(nchunks)]
    done: set[int] = set()
    scored = []
    if os.path.exists(args.checkpoint):
        with open(args.checkpoint) as fh:
            for line in fh:
                line = line.strip()
                if line.startswith("#range"):
                    done.add(int(line.split()[1].split("/")[0]))
                elif line:
                    obj = json.loads(line)
                    scored.append(
                        (constructions.circulant_row_from_text(obj["row"]), obj["d"], obj["degree"])
                    )
    for idx, chunk in enumerate(chunks):
        if idx in done:
            continue
        out = []
        for row in chunk:
            code = codes.graph_to_code(constructions.circulant_graph(row))
            out.append((row, codes.code_distance(code), row.mask.bit_count()))
        with open(args.checkpoint, "a") as fh:
            for row, d, deg in out:
                fh.write(
                    json.dumps(
                        {"row": str(row), "d": d, "degree": deg}, separators=(",", ":")
                    )
                    + "\n"
                )
            fh.write(f"#range {idx}/{len(chunks)} done\n")
        scored.extend(out)
    best = max((d for _, d, _ in scored), default=0)
    target = args.target_d if args.target_d is not None else best
    return sorted(
        [h for h in scored if h[1] >= target], key=lambda h: (h[0].mask,)
    )


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "qr":
        g = constructions.qr_code(args.m).graph
    elif kind == "bqr":
        g = constructions.bordered_qr(args.m).graph
    elif kind == "paley":
        g = constructions.paley_graph(args.m)
    elif kind == "code18":
        c17, c18 = constructions.code18()
        g = c18.graph if args.bordered else c17.graph
    elif kind == "nested":
        with open(args.spec) as fh:
            spec = parse_nested_spec(fh.read())
        g, _ = constructions.nested_build(spec)
    else:
        raise ValueError(f"unknown construction {kind!r}")
    code = graph_to_code(g)
    print(to_graph6(g).decode())
    if not args.json:
        print(f"# n={g.n} d={code_distance(code)} type={code_type(code)}")
    return 0


def cmd_apc(args) -> int:
    f = _function_from_args(args)
    d = apc_distance(f)
    p = par(f, IHN)
    p_str = f"{p:g}"
    if args.json:
        print(json.dumps({"apc_distance": d, "par_ihn": float(p_str)}, separators=(",", ":")))
    else:
        print(f"apc_distance={d} par_ihn={p_str}")
    return 0


def cmd_par(args) -> int:
    f = _function_from_args(args)
    tset = {"ihn": IHN, "ih": IH, "hn": HN}[args.set]
    p = par(f, tset)
    if args.json:
        print(json.dumps({"par": p, "set": args.set}, separators=(",", ":")))
    else:
        print(f"par_{args.set}={p:g}")
    return 0


def cmd_spectrum(args) -> int:
    f = _function_from_args(args)
    tset = {"ihn": IHN, "ih": IH, "hn": HN}[args.set]
    fh = _out(args)
    fh.write("word,coordinate,re,im\n")
    sv = SpectralVector.from_function(f)
    for word, spec in multispectrum(sv, tset):
        wtxt = "".join(tset.names[c] for c in word)
        for k, val in enumerate(spec.values):
            fh.write(f"{wtxt},{k},{val.real:.12g},{val.imag:.12g}\n")
    if fh is not sys.stdout:
        fh.close()
    return 0


def cmd_tables(args) -> int:
    text = render_table(args.id, args.max_n)
    print(text, end="")
    return 0


# -- nested spec text format -------------------------------------------------------


def parse_nested_spec(text: str) -> constructions.NestedSpec:
    """Parse the structured text form:

        layers: n1/k1 n2/k2 ...
        match: level i j: p0 p1 p2 ...     (one line per explicit matching)
    """
    layers = None
    matchings = {}
    for line in text.splitlines():
        line = line.split("#")[0].strip()
        if not line:
            continue
        if line.startswith("layers:"):
            pairs = line.split(":", 1)[1].split()
            layers = tuple(tuple(map(int, p.split("/"))) for p in pairs)
        elif line.startswith("match:"):
            head, perm = line.split(":", 1)[1].split(":")
            level, i, j = map(int, head.split())
            matchings[(level, i, j)] = tuple(map(int, perm.split()))
        else:
            raise ValueError(f"bad nested-spec line: {line!r}")
    if layers is None:
        raise ValueError("nested spec needs a 'layers:' line")
    return constructions.NestedSpec(layers=layers, matchings=matchings)


def format_nested_spec(spec: constructions.NestedSpec) -> str:
    lines = ["layers: " + " ".join(f"{n}/{k}" for n, k in spec.layers)]
    for (level, i, j), perm in sorted(spec.matchings.items()):
        lines.append(f"match: {level} {i} {j}: " + " ".join(map(str, perm)))
    return "\n".join(lines) + "\n"


# -- table rendering -----------------------------------------------------------------


def render_table(table_id: str, max_n: int | None = None) -> str:
    out = []
    if table_id == "bounds":
        out.append("n d_I d_II d_m")
        for n in range(2, 31):
            d1 = codes.distance_bound(n, codes.TYPE_I)
            d2 = str(codes.distance_bound(n, codes.TYPE_II)) if n % 2 == 0 else "-"
            lo, hi = codes.best_known_dm(n)
            dm = str(lo) if lo == hi else f"{lo}-{hi}"
            out.append(f"{n} {d1} {d2} {dm}")
    elif table_id == "codes":
        top = max_n or 9
        out.append("n count decomposable")
        counts = []
        for n in range(1, top + 1):
            counts.append(len(classify(n)))
            total, _ = orbits.decomposable_counts(n, counts)
            out.append(f"{n} {counts[-1]} {total}")
    elif table_id == "distances":
        top = max_n or 9
        out.append("n d count")
        for n in range(2, top + 1):
            hist: dict[int, int] = {}
            for r in classify(n):
                hist[r.d] = hist.get(r.d, 0) + 1
            for d in sorted(hist):
                out.append(f"{n} {d} {hist[d]}")
    elif table_id == "type2":
        top = max_n or 8
        out.append("n d count")
        for n in range(2, top + 1, 2):
            hist: dict[int, int] = {}
            for r in classify(n):
                if r.type == "II":
                    hist[r.d] = hist.get(r.d, 0) + 1
            for d in sorted(hist):
                out.append(f"{n} {d} {hist[d]}")
    elif table_id == "setsizes":
        top = max_n or 8
        out.append("n graphs extensions")
        for n in range(1, top + 1):
            ng = len(connected_keys(n))
            if n >= 2:
                reps = [r.g6.encode() for r in classify(n - 1)]
                ne = len(orbits.extension_keys(n, reps))
            else:
                ne = 0
            out.append(f"{n} {ng} {ne}")
    elif table_id == "qr":
        out.append("m d_qr m+1 d_bqr")
        for m in (5, 9, 13, 17, 25, 29):
            if max_n is not None and m > max_n:
                continue
            dq = code_distance(constructions.qr_code(m))
            db = code_distance(constructions.bordered_qr(m))
            out.append(f"{m} {dq} {m + 1} {db}")
    elif table_id == "circulant":
        top = max_n or 16
        out.append("n d degree row")
        for n in range(2, top + 1):
            row, d, deg = constructions.best_circulant(n)
            out.append(f"{n} {d} {deg} {row}")
    elif table_id == "lambda":
        top = max_n or 9
        out.append("n Lambda")
        for n in range(2, top + 1):
            out.append(f"{n} {orbits.lambda_min(n)}")
    elif table_id == "parihn":
        top = max_n or 6
        out.append("n par count")
        for n in range(1, top + 1):
            hist: dict[float, int] = {}
            for r in classify(n):
                p = transforms.par_ihn(graph_function(r.graph()))
                hist[round(p, 6)] = hist.get(round(p, 6), 0) + 1
            for p in sorted(hist):
                out.append(f"{n} {p:g} {hist[p]}")
    elif table_id == "nonquad":
        out.append("n degree d par function")
        for anf in NONQUAD_N6:
            f = BooleanFunction.from_anf_string(anf, 6)
            d = apc_distance(f)
            p = par(f, IHN)
            out.append(f"6 {f.degree()} {d} {p:g} {anf}")
    else:
        raise ValueError(
            "unknown table id (use bounds, codes, distances, type2, setsizes, "
            "qr, circulant, lambda, parihn, nonquad)"
        )
    return "\n".join(out) + "\n"


# the eleven 6-variable cubic functions with APC distance 3
NONQUAD_N6 = [
    "012,03,04,13,15,24,25",
    "012,03,05,14,15,23,24,25,34",
    "023,012,04,05,13,15,23,24,25,34",
    "123,124,125,01,02,14,25,34,35,45",
    "012,013,03,04,13,15,24,25,34,35,45",
    "012,013,014,03,05,14,15,23,24,25,34",
    "012,014,024,123,134,234,03,13,15,24,25,34,45",
    "015,012,013,014,03,05,14,15,23,24,25,34,35,45",
    "025,245,012,124,023,234,04,05,13,15,23,24,35,45",
    "245,235,145,135,024,023,014,013,02,05,14,15,23,34,35,45",
    "125,145,135,245,235,012,014,013,024,023,05,13,15,24,25,34",
]
# PAR_IHN values for the rows above
NONQUAD_N6_PAR = [8, 4.5, 4.5, 8, 4.5, 4.5, 4.5, 8, 8, 4.5, 8]


# -- argument parsing ---------------------------------------------------------------


def _add_graph_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--circulant", help="circulant first row, e.g. w00101110100")
    p.add_argument("--edges", help="edge-list file (n m header then i j lines)")
    p.add_argument("--generator", help="GF(4) generator matrix file ({0,1,w,W})")
    p.add_argument("--stabilizer", help="binary stabilizer file (Z|X rows)")


def _add_function_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("--anf", help="ANF string, e.g. 012,03,04,13,15,24,25")
    p.add_argument("--hex", help="truth table as hex (needs --n)")
    p.add_argument("--n", type=int, help="number of variables")
    _add_graph_inputs(p)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qgc", description=__doc__)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--threads", type=int, default=_default_threads())
    ap.add_argument("--out", help="write primary output to a file")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("distance", help="distance of a graph code")
    _add_graph_inputs(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("wdist", help="(partial) weight distribution")
    _add_graph_inputs(p)
    p.add_argument("--p", type=int, help="cutoff (default: full)")
    p.set_defaults(func=cmd_wdist)

    p = sub.add_parser("canonise", help="canonical graph6 form")
    _add_graph_inputs(p)
    p.set_defaults(func=cmd_canonise)

    p = sub.add_parser("orbit", help="LC orbit of a graph")
    _add_graph_inputs(p)
    p.add_argument("--members", action="store_true", help="list orbit members")
    p.add_argument("--max-members", type=int)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("lambda", help="max independence number over the LC orbit")
    _add_graph_inputs(p)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("classify", help="classify all LC orbits for length n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--strategy", choices=["fast", "canonise", "lowmem"], default="fast")
    p.add_argument("--seed-strategy", choices=["all", "ext"], default="ext")
    p.add_argument("--pwd-cutoff", type=int)
    p.add_argument("--max-mem", type=int, help="approximate store budget in MB")
    p.add_argument("--checkpoint", help="resumable checkpoint file (per bucket)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search-circulant", help="sweep symmetric circulant rows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target-d", type=int)
    p.add_argument("--checkpoint", help="resumable checkpoint file (per range)")
    p.set_defaults(func=cmd_search_circulant)

    p = sub.add_parser("construct", help="build a classical construction")
    p.add_argument("kind", choices=["qr", "bqr", "paley", "code18", "nested"])
    p.add_argument("--m", type=int, help="prime power order (qr/bqr/paley)")
    p.add_argument("--bordered", action="store_true", help="code18: emit length 18")
    p.add_argument("--spec", help="nested: spec file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("apc", help="APC distance and PAR_IHN of a function")
    _add_function_inputs(p)
    p.set_defaults(func=cmd_apc)

    p = sub.add_parser("par", help="peak-to-average power ratio")
    _add_function_inputs(p)
    p.add_argument("--set", choices=["ihn", "ih", "hn"], default="ihn")
    p.set_defaults(func=cmd_par)

    p = sub.add_parser("spectrum", help="dump a multispectrum as CSV")
    _add_function_inputs(p)
    p.add_argument("--set", choices=["ihn", "ih", "hn"], default="ihn")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("tables", help="reproduce a published table")
    p.add_argument("--id", required=True)
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_tables)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, orbits.OrbitBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
