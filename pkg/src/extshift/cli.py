"""Command-line interface.

Exit codes: 0 success / true, 1 false, 2 usage or input error, 3 Las Vegas
gave up (field may be too small).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import logging
import multiprocessing as mp
import os
import sys
import time
from pathlib import Path

from .elimination import ENGINES
from .fields import FieldError, parse_field
from .hypergraphs import combinatorial_shift, is_shifted
from .instances import Instance, InstanceError, format_json, format_text, gen_bipartite, read_instance
from .permutations import parse_permutation
from .shifting import (
    METHODS,
    FieldTooSmallError,
    ShiftError,
    scan_assignments,
    shift,
    shift_complex_detailed,
    verify_claimed,
)

SEED_ENV = "EXTSHIFT_SEED"
EXIT_OK, EXIT_FALSE, EXIT_ERROR, EXIT_FIELD = 0, 1, 2, 3
BENCH_COLUMNS = [
    "instance", "field", "algorithm", "engine", "time_ms", "phase_a_ms", "phase_b_ms",
    "trials", "short_circuit", "max_len", "max_deg", "result_digest",
]
DEFAULT_TIMEOUT = 1800.0

log = logging.getLogger("extshift")


class UsageError(Exception):
    pass


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _field(spec: str):
    try:
        return parse_field(spec)
    except FieldError as e:
        raise UsageError(str(e)) from None


def _perm(spec: str, n: int):
    try:
        return parse_permutation(spec, n)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _load(path: str) -> Instance:
    return read_instance(path)


def digest(faces) -> str:
    text = "\n".join(" ".join(map(str, f)) for f in faces)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _emit_family(faces, n, args, meta: dict) -> None:
    if args.output == "json":
        sys.stdout.write(format_json(faces, n, **meta))
    else:
        sys.stdout.write(format_text(faces, header=False))


# --- commands ----------------------------------------------------------------


def cmd_is_shifted(args) -> int:
    S = _load(args.input).hypergraph()
    ok = is_shifted(S)
    print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_shift(args) -> int:
    inst = _load(args.input)
    F = _field(args.field)
    seed = args.seed if args.seed is not None else default_seed()
    if args.samples is not None and args.samples < 1:
        raise UsageError("--samples must be positive")
    if args.rounds < 1:
        raise UsageError("--rounds must be positive")
    n = inst.n_vertices
    w = _perm(args.perm, n)
    meta: dict = {}
    if args.complex or not inst.is_uniform():
        if not args.complex:
            raise UsageError("faces have different sizes; pass --complex to shift a simplicial complex")
        if args.algorithm == "combinatorial":
            raise UsageError("combinatorial shifting works on uniform hypergraphs only")
        res = shift_complex_detailed(inst.complex(), args.algorithm, F, w, args.engine,
                                     args.samples, args.rounds, seed)
        faces = sorted(res.complex.facets)
        levels = res.levels.values()
        meta = {
            "certified": all(r.certified for r in levels),
            "algorithm": args.algorithm, "field": F.spec, "perm": list(w.images),
            "trials": {str(d): r.trials for d, r in res.levels.items()},
        }
        if args.timings:
            meta["timings"] = {str(d): r.timings for d, r in res.levels.items()}
    else:
        S = inst.hypergraph()
        r = shift(S, w, args.algorithm, F, args.engine, args.samples, args.rounds, seed)
        faces = list(r.family.faces)
        meta = {
            "certified": r.certified, "algorithm": args.algorithm, "field": F.spec,
            "perm": list(w.images), "trials": r.trials, "rounds": r.rounds,
            "short_circuit": r.short_circuit,
        }
        if args.timings:
            meta["timings"] = r.timings
    _emit_family(faces, n, args, meta)
    if args.timings and args.output == "text":
        print(json.dumps(meta.get("timings", {}), sort_keys=True), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    S = _load(args.input).hypergraph()
    U = _load(args.claimed).hypergraph()
    if len(U) != len(S):
        raise UsageError(f"claimed family has {len(U)} faces but the input has {len(S)}")
    if U.k != S.k:
        raise UsageError("claimed family has the wrong face size")
    if U.n > S.n:
        raise UsageError("claimed family uses vertices outside the input's ground set")
    F = _field(args.field)
    w = _perm(args.perm, S.n)
    ok = verify_claimed(S, w, U.with_n(S.n), F, args.engine)
    print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_comb_shift(args) -> int:
    S = _load(args.input).hypergraph()
    try:
        i, j = sorted(int(t) for t in args.pair.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"--pair needs two vertices, got {args.pair!r}") from None
    if i < 1 or i == j or j > S.n:
        raise UsageError(f"invalid transposition ({i} {j}) for n={S.n}")
    T = combinatorial_shift(S, (i, j))
    _emit_family(T.faces, S.n, args, {"pair": [i, j]})
    return EXIT_OK


def cmd_search_genericity(args) -> int:
    S = _load(args.input).hypergraph()
    E = _field(args.field)
    if E.order is None:
        raise UsageError("an exhaustive scan needs a finite field")
    w = _perm(args.perm, S.n)
    scan = scan_assignments(S, w, E, args.engine, keep=args.witnesses)
    if args.output == "json":
        out = {
            "target": [list(f) for f in scan.target.faces], "count": scan.count, "total": scan.total,
            "witnesses": [[[i, j, E.format(x)] for (i, j), x in sorted(v.items())] for v in scan.witnesses],
        }
        print(json.dumps(out))
    else:
        print(f"target {' / '.join(' '.join(map(str, f)) for f in scan.target.faces)}")
        print(f"{scan.count} of {scan.total} assignments realize the partial shift")
        for v in scan.witnesses:
            print("  " + ", ".join(f"x{i}{j}={E.format(x)}" if i < 10 and j < 10 else f"x({i},{j})={E.format(x)}"
                                   for (i, j), x in sorted(v.items())))
    return EXIT_OK if scan.count else EXIT_FALSE


def cmd_gen_bipartite(args) -> int:
    if args.m < 1 or args.n < 1:
        raise UsageError("both sides need at least one vertex")
    S = gen_bipartite(args.m, args.n)
    if args.output == "json":
        sys.stdout.write(format_json(S.faces, S.n))
    else:
        sys.stdout.write(format_text(S.faces, S.n))
    return EXIT_OK


# --- benchmark harness ---------------------------------------------------------


def _bench_row(name: str, inst: Instance, field: str, algorithm: str, engine: str, seed: int) -> dict:
    F = parse_field(field)
    t0 = time.perf_counter()
    if inst.is_uniform():
        S = inst.hypergraph()
        r = shift(S, None, algorithm, F, engine, None, 1, seed)
        results, faces = [r], list(r.family.faces)
    else:
        res = shift_complex_detailed(inst.complex(), algorithm, F, None, engine, None, 1, seed)
        results = list(res.levels.values())
        faces = sorted(res.complex.facets)
    wall = time.perf_counter() - t0
    sampled = algorithm in ("las-vegas", "monte-carlo")
    short = any(r.short_circuit for r in results)
    # a short-circuited verification never builds the symbolic matrix
    stats = [r.stats for r in results if r.stats is not None]
    return {
        "instance": name, "field": F.spec, "algorithm": algorithm, "engine": engine,
        "time_ms": f"{wall * 1000:.3f}",
        "phase_a_ms": f"{sum(r.timings.get('phase_a', 0.0) for r in results) * 1000:.3f}",
        "phase_b_ms": f"{sum(r.timings.get('phase_b', 0.0) for r in results) * 1000:.3f}",
        "trials": str(max(r.trials for r in results)) if sampled else "n/a",
        "short_circuit": str(short).lower() if algorithm == "las-vegas" else "n/a",
        "max_len": str(max(s.max_len for s in stats)) if stats else "n/a",
        "max_deg": str(max(s.max_deg for s in stats)) if stats else "n/a",
        "result_digest": digest(faces),
    }


def _bench_worker(queue, *a):
    try:
        queue.put(("ok", _bench_row(*a)))
    except FieldTooSmallError as e:
        queue.put(("err", f"field too small: {e}"))
    except Exception as e:  # reported in the row, never fatal
        queue.put(("err", f"{type(e).__name__}: {e}"))


def _failed_row(name, field, algorithm, engine, marker) -> dict:
    row = {c: marker for c in BENCH_COLUMNS}
    row.update(instance=name, field=field, algorithm=algorithm, engine=engine)
    return row


def run_bench_row(name, inst, field, algorithm, engine, seed, timeout: float) -> dict:
    if timeout <= 0:
        try:
            return _bench_row(name, inst, field, algorithm, engine, seed)
        except ShiftError as e:
            log.warning("%s/%s/%s/%s failed: %s", name, field, algorithm, engine, e)
            return _failed_row(name, parse_field(field).spec, algorithm, engine, "fail")
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    q = ctx.Queue()
    p = ctx.Process(target=_bench_worker, args=(q, name, inst, field, algorithm, engine, seed))
    p.start()
    p.join(timeout)
    if p.is_alive():
        p.terminate()
        p.join()
        return _failed_row(name, parse_field(field).spec, algorithm, engine, "oot")
    status, payload = q.get() if not q.empty() else ("err", "worker died")
    if status == "ok":
        return payload
    log.warning("%s/%s/%s/%s failed: %s", name, field, algorithm, engine, payload)
    return _failed_row(name, parse_field(field).spec, algorithm, engine, "fail")


def bench_instances(args) -> list[tuple[str, Instance]]:
    if args.suite == "bipartite":
        out = []
        for m in range(1, args.max_side + 1):
            for n in range(m, args.max_side + 1):
                S = gen_bipartite(m, n)
                out.append((f"K{m}{n}" if n < 10 else f"K{m}_{n}", Instance(list(S.faces), S.n)))
        return out
    if not args.files:
        raise UsageError("--suite file-list needs instance files")
    return [(Path(f).stem, _load(f)) for f in args.files]


def cmd_bench(args) -> int:
    fields = [s for s in args.fields.split(",") if s]
    algorithms = [s for s in args.algorithms.split(",") if s]
    engines = [s for s in args.engines.split(",") if s]
    for f in fields:
        _field(f)
    for a in algorithms:
        if a not in METHODS or a == "combinatorial":
            raise UsageError(f"unknown algorithm {a!r}")
    for e in engines:
        if e not in ENGINES:
            raise UsageError(f"unknown engine {e!r}")
    seed = args.seed if args.seed is not None else default_seed()
    instances = bench_instances(args)
    try:
        fh = open(args.csv, "w", newline="") if args.csv != "-" else sys.stdout
    except OSError as e:
        raise UsageError(f"cannot write {args.csv}: {e.strerror}") from None
    try:
        writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for name, inst in instances:
            for f in fields:
                for a in algorithms:
                    for e in engines:
                        writer.writerow(run_bench_row(name, inst, f, a, e, seed, args.timeout))
                        fh.flush()
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


# --- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="extshift", description="Exterior algebraic shifting of hypergraphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def add_output(q):
        q.add_argument("--output", choices=("text", "json"), default="text")

    q = sub.add_parser("is-shifted", help="decide whether a uniform hypergraph is shifted")
    q.add_argument("input")
    q.set_defaults(func=cmd_is_shifted)

    q = sub.add_parser("shift", help="compute a (partial) exterior shift")
    q.add_argument("input")
    q.add_argument("--field", default="q", help="q (rationals), p, or p^d (default: q)")
    q.add_argument("--perm", default="w0", help="one-line notation, 'id' or 'w0' (default: w0)")
    q.add_argument("--algorithm", choices=METHODS, default="las-vegas")
    q.add_argument("--samples", type=int, default=None,
                   help="matrices per Las Vegas round (default: 1 over q, 100 otherwise)")
    q.add_argument("--rounds", type=int, default=1, help="Las Vegas rounds before giving up")
    q.add_argument("--engine", choices=ENGINES, default="lazy")
    q.add_argument("--seed", type=int, default=None, help=f"random seed (default: ${SEED_ENV} or 0)")
    q.add_argument("--complex", action="store_true", help="treat the faces as facets of a simplicial complex")
    q.add_argument("--timings", action="store_true", help="report wall-clock timings (output no longer reproducible)")
    add_output(q)
    q.set_defaults(func=cmd_shift)

    q = sub.add_parser("verify", help="check a claimed partial shift")
    q.add_argument("input")
    q.add_argument("--claimed", required=True, help="instance file with the claimed family")
    q.add_argument("--perm", default="w0")
    q.add_argument("--field", default="q")
    q.add_argument("--engine", choices=ENGINES, default="lazy")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("comb-shift", help="combinatorial shift along a transposition")
    q.add_argument("input")
    q.add_argument("--pair", required=True, help='transposition, e.g. "2 5"')
    add_output(q)
    q.set_defaults(func=cmd_comb_shift)

    q = sub.add_parser("search-genericity",
                       help="count assignments over a finite field that realize the partial shift")
    q.add_argument("input")
    q.add_argument("--perm", required=True)
    q.add_argument("--field", required=True)
    q.add_argument("--engine", choices=ENGINES, default="lazy")
    q.add_argument("--witnesses", type=int, default=5, help="number of witnesses to print")
    add_output(q)
    q.set_defaults(func=cmd_search_genericity)

    q = sub.add_parser("gen-bipartite",
                       help="complete bipartite graph K_{m,n} on m+n vertices, sides 1..m and m+1..m+n")
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    add_output(q)
    q.set_defaults(func=cmd_gen_bipartite)

    q = sub.add_parser("bench", help="benchmark full shifts and write CSV rows")
    q.add_argument("--suite", choices=("bipartite", "file-list"), default="bipartite")
    q.add_argument("files", nargs="*", help="instance files for --suite file-list")
    q.add_argument("--max-side", type=int, default=3, help="largest side of K_{m,n} in the bipartite suite")
    q.add_argument("--fields", default="q")
    q.add_argument("--algorithms", default="deterministic,las-vegas")
    q.add_argument("--engines", default="eager,lazy")
    q.add_argument("--csv", default="-", help="output path (default: stdout)")
    q.add_argument("--timeout", type=float, default=DEFAULT_TIMEOUT,
                   help="per-row wall-clock limit in seconds; 0 runs in-process without a limit")
    q.add_argument("--seed", type=int, default=None)
    q.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except FieldTooSmallError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FIELD
    except (UsageError, InstanceError, ShiftError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
