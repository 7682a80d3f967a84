"""Command-line interface: decide, value, verify and batch."""

from __future__ import annotations

import argparse
import csv
import json
import multiprocessing as mp
import os
import sys
import time
from pathlib import Path

from .driver import compute_value, decide, peak_memory_bytes
from .graph import ParseError, degeneracy, read_edge_list
from .reference import verify_ordering

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2

CSV_FIELDS = ["network", "n", "m", "degeneracy", "adm3", "time_ms", "peak_mem_bytes", "status"]
COUNTER_FIELDS = ["queries", "stage1", "stage2", "augmentations", "max_escalations"]


class CliError(Exception):
    pass


def _load(path):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except ParseError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _print_trace(orc, stream) -> None:
    for rec in orc.trace:
        print(
            f"query vertex={rec.vertex} cand={rec.cand_size} simple={rec.simple} "
            f"stage1={rec.stage1} stage2={rec.stage2} augmentations={rec.augmentations}",
            file=stream,
        )


def run_record(path, with_counters: bool = False, instrument: bool = False) -> dict:
    """Compute adm3 for one file and return a CSV-ready record."""
    g = _load(path)
    start = time.perf_counter()
    d, _ = degeneracy(g)
    decisions: list = []
    value, _ = compute_value(g, instrument=instrument, decisions=decisions)
    elapsed = time.perf_counter() - start
    rec = {
        "network": Path(path).name,
        "n": g.n,
        "m": g.m,
        "degeneracy": d,
        "adm3": value,
        "time_ms": round(elapsed * 1000, 3),
        "peak_mem_bytes": peak_memory_bytes(),
        "status": "ok",
    }
    if with_counters:
        stats = decisions[-1].stats
        for key in COUNTER_FIELDS:
            rec[key] = stats.get(key, 0)
    return rec


def _write_order(path, labels) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for label in labels:
            fh.write(f"{label}\n")


def cmd_decide(args) -> int:
    g = _load(args.path)
    start = time.perf_counter()
    dec = decide(g, args.p, instrument=args.instrument)
    elapsed = time.perf_counter() - start
    orc = dec.stats.pop("oracle", None)
    if orc is not None:
        _print_trace(orc, sys.stderr)
    verified = None
    if dec.answer and args.verify:
        verified = verify_ordering(g, dec.ordering, 3)
        if verified > args.p:
            raise CliError(f"ordering verifies to {verified} > p={args.p}")
    if dec.answer and args.ordering:
        _write_order(args.ordering, (g.label(v) for v in dec.ordering))
    if args.json:
        out = {
            "network": Path(args.path).name,
            "n": g.n,
            "m": g.m,
            "p": args.p,
            "answer": "YES" if dec.answer else "NO",
            "time_ms": round(elapsed * 1000, 3),
            "stats": {k: v for k, v in dec.stats.items() if k != "elapsed_s"},
        }
        if verified is not None:
            out["verified"] = verified
        print(json.dumps(out, sort_keys=True))
    else:
        print("YES" if dec.answer else "NO")
        if verified is not None:
            print(f"verified={verified}")
    return EXIT_YES if dec.answer else EXIT_NO


def cmd_value(args) -> int:
    rec = run_record(args.path, with_counters=True, instrument=args.instrument)
    if args.json:
        print(json.dumps(rec, sort_keys=True))
    else:
        print(f"adm3={rec['adm3']} degeneracy={rec['degeneracy']} n={rec['n']} m={rec['m']} time_ms={rec['time_ms']}")
    if args.csv:
        path = Path(args.csv)
        fields = CSV_FIELDS + COUNTER_FIELDS
        new = not path.exists() or path.stat().st_size == 0
        with open(path, "a", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields)
            if new:
                writer.writeheader()
            writer.writerow(rec)
    return EXIT_YES


def _read_order(path, g) -> list[int]:
    ids = {g.label(v): v for v in range(g.n)}
    order = []
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                label = line.strip()
                if not label:
                    continue
                if label not in ids:
                    raise CliError(f"{path}:{lineno}: unknown vertex label {label!r}")
                order.append(ids[label])
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return order


def cmd_verify(args) -> int:
    g = _load(args.path)
    order = _read_order(args.ordering_file, g)
    try:
        value = verify_ordering(g, order, 3)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    print(f"adm3(ordering)={value}")
    if args.p is not None:
        return EXIT_YES if value <= args.p else EXIT_NO
    return EXIT_YES


def _batch_worker(path, with_counters, conn) -> None:
    try:
        rec = run_record(path, with_counters=with_counters)
    except Exception as exc:  # reported as a row, the batch carries on
        rec = {"network": Path(path).name, "status": f"error: {exc}"}
    conn.send(rec)
    conn.close()


def _failed_record(path, status, fields) -> dict:
    rec = {key: "" for key in fields}
    rec.update(network=Path(path).name, status=status)
    return rec


def run_batch(files, out_path, fields, timeout=None, threads=1, overwrite=False) -> int:
    """Process ``files`` in worker processes and write one row each, in input order."""
    with_counters = len(fields) > len(CSV_FIELDS)
    out_path = Path(out_path)
    fresh = overwrite or not out_path.exists() or out_path.stat().st_size == 0
    mode = "w" if fresh else "a"
    fh = open(out_path, mode, newline="", encoding="utf-8")
    writer = csv.DictWriter(fh, fieldnames=fields, extrasaction="ignore")
    if fresh:
        writer.writeheader()
        fh.flush()
        os.fsync(fh.fileno())

    ctx = mp.get_context("fork") if hasattr(os, "fork") else mp.get_context()
    results: dict[int, dict] = {}
    pending = list(enumerate(files))
    active: dict[int, tuple] = {}
    next_to_write = 0
    try:
        while pending or active:
            while pending and len(active) < max(1, threads):
                idx, path = pending.pop(0)
                if timeout is not None and timeout <= 0:
                    results[idx] = _failed_record(path, "timeout", fields)
                    continue
                recv, send = ctx.Pipe(duplex=False)
                proc = ctx.Process(target=_batch_worker, args=(str(path), with_counters, send), daemon=True)
                proc.start()
                send.close()
                active[idx] = (proc, recv, time.monotonic(), path)
            for idx, (proc, recv, started, path) in list(active.items()):
                if recv.poll():
                    try:
                        rec = recv.recv()
                    except EOFError:
                        rec = _failed_record(path, "error: worker exited", fields)
                    proc.join()
                elif not proc.is_alive():
                    proc.join()
                    rec = _failed_record(path, f"error: worker exit code {proc.exitcode}", fields)
                elif timeout is not None and time.monotonic() - started > timeout:
                    proc.terminate()
                    proc.join()
                    rec = _failed_record(path, "timeout", fields)
                else:
                    continue
                recv.close()
                del active[idx]
                full = _failed_record(path, "", fields)
                full.update(rec)
                results[idx] = full
            while next_to_write in results:
                writer.writerow(results.pop(next_to_write))
                fh.flush()
                next_to_write += 1
            if active:
                time.sleep(0.005)
    finally:
        for proc, recv, _, _ in active.values():
            proc.terminate()
        fh.close()
    return EXIT_YES


def cmd_batch(args) -> int:
    src = Path(args.dir)
    if not src.is_dir():
        raise CliError(f"{src} is not a directory")
    files = sorted(p for p in src.iterdir() if p.is_file())
    fields = CSV_FIELDS + (COUNTER_FIELDS if args.counters else [])
    return run_batch(files, args.out, fields, timeout=args.timeout, threads=args.threads, overwrite=args.overwrite)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="admissibility", description="3-admissibility of graphs given as edge lists.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether adm3 <= p")
    p.add_argument("path")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--ordering", metavar="PATH", help="write the witness ordering, one label per line")
    p.add_argument("--verify", action="store_true", help="re-check a YES ordering with the exact reference")
    p.add_argument("--json", action="store_true")
    p.add_argument("--instrument", action="store_true", help="check oracle invariants and print a trace to stderr")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("value", help="compute adm3 exactly")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", metavar="PATH", help="append a result row to this CSV file")
    p.add_argument("--instrument", action="store_true")
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("verify", help="compute the 3-admissibility of a given ordering")
    p.add_argument("path")
    p.add_argument("ordering_file")
    p.add_argument("--p", type=int, help="exit 1 if the ordering exceeds p")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("batch", help="compute adm3 for every file in a directory")
    p.add_argument("dir")
    p.add_argument("out", help="CSV output path")
    p.add_argument("--timeout", type=float, metavar="SECONDS")
    p.add_argument("--threads", type=int, default=1, help="number of graphs processed in parallel")
    p.add_argument("--overwrite", action="store_true", help="truncate the CSV instead of appending")
    p.add_argument("--counters", action="store_true", help="add escalation counter columns")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    if getattr(args, "p", None) is not None and args.p < 0:
        print("error: --p must be non-negative", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
