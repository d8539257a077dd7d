"""Command line front end.

Every subcommand talks HTTP to the service layer.  By default the requests
run against an in-process ASGI app, so no server needs to be up; pass
--server URL to aim the same requests at a remote instance.

Exit codes: 0 all checks passed, 1 at least one clause or verification
failed, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import asyncio
import hashlib
import json
import os
import sys
from pathlib import Path

import httpx

from . import __version__

CATALOG_ENV = "RAMSEYCHECK_CATALOG"
GRAPH6_HEADER_LINE = ">>graph6<<"


class ClientError(Exception):
    """Anything that should abort the command with exit code 2."""


class ServiceClient:
    """Thin HTTP client; in-process ASGI unless a server URL is given."""

    def __init__(self, server: str | None = None):
        self.server = server.rstrip("/") if server else None

    def call(self, method: str, path: str, *, body: dict | None = None,
             params: dict | None = None) -> dict:
        if self.server is not None:
            try:
                resp = httpx.request(
                    method, self.server + path, json=body, params=params, timeout=600.0
                )
            except httpx.HTTPError as exc:
                raise ClientError(f"cannot reach {self.server}: {exc}") from exc
            return self._unwrap(resp)
        return self._unwrap(asyncio.run(self._asgi(method, path, body, params)))

    async def _asgi(self, method: str, path: str, body, params) -> httpx.Response:
        from .service.app import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://svc") as client:
            return await client.request(method, path, json=body, params=params)

    @staticmethod
    def _unwrap(resp: httpx.Response) -> dict:
        try:
            payload = resp.json()
        except ValueError:
            payload = {"detail": resp.text}
        if resp.status_code >= 400:
            raise ClientError(str(payload.get("detail", payload)))
        return payload


def _digest(line: str) -> str:
    return hashlib.sha256(line.strip().encode("ascii", "replace")).hexdigest()


def read_graph_lines(path: str) -> list[str]:
    """Collect graph6 lines from a file or stdin ('-'), skipping blanks."""
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text(encoding="ascii")
        except OSError as exc:
            raise ClientError(f"cannot read {path}: {exc.strerror or exc}") from exc
    lines = [ln.strip() for ln in text.splitlines()]
    return [ln for ln in lines if ln and ln != GRAPH6_HEADER_LINE]


def resolve_catalog_dir(explicit: str | None) -> Path:
    """Flag beats the RAMSEYCHECK_CATALOG variable beats ./catalog."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(CATALOG_ENV)
    if env:
        return Path(env)
    return Path("catalog")


def catalog_graph_path(stem: str, explicit: str | None = None) -> Path:
    return resolve_catalog_dir(explicit) / f"{stem}.g6"


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _append_log(path: str, records: list[dict]) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")


def _profile_body(args) -> dict:
    spec: dict = {"name": args.profile}
    if args.profile == "custom":
        if args.s is None or args.t is None or args.n is None:
            raise ClientError("custom profile needs --s, --t and --n")
        spec.update({"s": args.s, "t": args.t, "n": args.n})
        print(
            "note: custom profile extrapolates beyond the derived regime; "
            "structural clauses are skipped",
            file=sys.stderr,
        )
    return spec


# -- subcommand handlers -------------------------------------------------


def cmd_analyze(args) -> int:
    lines = read_graph_lines(args.path)
    if not lines:
        raise ClientError("no graphs in input")
    client = ServiceClient(args.server)
    body = {
        "graphs": lines,
        "profile": _profile_body(args),
        "strict": args.strict,
        "cut_mode": args.cut_mode,
        "cut_budget": args.cut_budget,
    }
    payload = client.call("POST", "/analyze", body=body)

    if args.log:
        records = []
        for item in payload["results"]:
            if item.get("envelope"):
                records.append(item["envelope"])
            else:
                records.append(
                    {
                        "tool": "ramseycheck",
                        "version": __version__,
                        "input_digest": _digest(item["graph6"]),
                        "error": item["error"],
                    }
                )
        _append_log(args.log, records)

    if args.json:
        _print_json(payload)
    else:
        npass = nfail = nerr = 0
        for item in payload["results"]:
            label = f"graph {item['index'] + 1}"
            if item.get("error"):
                nerr += 1
                print(f"{label}  error  {item['error']}")
                continue
            env = item["envelope"]
            report = env["report"]
            overall = report["overall"]
            if overall == "pass":
                npass += 1
            else:
                nfail += 1
            print(f"{label}  {overall}  digest {env['input_digest'][:12]}")
            for clause in report["clauses"]:
                verdict = clause["verdict"]
                if not args.verbose and verdict in ("pass", "not-applicable"):
                    continue
                witness = ""
                if clause["witness"] is not None:
                    witness = "  " + json.dumps(clause["witness"], sort_keys=True)
                print(f"    {clause['id']:<28} {verdict}{witness}")
        total = len(payload["results"])
        print(f"{total} graph(s): {npass} pass, {nfail} fail, {nerr} error")

    if payload["had_errors"]:
        return 2
    return 0 if payload["all_pass"] else 1


def cmd_verify(args) -> int:
    if args.path is None:
        if args.kind != "r39":
            raise ClientError("verify needs a graph file unless --kind r39")
        path = catalog_graph_path("r3_9_35", args.catalog)
        if not path.is_file():
            raise ClientError(
                f"catalog graph {path} not found; pass a file, set --catalog, "
                f"or export {CATALOG_ENV}"
            )
        lines = read_graph_lines(str(path))
    else:
        lines = read_graph_lines(args.path)
    if not lines:
        raise ClientError("no graphs in input")

    client = ServiceClient(args.server)
    failures = 0
    outputs = []
    for index, line in enumerate(lines, start=1):
        body = {"graph": line, "kind": args.kind, "s": args.s, "t": args.t}
        result = client.call("POST", "/verify", body=body)
        outputs.append(result)
        if result["ok"]:
            continue
        failures += 1
    if args.json:
        _print_json({"results": outputs})
    else:
        for index, result in enumerate(outputs, start=1):
            if result["ok"]:
                print(f"graph {index}: ok")
            elif result["kind"] == "ramsey":
                parts = []
                if result.get("clique_witness"):
                    parts.append(f"clique {result['clique_witness']}")
                if result.get("independent_set_witness"):
                    parts.append(f"independent set {result['independent_set_witness']}")
                print(f"graph {index}: FAIL ({'; '.join(parts)})")
            else:
                bad = sorted(k for k, v in result["checks"].items() if not v)
                print(f"graph {index}: FAIL ({', '.join(bad)})")
    return 1 if failures else 0


def cmd_degseq(args) -> int:
    client = ServiceClient(args.server)
    payload = client.call(
        "POST", "/degseq", body={"n": args.n, "e": args.e, "d6": args.d6}
    )
    if args.json:
        _print_json(payload)
        return 0
    if not payload["solutions"]:
        print("no solutions", file=sys.stderr)
        return 0
    for a, b, c, d in payload["solutions"]:
        print(f"({a}, {b}, {c}, {d})")
    return 0


def cmd_tables(args) -> int:
    client = ServiceClient(args.server)
    params = {
        "e_min": args.e_min,
        "e_max": args.e_max,
        "d6_min": args.d6 if args.d6 is not None else args.d6_min,
        "d6_max": args.d6 if args.d6 is not None else args.d6_max,
    }
    payload = client.call("GET", "/tables", params=params)
    if args.json:
        _print_json(payload)
        return 0
    by_d6: dict[int, list[dict]] = {}
    for cell in payload["cells"]:
        by_d6.setdefault(cell["d6"], []).append(cell)
    for d6 in sorted(by_d6):
        noun = "vertex" if d6 == 1 else "vertices"
        print(f"table {d6 + 1} ({d6} {noun} of degree 6)")
        for cell in sorted(by_d6[d6], key=lambda c: c["e"]):
            seqs = ", ".join(
                f"({a}, {b}, {c}, {d})" for a, b, c, d in cell["sequences"]
            )
            print(f"  {cell['e']}: {seqs if seqs else '-'}")
    return 0


def cmd_audit(args) -> int:
    client = ServiceClient(args.server)
    payload = client.call(
        "GET", "/tables/audit", params={"flagged_only": not args.all}
    )
    if args.json:
        _print_json(payload)
        return 0
    for row in payload["rows"]:
        t = tuple(row["printed"])
        if row["checksum_order"] and row["checksum_edges"]:
            print(f"table {row['table_id']} e={row['e']} {t}: ok")
            continue
        bad = []
        if not row["checksum_order"]:
            bad.append("order")
        if not row["checksum_edges"]:
            bad.append("edges")
        fix = tuple(row["correction"]) if row["correction"] else "no unique fix"
        print(
            f"table {row['table_id']} e={row['e']} {t}: "
            f"checksum failed ({', '.join(bad)}); correction {fix}"
        )
    print(f"{payload['flagged']} flagged row(s)")
    return 0


def cmd_partition(args) -> int:
    client = ServiceClient(args.server)
    if args.path is None:
        payload = client.call("GET", "/partition-triples")
        if args.json:
            _print_json(payload)
            return 0
        print("h21 h22 h23 boundary")
        for t in payload["triples"]:
            print(f"{t['h21']:3d} {t['h22']:3d} {t['h23']:3d} {t['boundary_edges']:8d}")
        return 0
    lines = read_graph_lines(args.path)
    if not lines:
        raise ClientError("no graphs in input")
    payload = client.call(
        "POST", "/partition", body={"graph": lines[0], "vertex": args.vertex}
    )
    if args.json:
        _print_json(payload)
        return 0
    counts = ", ".join(f"{k} common: {v}" for k, v in sorted(payload["counts"].items()))
    print(f"vertex {payload['vertex']}: {{{counts}}}")
    print(f"boundary edges: {payload['boundary_edges']}")
    print(f"residual order: {payload['residual_order']}")
    return 0


def cmd_layers(args) -> int:
    lines = read_graph_lines(args.path)
    if not lines:
        raise ClientError("no graphs in input")
    client = ServiceClient(args.server)
    payload = client.call(
        "POST", "/layers", body={"graph": lines[0], "vertex": args.vertex}
    )
    if args.json:
        _print_json(payload)
        return 0
    sizes = " ".join(str(s) for s in payload["layer_sizes"])
    print(f"layer sizes from vertex {payload['vertex']}: {sizes}")
    if payload["unreachable"]:
        print(f"unreachable vertices: {payload['unreachable']}")
    return 0


def cmd_gen(args) -> int:
    client = ServiceClient(args.server)
    body: dict = {"kind": args.kind}
    if args.kind in ("cycle", "circulant"):
        if args.n is None:
            raise ClientError(f"{args.kind} needs N")
        body["n"] = args.n
    if args.kind == "circulant":
        if not args.offsets:
            raise ClientError("circulant needs --offsets")
        body["offsets"] = args.offsets
    payload = client.call("POST", "/generate", body=body)
    print(payload["graph6"])
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("ramseycheck.service.app:app", host=args.host, port=args.port)
    return 0


# -- parser --------------------------------------------------------------


def _add_profile_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--profile",
        choices=("gamma41", "omega40", "custom"),
        default="gamma41",
        help="screening profile (default gamma41)",
    )
    sub.add_argument("--s", type=int, default=None, help="clique bound for --profile custom")
    sub.add_argument("--t", type=int, default=None, help="independence bound for --profile custom")
    sub.add_argument("--n", type=int, default=None, help="order for --profile custom")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramseycheck",
        description="structural screening for Ramsey-critical graph candidates",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    def common(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--server", default=None, help="remote service URL (default: in-process)")
        sub.add_argument("--json", action="store_true", help="machine readable output")

    p = subs.add_parser("analyze", help="run every applicable clause against graphs")
    p.add_argument("path", help="graph6 file, or - for stdin")
    _add_profile_options(p)
    p.add_argument("--strict", action="store_true", help="strict residual degree-6 exclusion")
    p.add_argument("--cut-mode", choices=("witness", "exhaustive"), default="witness")
    p.add_argument("--cut-budget", type=int, default=10_000_000)
    p.add_argument("--log", default=None, help="append one JSONL record per graph")
    p.add_argument("--verbose", action="store_true", help="print passing clauses too")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("verify", help="clique and independence verification")
    p.add_argument("path", nargs="?", default=None, help="graph6 file, - for stdin; omit with --kind r39 to use the catalog")
    p.add_argument("--kind", choices=("ramsey", "r39"), default="ramsey")
    p.add_argument("--s", type=int, default=3, help="clique bound (default 3)")
    p.add_argument("--t", type=int, default=10, help="independence bound (default 10)")
    p.add_argument("--catalog", default=None, help=f"catalog dir (default ${CATALOG_ENV} or ./catalog)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("degseq", help="degree-sequence classes for one (e, d6) cell")
    p.add_argument("e", type=int, help="edge count")
    p.add_argument("d6", type=int, help="number of degree-6 vertices")
    p.add_argument("--n", type=int, default=41, help="graph order (default 41)")
    common(p)
    p.set_defaults(func=cmd_degseq)

    p = subs.add_parser("tables", help="regenerate the degree-sequence tables")
    p.add_argument("--e-min", type=int, default=172)
    p.add_argument("--e-max", type=int, default=184)
    p.add_argument("--d6", type=int, default=None, help="single degree-6 count")
    p.add_argument("--d6-min", type=int, default=0)
    p.add_argument("--d6-max", type=int, default=6)
    common(p)
    p.set_defaults(func=cmd_tables)

    p = subs.add_parser("audit", help="checksum the bundled printed tables")
    p.add_argument("--all", action="store_true", help="print clean rows too")
    common(p)
    p.set_defaults(func=cmd_audit)

    p = subs.add_parser("partition", help="admissible partition triples, or one graph's profile")
    p.add_argument("path", nargs="?", default=None, help="graph6 file or - (omit to list the triples)")
    p.add_argument("--vertex", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_partition)

    p = subs.add_parser("layers", help="distance layer sizes from a vertex")
    p.add_argument("path", help="graph6 file, or - for stdin")
    p.add_argument("--vertex", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_layers)

    p = subs.add_parser("gen", help="emit a named graph as graph6")
    p.add_argument("kind", choices=("cycle", "circulant", "petersen", "r39"))
    p.add_argument("n", type=int, nargs="?", default=None)
    p.add_argument("--offsets", type=int, nargs="+", default=None)
    common(p)
    p.set_defaults(func=cmd_gen)

    p = subs.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ClientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
