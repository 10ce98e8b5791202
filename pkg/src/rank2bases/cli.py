"""Command-line client for the rank2bases service.

Every subcommand is a thin HTTP client: by default it talks to an
in-process instance of the FastAPI app, and with --server URL it talks to
a remote one, so the CLI and the service always agree on behavior.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx


def _client(args) -> httpx.Client:
    if getattr(args, "server", None):
        return httpx.Client(base_url=args.server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service.app import create_app

    return TestClient(create_app())


def _post(args, path: str, payload: dict) -> httpx.Response:
    with _client(args) as client:
        resp = client.post(path, json=payload)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except Exception:
            detail = resp.text
        sys.stderr.write(f"error: {detail}\n")
        raise SystemExit(2)
    return resp


def _int_pair(text: str) -> list[int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated integers, e.g. 1,-1")
    return [int(parts[0]), int(parts[1])]


def _frac_pair(text: str) -> list[str]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated rationals, e.g. 3/2,1")
    return [parts[0].strip(), parts[1].strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rank2bases",
        description="Greedy and theta bases of the rank-2 cluster algebra A(b,c), exactly.",
    )
    parser.add_argument("--server", help="base URL of a running service (default: run in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--c", type=int, required=True)

    p = sub.add_parser("cluster", help="print a cluster variable x_k")
    common(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("greedy", help="print the greedy element x[a1,a2]")
    common(p)
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--table", action="store_true", help="also print the coefficient grid as TSV")

    p = sub.add_parser("scatter", help="print a consistent scattering diagram")
    common(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dvec", action="store_true", help="use the first-quadrant (d-vector) diagram")
    p.add_argument("--json", dest="json_out", metavar="OUT.JSON", help="write the diagram JSON to a file")

    p = sub.add_parser("theta", help="print a theta function")
    common(p)
    p.add_argument("--m", type=_int_pair, required=True, metavar="M1,M2")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dvec", action="store_true")
    p.add_argument("--q", type=_frac_pair, metavar="Q1,Q2", help="endpoint, e.g. 3/2,1")
    p.add_argument("--lines", action="store_true", help="print each broken line as JSON")

    p = sub.add_parser("compare", help="compare greedy vs theta for one d-vector")
    common(p)
    p.add_argument("--a1", type=int, required=True)
    p.add_argument("--a2", type=int, required=True)
    p.add_argument("--json", dest="json_flag", action="store_true", help="print the full JSON report")

    p = sub.add_parser("compare-grid", help="compare greedy vs theta over a grid of d-vectors")
    common(p)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--json", dest="json_flag", action="store_true")

    p = sub.add_parser("render", help="render a diagram (and optional broken lines) to SVG")
    common(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dvec", action="store_true")
    p.add_argument("--theta", type=_int_pair, metavar="M1,M2", help="overlay broken lines for this exponent")
    p.add_argument("--out", required=True, metavar="FILE.SVG")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "cluster":
        resp = _post(args, "/cluster", {"b": args.b, "c": args.c, "k": args.k})
        print(resp.json()["poly"]["text"])

    elif args.command == "greedy":
        payload = {"b": args.b, "c": args.c, "a1": args.a1, "a2": args.a2, "table": args.table}
        data = _post(args, "/greedy", payload).json()
        print(data["poly"]["text"])
        if args.table:
            grid = {tuple(map(int, key.split(","))): val for key, val in data["coeffs"].items()}
            p1max = max(p1 for p1, _ in grid)
            p2max = max(p2 for _, p2 in grid)
            print("p2\\p1\t" + "\t".join(str(p1) for p1 in range(p1max + 1)))
            for p2 in range(p2max, -1, -1):
                row = [grid.get((p1, p2), 0) for p1 in range(p1max + 1)]
                print(f"{p2}\t" + "\t".join(str(v) for v in row))

    elif args.command == "scatter":
        payload = {"b": args.b, "c": args.c, "order": args.order, "dvec": args.dvec}
        data = _post(args, "/scatter", payload).json()
        if args.json_out:
            with open(args.json_out, "w") as fh:
                json.dump(data, fh, indent=2)
            print(f"wrote {args.json_out}")
        else:
            print(f"diagram (b={data['b']}, c={data['c']}, variant={data['variant']}, order={data['order']})")
            for wall in data["walls"]:
                coeffs = " ".join(f"x^{{{k}w}}:{v}" for k, v in wall["coeffs"].items())
                print(f"  {wall['geom']:<4} dir=({wall['dir'][0]},{wall['dir'][1]})  {coeffs or '1'}")

    elif args.command == "theta":
        payload = {
            "b": args.b,
            "c": args.c,
            "m": args.m,
            "order": args.order,
            "dvec": args.dvec,
            "lines": args.lines,
        }
        if args.q:
            payload["q"] = args.q
        data = _post(args, "/theta", payload).json()
        print(data["poly"]["text"])
        if args.lines:
            print(json.dumps(data["lines"], indent=2))

    elif args.command == "compare":
        payload = {"b": args.b, "c": args.c, "a1": args.a1, "a2": args.a2}
        data = _post(args, "/compare", payload).json()
        if args.json_flag:
            print(json.dumps(data, indent=2))
        else:
            verdict = "EQUAL" if data["equal"] else "DIFFERENT"
            print(
                f"(b,c)=({args.b},{args.c}) d=({args.a1},{args.a2}) order={data['order_used']}: "
                f"{verdict}, support certificate {'ok' if data['support_certified'] else 'FAILED'}"
            )
            print(f"  greedy = {_triples_to_text(data['greedy'])}")
            print(f"  theta  = {_triples_to_text(data['theta'])}")

    elif args.command == "compare-grid":
        payload = {"b": args.b, "c": args.c, "radius": args.radius}
        data = _post(args, "/compare-grid", payload).json()
        if args.json_flag:
            print(json.dumps(data, indent=2))
        else:
            bad = [r for r in data["reports"] if not r["equal"]]
            print(f"{data['count']} comparisons, all_equal={data['all_equal']}")
            for r in bad:
                print(f"  MISMATCH at d=({r['a1']},{r['a2']})")
        if not data["all_equal"]:
            return 1

    elif args.command == "render":
        payload = {"b": args.b, "c": args.c, "order": args.order, "dvec": args.dvec}
        if args.theta:
            payload["theta_m"] = args.theta
        resp = _post(args, "/render", payload)
        with open(args.out, "wb") as fh:
            fh.write(resp.content)
        print(f"wrote {args.out}")

    elif args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)

    return 0


def _triples_to_text(triples) -> str:
    from .laurent import LaurentPoly

    return str(LaurentPoly.from_triples(triples))


if __name__ == "__main__":
    raise SystemExit(main())
