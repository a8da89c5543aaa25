"""Command-line front end; a thin client of the HTTP service.

By default the service app is called in-process through an ASGI transport, so
no server needs to be running; ``--server URL`` switches to a remote instance
and ``serve`` starts one.  Exit codes: 0 success (and "true" for equiv),
1 "false" for equiv, 2 argument/parse errors, 3 internal failures.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx


def _request(server: str | None, path: str, params: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.get(path, params=params)

    async def go() -> httpx.Response:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://g2crystal.local", timeout=None
        ) as client:
            return await client.get(path, params=params)

    return asyncio.run(go())


def _fetch(args, path: str, params: dict) -> httpx.Response:
    resp = _request(args.server, path, params)
    if resp.status_code == 422:
        detail = resp.json().get("detail", "invalid arguments")
        print(f"error: {detail}", file=sys.stderr)
        raise SystemExit(2)
    if resp.status_code != 200:
        print(f"error: service returned {resp.status_code}", file=sys.stderr)
        raise SystemExit(3)
    return resp


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_component(args) -> int:
    if args.dot:
        resp = _fetch(args, "/component.dot", {"word": args.word})
        sys.stdout.write(resp.text)
        return 0
    resp = _fetch(args, "/component", {"word": args.word})
    _print_json(resp.json())
    return 0


def cmd_insert(args) -> int:
    resp = _fetch(args, "/insert", {"word": args.word})
    payload = resp.json()
    if args.json:
        _print_json(payload)
        return 0
    p = payload["p"]
    rows: list[list[str]] = [[], []]
    for col in p["columns"]:
        rows[0].append(str(col[0]))
        if len(col) == 2:
            rows[1].append(str(col[1]))
    print("P:", " ".join(rows[0]) if rows[0] else "(empty)")
    if rows[1]:
        print("  ", " ".join(rows[1]))
    print("Q:", " ".join(f"({a},{b})" for a, b in payload["q"]) or "(empty)")
    return 0


def cmd_equiv(args) -> int:
    resp = _fetch(args, "/equiv", {"w1": args.w1, "w2": args.w2})
    equal = resp.json()["equivalent"]
    print("true" if equal else "false")
    return 0 if equal else 1


def cmd_canonical(args) -> int:
    params = {"l1": args.l1, "l2": args.l2}
    if args.json:
        resp = _fetch(args, "/canonical", params)
        _print_json(resp.json())
    else:
        resp = _fetch(args, "/canonical.csv", params)
        sys.stdout.write(resp.text)
    return 0


def cmd_tableaux(args) -> int:
    resp = _fetch(args, "/tableaux", {"l1": args.l1, "l2": args.l2})
    for t in resp.json()["tableaux"]:
        print(t["reading"])
    return 0


def cmd_selftest(args) -> int:
    resp = _fetch(args, "/selftest", {"max_len": args.max_len})
    payload = resp.json()
    for suite in payload["suites"]:
        status = "PASS" if suite["passed"] else "FAIL"
        print(f"{status} {suite['name']}: {suite['detail']}")
    return 0 if payload["ok"] else 3


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("g2crystal.service:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2crystal",
        description="Type-G2 crystal combinatorics: components, insertion, canonical bases.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service (default: run the service in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("component", help="crystal component of a word")
    p.add_argument("word", help='space-separated signed letters, e.g. "2 0 -3"')
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    fmt.add_argument("--json", action="store_true", help="emit JSON (default)")
    p.set_defaults(func=cmd_component)

    p = sub.add_parser("insert", help="P-symbol and Q-symbol of a word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("equiv", help="plactic equivalence of two words")
    p.add_argument("w1")
    p.add_argument("w2")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("canonical", help="canonical basis matrix for l1*L1 + l2*L2")
    p.add_argument("l1", type=int)
    p.add_argument("l2", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", help="emit CSV (default)")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("tableaux", help="sorted tableau readings for a shape")
    p.add_argument("l1", type=int)
    p.add_argument("l2", type=int)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("selftest", help="run the oracle suites")
    p.add_argument("--max-len", type=int, default=4, dest="max_len")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except Exception as exc:  # internal assertion failures exit 3 by contract
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
