"""Command-line front end.

A thin client over the HTTP service: by default requests run in-process
against the ASGI app (no socket, no server to start); ``--server URL`` points
the same commands at a running instance instead.  Exit codes: 0 success,
1 usage error, 2 evaluation error.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click
import httpx

USAGE_EXIT = 1
EVAL_EXIT = 2


def _client(server: Optional[str]):
    if server:
        return httpx.Client(base_url=server)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service.app import create_app

    return TestClient(create_app(), raise_server_exceptions=True)


class _EvalError(click.ClickException):
    exit_code = EVAL_EXIT


def _call(server: Optional[str], method: str, path: str, payload: Optional[dict] = None) -> dict:
    with _client(server) as client:
        response = client.request(method, path, json=payload)
    if response.status_code >= 400:
        try:
            body = response.json()
            message = f"{body.get('code', 'error')}: {body.get('message', '')}"
        except ValueError:
            message = response.text
        if response.status_code == 400:
            raise click.UsageError(message)
        raise _EvalError(message)
    return response.json()


def _semiring_fields(semiring: str) -> dict:
    """Resolve ``table:<path>`` client-side by inlining the file content."""
    if semiring.startswith("table:"):
        path = semiring.split(":", 1)[1]
        try:
            with open(path, encoding="utf-8") as fh:
                return {"semiring": semiring, "table": fh.read()}
        except OSError as exc:
            raise click.UsageError(f"cannot read table semiring file: {exc}")
    return {"semiring": semiring}


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise click.UsageError(f"cannot read file: {exc}")


def _emit(doc: dict, fmt: str):
    if fmt == "json":
        click.echo(json.dumps(doc["result"], indent=2))
    elif fmt == "plain":
        click.echo(doc.get("plain", doc["table"]), nl=False)
    else:
        click.echo(doc["table"], nl=False)


_server_option = click.option("--server", default=None, help="URL of a running service; in-process when omitted.")
_semiring_option = click.option("--semiring", required=True, help="Registry name (bool, fuzzy, nat-inf, opt, powerset:a,b, int-inf, table:<path>).")
_format_option = click.option("--format", "fmt", type=click.Choice(["table", "json", "plain"]), default="table", show_default=True)


@click.group()
def cli():
    """Evaluate semiring-based constraint logic programs."""


@cli.command("list-semirings")
@_server_option
def list_semirings(server):
    """List registered semirings and property checks."""
    doc = _call(server, "GET", "/api/semirings")
    for name in doc["semirings"]:
        click.echo(name)


@cli.command("parse")
@click.argument("program_path")
@_semiring_option
@click.option("--dedup", is_flag=True, help="Drop duplicate clauses (programs are multisets by default).")
@_server_option
def parse_cmd(program_path, semiring, dedup, server):
    """Parse and echo a program in canonical form."""
    payload = {"program": _read_file(program_path), "dedup": dedup, **_semiring_fields(semiring)}
    doc = _call(server, "POST", "/api/parse", payload)
    click.echo(doc["canonical"], nl=False)


@cli.command("eval")
@click.argument("program_path")
@_semiring_option
@click.option("--semantics", type=click.Choice(["lfp", "kk", "wf", "stable", "stable-check"]), default="lfp", show_default=True)
@click.option("--approximator", type=click.Choice(["fitting", "ultimate"]), default="fitting", show_default=True)
@_format_option
@click.option("--max-iterations", type=int, default=10_000, show_default=True)
@click.option("--trace", is_flag=True, help="Include the full iteration trace in structured output.")
@click.option("--dedup", is_flag=True)
@click.option("--unsafe-fitting", is_flag=True, help="Run the four-valued operator even when it is not an approximator.")
@click.option("--pair", "pair_path", default=None, help="Two-section [lower]/[upper] pair file (stable-check only).")
@_server_option
def eval_cmd(program_path, semiring, semantics, approximator, fmt, max_iterations, trace, dedup, unsafe_fitting, pair_path, server):
    """Run a semantics over a program."""
    base = {
        "program": _read_file(program_path),
        "approximator": approximator,
        "max_iterations": max_iterations,
        "dedup": dedup,
        "unsafe_fitting": unsafe_fitting,
        **_semiring_fields(semiring),
    }
    if semantics in ("stable", "stable-check"):
        if semantics == "stable-check":
            if pair_path is None:
                raise click.UsageError("--semantics stable-check requires --pair FILE")
            base.update(mode="check", pair=_read_file(pair_path))
        else:
            base.update(mode="enumerate")
        doc = _call(server, "POST", "/api/models", base)
        _emit({**doc, "plain": doc["table"]}, fmt)
        return
    if pair_path is not None:
        raise click.UsageError("--pair only applies to --semantics stable-check")
    base.update(semantics=semantics, trace=trace or fmt == "table")
    doc = _call(server, "POST", "/api/eval", base)
    _emit(doc, fmt)


@cli.command("models")
@click.argument("program_path")
@_semiring_option
@click.option("--approximator", type=click.Choice(["fitting", "ultimate"]), default="fitting", show_default=True)
@click.option("--pair", "pair_path", default=None, help="Check this pair instead of enumerating.")
@_format_option
@click.option("--max-iterations", type=int, default=10_000, show_default=True)
@click.option("--dedup", is_flag=True)
@click.option("--unsafe-fitting", is_flag=True)
@_server_option
def models_cmd(program_path, semiring, approximator, pair_path, fmt, max_iterations, dedup, unsafe_fitting, server):
    """Enumerate stable fixpoints, or check one given pair."""
    payload = {
        "program": _read_file(program_path),
        "approximator": approximator,
        "max_iterations": max_iterations,
        "dedup": dedup,
        "unsafe_fitting": unsafe_fitting,
        "mode": "check" if pair_path else "enumerate",
        **_semiring_fields(semiring),
    }
    if pair_path:
        payload["pair"] = _read_file(pair_path)
    doc = _call(server, "POST", "/api/models", payload)
    _emit({**doc, "plain": doc["table"]}, fmt)


@cli.command("check-semiring")
@_semiring_option
@click.option("--property", "properties", multiple=True, help="Run only the named checks (repeatable).")
@_format_option
@_server_option
def check_semiring_cmd(semiring, properties, fmt, server):
    """Validate the semiring axioms and run the order-theoretic property checks."""
    payload = {**_semiring_fields(semiring), "checks": list(properties) or None}
    doc = _call(server, "POST", "/api/check-semiring", payload)
    if fmt == "json":
        click.echo(json.dumps(doc, indent=2))
        return
    status = "ok" if not doc["axiom_violations"] else f"FAIL ({doc['axiom_violations'][0]})"
    click.echo(f"semiring {doc['semiring']}: axioms {status}")
    for report in doc["reports"]:
        if report["passed"] is None:
            verdict = f"skipped ({report['reason']})" if report["reason"] else "skipped"
        elif report["passed"]:
            verdict = "pass"
        else:
            verdict = f"FAIL ({report['reason'] or 'counterexample found'})"
        click.echo(f"  {report['check']}: {verdict}")
    if doc["axiom_violations"] or any(r["passed"] is False for r in doc["reports"]):
        raise _EvalError("one or more semiring checks failed")


@cli.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve_cmd(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return USAGE_EXIT
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return exc.exit_code
    except click.exceptions.Abort:
        return USAGE_EXIT
    except httpx.HTTPError as exc:
        click.echo(f"error: transport failure: {exc}", err=True)
        return EVAL_EXIT
    return 0


if __name__ == "__main__":
    sys.exit(main())
