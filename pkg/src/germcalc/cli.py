"""Thin command-line client for the germ-invariant service.

Every subcommand builds a request, posts it to the service API and renders
the response.  By default the requests run against an in-process instance of
the FastAPI app (no network, fully deterministic); ``--url`` points the same
client at a remote server started with ``germcalc serve``.

Exit codes: 0 success and all checks passed; 1 parse error, malformed file or
invalid input; 2 non-isolated singularity or non-ICIS germ; 3 genericity
failure; 4 a cross-check or expected-value mismatch.
"""

from __future__ import annotations

import json
import sys

import click
import httpx

EXIT_BY_KIND = {
    "parse": 1,
    "invalid-input": 1,
    "resource-limit": 1,
    "inconclusive": 1,
    "non-isolated": 2,
    "non-icis": 2,
    "genericity": 3,
    "cross-check": 4,
}
EXIT_MISMATCH = 4


def _client(url: str | None) -> httpx.Client:
    if url:
        return httpx.Client(base_url=url, timeout=300.0)
    import warnings

    with warnings.catch_warnings():
        # Some starlette builds warn on import about their httpx test client.
        warnings.simplefilter("ignore", DeprecationWarning)
        from fastapi.testclient import TestClient

    from .service.app import create_app

    return TestClient(create_app())


def _post(url: str | None, path: str, payload: dict) -> dict:
    """POST a request; on error print the reason and exit with the mapped code."""
    with _client(url) as client:
        try:
            response = client.post(path, json=payload)
        except httpx.HTTPError as exc:
            click.echo(f"error[transport]: {exc}", err=True)
            sys.exit(1)
    body = response.json()
    if response.status_code == 200:
        return body
    if isinstance(body, dict) and "error" in body:
        kind = body["error"].get("kind", "invalid-input")
        reason = body["error"].get("reason", "unknown error")
        click.echo(f"error[{kind}]: {reason}", err=True)
        sys.exit(EXIT_BY_KIND.get(kind, 1))
    click.echo(f"error[invalid-input]: {json.dumps(body, sort_keys=True)}", err=True)
    sys.exit(1)


def _emit_json(payload: dict):
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _load_document(path: str) -> dict:
    from .errors import GermcalcError
    from .files import read_json_document

    try:
        return read_json_document(path)
    except GermcalcError as exc:
        click.echo(f"error[{exc.kind}]: {exc}", err=True)
        sys.exit(EXIT_BY_KIND.get(exc.kind, 1))


@click.group()
@click.version_option(package_name="germcalc")
def main():
    """Exact Milnor numbers and Euler obstructions of singularity germs."""


@main.command()
@click.option("--f", "f_expr", required=True, help="Function expression, e.g. 'x^2 - y^3'.")
@click.option("--vars", "vars_spec", required=True, help="Comma-separated variable names.")
@click.option("--json", "as_json", is_flag=True, help="Emit the structured response.")
@click.option("--url", default=None, help="Remote service URL (default: in-process).")
def mu(f_expr: str, vars_spec: str, as_json: bool, url: str | None):
    """Milnor number of an isolated hypersurface singularity."""
    names = [part.strip() for part in vars_spec.split(",") if part.strip()]
    body = _post(url, "/v1/mu", {"f": f_expr, "vars": names})
    if as_json:
        _emit_json(body)
    else:
        click.echo(f"mu = {body['mu']}")


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(), help="Germ file (JSON).")
@click.option("--seed", type=int, default=None, help="Override the file's seed.")
@click.option("--samples", type=int, default=None, help="Override the genericity sample count.")
@click.option("--bound", type=int, default=None, help="Override the coefficient bound.")
@click.option("--json", "as_json", is_flag=True, help="Emit the structured report.")
@click.option("--url", default=None, help="Remote service URL (default: in-process).")
def eu(
    input_path: str,
    seed: int | None,
    samples: int | None,
    bound: int | None,
    as_json: bool,
    url: str | None,
):
    """Invariant tower and Euler obstruction for an ICIS germ file."""
    doc = _load_document(input_path)
    for key, value in (("seed", seed), ("samples", samples), ("bound", bound)):
        if value is not None:
            doc[key] = value
    body = _post(url, "/v1/eu", doc)
    if as_json:
        _emit_json(body)
    else:
        rows = [
            ("dim X", body["dim_x"]),
            ("mu(X)", body["mu_x"]),
            ("mu(f)", body["mu_f"]),
            ("mu(l)", body["mu_l"]),
            ("mu_G(f)", body["mu_g_f"]),
            ("mu_G(l)", body["mu_g_l"]),
            ("Eu_f", body["eu_f"]),
            ("alpha_q", body["alpha_q"]),
        ]
        for label, value in rows:
            click.echo(f"{label:<9} = {value}")
        witness = body["genericity"]["witness"]
        click.echo(f"linear form: {witness['form']}  (mu = {witness['mu']})")
        click.echo("checks:")
        for check in body["checks"]:
            status = "pass" if check["passed"] else "FAIL"
            click.echo(f"  [{status}] {check['name']}: {check['details']}")
    if not body["all_checks_passed"]:
        click.echo("error[cross-check]: at least one identity check failed", err=True)
        sys.exit(EXIT_MISMATCH)


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(), help="Strata file (JSON).")
@click.option("--json", "as_json", is_flag=True, help="Emit the structured response.")
@click.option("--url", default=None, help="Remote service URL (default: in-process).")
def strata(input_path: str, as_json: bool, url: str | None):
    """Euler obstruction from stratification data."""
    doc = _load_document(input_path)
    body = _post(url, "/v1/strata", doc)
    if as_json:
        _emit_json(body)
    else:
        click.echo(f"Eu_f = {body['eu_f']}")
        if body["expected_eu"] is not None:
            verdict = "matches" if body["matches_expected"] else "MISMATCH"
            click.echo(f"expected Eu_f = {body['expected_eu']} ({verdict})")
    if body["matches_expected"] is False:
        click.echo(
            f"error[cross-check]: computed Eu_f = {body['eu_f']} but the file "
            f"expects {body['expected_eu']}",
            err=True,
        )
        sys.exit(EXIT_MISMATCH)


@main.command("oracle-curve")
@click.option("--p", "p_exp", required=True, type=int, help="Lower exponent of the curve.")
@click.option("--q", "q_exp", required=True, type=int, help="Upper exponent of the curve.")
@click.option("--f", "f_expr", required=True, help="Function expression in x and y.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit the structured response.")
@click.option("--url", default=None, help="Remote service URL (default: in-process).")
def oracle_curve(
    p_exp: int, q_exp: int, f_expr: str, seed: int, as_json: bool, url: str | None
):
    """Cross-check the Morse-point count against the Euler obstruction."""
    body = _post(
        url, "/v1/oracle-curve", {"p": p_exp, "q": q_exp, "f": f_expr, "seed": seed}
    )
    if as_json:
        _emit_json(body)
    else:
        click.echo(f"morse count = {body['morse_count']}")
        click.echo(f"Eu_f        = {body['eu_f']}")
        click.echo(f"verdict     = {'pass' if body['passed'] else 'FAIL'}")
    if not body["passed"]:
        click.echo(
            "error[cross-check]: the Morse count disagrees with the Euler obstruction",
            err=True,
        )
        sys.exit(EXIT_MISMATCH)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
