"""FastAPI application wrapping the core computations.

All endpoints are pure functions of their request body (plus the seed carried
inside it), so identical requests produce identical responses and many
clients can hit the service concurrently.  Library errors surface as
HTTP 400 with a machine-readable ``{"error": {"kind", "reason"}}`` envelope;
the CLI maps kinds to its exit codes.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import GermcalcError, NonIcisError
from ..exprparse import VarTable, parse
from ..files import parse_germ_document, parse_strata_document
from ..invariants import euler_obstruction, milnor_hypersurface
from ..morsify import MonomialCurve, verify_morse_count
from ..strata import stratified_euler_obstruction
from .models import (
    ErrorResponse,
    EuResponse,
    GermRequest,
    MuRequest,
    MuResponse,
    OracleCurveRequest,
    OracleCurveResponse,
    StrataRequest,
    StrataResponse,
)

_ERROR_RESPONSES = {400: {"model": ErrorResponse}}


def create_app() -> FastAPI:
    app = FastAPI(title="germcalc", version=__version__)

    @app.exception_handler(GermcalcError)
    async def handle_library_error(_request: Request, exc: GermcalcError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": {"kind": exc.kind, "reason": str(exc)}},
        )

    @app.get("/v1/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/v1/mu", response_model=MuResponse, responses=_ERROR_RESPONSES)
    def compute_mu(req: MuRequest) -> MuResponse:
        vars_table = VarTable(tuple(req.vars))
        poly = parse(req.f, vars_table)
        return MuResponse(mu=milnor_hypersurface(poly), f=req.f, vars=req.vars)

    @app.post("/v1/eu", response_model=EuResponse, responses=_ERROR_RESPONSES)
    def compute_eu(req: GermRequest) -> EuResponse:
        doc = parse_germ_document(req.model_dump())
        try:
            report = euler_obstruction(
                doc.germ, seed=doc.seed, samples=doc.samples, bound=doc.bound
            )
        except NonIcisError as exc:
            raise NonIcisError(
                f"{exc}; the germ is not an ICIS, supply stratification data "
                "to the strata route instead"
            ) from exc
        return EuResponse(inputs=req, **report.to_dict(doc.names))

    @app.post("/v1/strata", response_model=StrataResponse, responses=_ERROR_RESPONSES)
    def compute_strata(req: StrataRequest) -> StrataResponse:
        doc = parse_strata_document(req.model_dump(by_alias=True))
        eu = stratified_euler_obstruction(doc.table)
        matches = None if doc.expected_eu is None else eu == doc.expected_eu
        return StrataResponse(
            eu_f=eu,
            dim_x=doc.table.dimX,
            expected_eu=doc.expected_eu,
            matches_expected=matches,
        )

    @app.post("/v1/oracle-curve", response_model=OracleCurveResponse, responses=_ERROR_RESPONSES)
    def oracle_curve(req: OracleCurveRequest) -> OracleCurveResponse:
        curve = MonomialCurve(req.p, req.q)
        func = parse(req.f, VarTable(("x", "y")))
        verification = verify_morse_count(
            curve, func, seed=req.seed, draws=req.draws, samples=req.samples, bound=req.bound
        )
        return OracleCurveResponse(
            p=req.p,
            q=req.q,
            f=req.f,
            seed=req.seed,
            morse_count=verification.morse_count,
            eu_f=verification.eu_f,
            alpha_q=verification.alpha_q,
            passed=verification.passed,
            perturbations=[
                {"coefficients": list(coeffs), "count": count}
                for coeffs, count in verification.perturbations
            ],
        )

    return app


app = create_app()
