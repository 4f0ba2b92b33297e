"""FastAPI wrapper around the evaluation engine.

Stateless: every request names its semiring and carries its program text.
Domain errors surface as HTTP 422 with a stable machine code; bad requests
(unknown semiring, unknown semantics name, missing fields) as HTTP 400.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import orders, semantics
from ..errors import SemiclpError
from ..interpretations import pair_from_text
from ..program import format_program, parse_program
from ..render import emit_table, emit_value, result_to_doc
from ..semirings import SemiringSpec, builtin_names, get_semiring, load_table_semiring, validate_spec
from . import schemas


class BadRequest(Exception):
    def __init__(self, message: str):
        self.message = message
        super().__init__(message)


def _resolve_semiring(req: schemas.SemiringSelector) -> SemiringSpec:
    if req.table is not None:
        label = req.semiring.split(":", 1)[1] if req.semiring.startswith("table:") else req.semiring
        return load_table_semiring(req.table, source=label)
    if req.semiring.startswith("table:"):
        raise BadRequest("table semirings must inline their file content in 'table'")
    try:
        return get_semiring(req.semiring)
    except KeyError as exc:
        raise BadRequest(str(exc.args[0]))


def create_app() -> FastAPI:
    app = FastAPI(title="semiclp", version="0.1.0")

    @app.exception_handler(BadRequest)
    async def _bad_request(request: Request, exc: BadRequest):
        return JSONResponse(status_code=400, content={"code": "bad-request", "message": exc.message})

    @app.exception_handler(SemiclpError)
    async def _domain_error(request: Request, exc: SemiclpError):
        return JSONResponse(status_code=422, content={"code": exc.code, "message": str(exc)})

    @app.get("/api/semirings", response_model=schemas.SemiringsResponse)
    def list_semirings():
        return schemas.SemiringsResponse(
            semirings=builtin_names(), checks=sorted(orders.ALL_CHECKS)
        )

    @app.post("/api/parse", response_model=schemas.ParseResponse)
    def parse(req: schemas.ParseRequest):
        spec = _resolve_semiring(req)
        program = parse_program(req.program, spec, dedup=req.dedup)
        return schemas.ParseResponse(
            canonical=format_program(program),
            atoms=[str(a) for a in program.atoms],
            clause_count=len(program.clauses),
            is_positive=program.is_positive,
            semiring=spec.name,
        )

    @app.post("/api/eval", response_model=schemas.EvalResponse)
    def evaluate(req: schemas.EvalRequest):
        spec = _resolve_semiring(req)
        program = parse_program(req.program, spec, dedup=req.dedup)
        if req.semantics == "lfp":
            result = semantics.minimal_model(program, cap=req.max_iterations)
        elif req.semantics == "kk":
            result = semantics.kripke_kleene(
                program, req.approximator, cap=req.max_iterations, unsafe_fitting=req.unsafe_fitting
            )
        elif req.semantics == "wf":
            result = semantics.well_founded(
                program, req.approximator, cap=req.max_iterations, unsafe_fitting=req.unsafe_fitting
            )
        else:
            raise BadRequest(f"unknown semantics {req.semantics!r}; expected lfp, kk or wf")
        return schemas.EvalResponse(
            result=result_to_doc(spec, result, include_trace=req.trace),
            table=emit_table(spec, result),
            plain=emit_value(spec, result.value),
        )

    @app.post("/api/models", response_model=schemas.ModelsResponse)
    def models(req: schemas.ModelsRequest):
        spec = _resolve_semiring(req)
        program = parse_program(req.program, spec, dedup=req.dedup)
        if req.mode == "enumerate":
            result = semantics.enumerate_stable_fixpoints(
                program, req.approximator, cap=req.max_iterations, unsafe_fitting=req.unsafe_fitting
            )
        elif req.mode == "check":
            if req.pair is None:
                raise BadRequest("mode=check requires a 'pair' two-section text")
            pair = pair_from_text(spec, req.pair, program.atoms)
            stable = semantics.is_stable_fixpoint(
                program, req.approximator, pair, cap=req.max_iterations,
                unsafe_fitting=req.unsafe_fitting,
            )
            result = semantics.SemanticsResult(
                "stable_check", req.approximator, stable, True,
                semantics.FixpointTrace([], True, 0, req.max_iterations),
            )
        else:
            raise BadRequest(f"unknown mode {req.mode!r}; expected enumerate or check")
        return schemas.ModelsResponse(
            result=result_to_doc(spec, result), table=emit_table(spec, result)
        )

    @app.post("/api/check-semiring", response_model=schemas.CheckSemiringResponse)
    def check_semiring(req: schemas.CheckSemiringRequest):
        spec = _resolve_semiring(req)
        unknown = set(req.checks or []) - set(orders.ALL_CHECKS)
        if unknown:
            raise BadRequest(f"unknown checks: {', '.join(sorted(unknown))}")
        try:
            violations = validate_spec(spec)
        except SemiclpError as exc:
            violations = [f"axioms not checkable: {exc}"]
        reports = orders.run_checks(spec, req.checks)
        return schemas.CheckSemiringResponse(
            semiring=spec.name,
            axiom_violations=violations,
            reports=[r.to_doc() for r in reports],
        )

    return app


app = create_app()
