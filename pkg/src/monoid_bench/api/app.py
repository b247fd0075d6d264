from typing import Callable, TypeVar

from fastapi import FastAPI, HTTPException
from fastapi.concurrency import run_in_threadpool
from fastapi.responses import JSONResponse

from monoid_bench.api.schemas import (
    ClassifyRequest,
    ClassifyResponse,
    CodeRequest,
    CodeResponse,
    DecodeRequest,
    DecodeResponse,
    EvalRequest,
    EvalResponse,
    GadgetRequest,
    GadgetResponse,
    MemberRequest,
    MemberResponse,
    TranslateRequest,
    TranslateResponse,
    VerifyRequest,
    VerifyResponse,
)
from monoid_bench.api.workbench_service import WorkbenchService
from monoid_bench.checker.suites import UnknownSuiteError
from monoid_bench.gadgets.base import UnknownGadgetError
from monoid_bench.interpret.bundles import UnknownInterpretationError

app = FastAPI(
    title="Monoid Bi-Interpretability Workbench API",
    description="API for building gadget formulas, bounded model checking and translating "
                "formulas between the naturals and finitely generated monoids",
    version="1.0.0"
)

workbench_service = WorkbenchService()

Request = TypeVar("Request")
Response = TypeVar("Response")

UNKNOWN_NAME_ERRORS = (UnknownGadgetError, UnknownSuiteError, UnknownInterpretationError)


async def _run(handler: Callable[[Request], Response], request: Request) -> Response:
    try:
        return await run_in_threadpool(handler, request)
    except UNKNOWN_NAME_ERRORS as e:
        raise HTTPException(status_code=404, detail=str(e))


@app.exception_handler(ValueError)
async def value_error_handler(request, exc: ValueError):
    return JSONResponse(
        status_code=422,
        content={"message": str(exc)}
    )


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {"status": "healthy"}


@app.post("/api/v1/eval", response_model=EvalResponse)
async def evaluate_formula(request: EvalRequest):
    """Evaluate a formula with bounded quantifiers under the given bindings."""
    return await _run(workbench_service.evaluate, request)


@app.post("/api/v1/gadget", response_model=GadgetResponse)
async def build_gadget(request: GadgetRequest):
    """Build a catalogue gadget: the intended word, its formula and witness bound."""
    return await _run(workbench_service.gadget, request)


@app.post("/api/v1/verify", response_model=VerifyResponse)
async def verify_suite(request: VerifyRequest):
    """
    Run a verification suite.
    The report lists false positives and false negatives; it is empty when the suite is clean.
    """
    return await _run(workbench_service.verify, request)


@app.post("/api/v1/translate", response_model=TranslateResponse)
async def translate_formula(request: TranslateRequest):
    """Translate a formula through a named interpretation"""
    return await _run(workbench_service.translate, request)


@app.post("/api/v1/member", response_model=MemberResponse)
async def submonoid_membership(request: MemberRequest):
    return await _run(workbench_service.member, request)


@app.post("/api/v1/classify", response_model=ClassifyResponse)
async def classify_formula(request: ClassifyRequest):
    return await _run(workbench_service.classify, request)


@app.post("/api/v1/code", response_model=CodeResponse)
async def encode_value(request: CodeRequest):
    return await _run(workbench_service.code, request)


@app.post("/api/v1/decode", response_model=DecodeResponse)
async def decode_value(request: DecodeRequest):
    return await _run(workbench_service.decode, request)


@app.get("/api/v1/reports", response_model=list[str])
async def list_reports():
    """Names of the stored verification reports"""
    return workbench_service.list_reports()


@app.get("/api/v1/reports/{name}", response_model=VerifyResponse)
async def get_report(name: str):
    try:
        return workbench_service.get_report(name)
    except KeyError:
        raise HTTPException(
            status_code=404,
            detail=f"Report {name} not found"
        )
