from typing import Optional

from pydantic import BaseModel, Field

from monoid_bench.checker.evaluator import Mode


class WorkbenchOptions(BaseModel):
    """Per-request overrides of the environment configuration."""
    monoid: Optional[str] = Field(
        default=None,
        description="Monoid spec: free:x1,x2 / trace:x1,x2,x3;edges=x1-x3 / bs:k,m / nat / lists"
    )
    bound: Optional[int] = Field(
        default=None,
        ge=0,
        description="Quantifier bound"
    )
    mode: Optional[Mode] = Field(
        default=None,
        description="Evaluation mode"
    )
    workers: Optional[int] = Field(
        default=None,
        ge=1,
        description="Worker threads for verification"
    )


class EvalRequest(WorkbenchOptions):
    formula: str = Field(
        ...,
        min_length=1,
        description="Formula text"
    )
    bindings: dict[str, str] = Field(
        default_factory=dict,
        description="Values of the free variables, e.g. {\"x\": \"x1.x2\"}"
    )


class EvalResponse(BaseModel):
    value: bool
    structure: str
    bound: int
    level: str = Field(..., description="Quantifier level of the prenex form")
    nodes: int
    quantifier_nodes: int
    memo_hits: int
    elapsed_ms: float


class GadgetRequest(WorkbenchOptions):
    name: str = Field(
        ...,
        min_length=1,
        description="Gadget name from the catalogue"
    )
    args: list[str] = Field(
        default_factory=list,
        description="Instance parameters, e.g. [\"2\", \"1\"] for mult"
    )
    check: bool = Field(
        default=False,
        description="Also evaluate the formula at the built assignment"
    )


class GadgetResponse(BaseModel):
    name: str
    args: list[str]
    word: str
    pretty: str
    assignment: dict[str, str]
    formula: str
    witness_bound: int
    level: Optional[str] = None
    holds: Optional[bool] = None


class VerifyRequest(WorkbenchOptions):
    suite: str = Field(
        ...,
        min_length=1,
        description="Verification suite name"
    )
    max_size: Optional[int] = Field(
        default=None,
        ge=0,
        description="Size limit of the instances (suite default when omitted)"
    )
    seed: int = Field(
        default=0,
        ge=0,
        description="Seed of the randomized suites"
    )
    save: Optional[str] = Field(
        default=None,
        min_length=1,
        description="Store the report under this name"
    )


class ReportRow(BaseModel):
    kind: str
    tuple: str


class VerifyResponse(BaseModel):
    suite: str
    ok: bool
    instances: int
    rows: list[ReportRow]
    scope: str = ""
    storage_path: Optional[str] = None


class TranslateRequest(WorkbenchOptions):
    interpretation: str = Field(
        ...,
        min_length=1,
        description="Interpretation bundle name"
    )
    formula: str = Field(
        ...,
        min_length=1,
        description="Formula over the source signature"
    )


class TranslateResponse(BaseModel):
    interpretation: str
    source: str
    target: str
    source_level: str
    target_level: str
    variables: dict[str, list[str]] = Field(
        default_factory=dict,
        description="Target variables representing each free source variable"
    )


class MemberRequest(BaseModel):
    element: str = Field(
        ...,
        min_length=1,
        description="Word to test"
    )
    generators: list[str] = Field(
        ...,
        description="Generators of the submonoid"
    )
    alphabet: Optional[list[str]] = Field(
        default=None,
        description="Alphabet; inferred from the words when omitted"
    )


class MemberResponse(BaseModel):
    member: bool
    witness: str
    indices: list[int]


class ClassifyRequest(BaseModel):
    formula: str = Field(..., min_length=1)


class ClassifyResponse(BaseModel):
    level: str
    ascii: str
    prenex: str


class CodeRequest(BaseModel):
    value: str = Field(
        ...,
        min_length=1,
        description="A word over x1, x2, ... or a tuple such as (1,3,2)"
    )


class CodeResponse(BaseModel):
    code: int
    tuple: list[int]


class DecodeRequest(BaseModel):
    code: int = Field(..., ge=0)


class DecodeResponse(BaseModel):
    tuple: list[int]
    word: Optional[str] = Field(
        default=None,
        description="The monomial over x1, x2, ... when every entry is positive"
    )
