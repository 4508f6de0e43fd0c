"""Pydantic request/response models for the service endpoints.

The request models double as the on-disk document schemas: a germ file is
exactly the body of ``POST /v1/eu`` and a strata file the body of
``POST /v1/strata``, so the CLI can forward file contents untouched.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from ..invariants import DEFAULT_BOUND, DEFAULT_SAMPLES


class MuRequest(BaseModel):
    f: str
    vars: list[str]


class MuResponse(BaseModel):
    mu: int
    f: str
    vars: list[str]


class GermRequest(BaseModel):
    vars: list[str]
    defining: list[str] = []
    function: str
    seed: int = 0
    samples: int = DEFAULT_SAMPLES
    bound: int = DEFAULT_BOUND


class CheckModel(BaseModel):
    name: str
    passed: bool
    details: str


class SampleModel(BaseModel):
    coefficients: list[int]
    form: str
    mu: int | str  # "infinite" marks a degenerate slice


class WitnessModel(BaseModel):
    coefficients: list[int]
    form: str
    mu: int


class GenericityModel(BaseModel):
    witness: WitnessModel
    samples: list[SampleModel]


class ColengthRecordModel(BaseModel):
    label: str
    generators: list[str]
    value: int | str


class EuResponse(BaseModel):
    inputs: GermRequest
    dim_x: int
    mu_x: int
    mu_f: int
    mu_l: int
    mu_g_f: int
    mu_g_l: int
    eu_f: int
    alpha_q: int
    mu_g_f_paths: list[int]
    mu_g_l_paths: list[int]
    checks: list[CheckModel]
    genericity: GenericityModel
    colengths: list[ColengthRecordModel]
    seed: int
    samples: int
    bound: int
    all_checks_passed: bool


class StratumModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    name: str
    chi_l: int
    chi_f: int
    eu_x: int = Field(alias="eu_X")
    regular: bool = False


class StrataRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    dim_x: int = Field(alias="dimX")
    strata: list[StratumModel]
    expected_eu: int | None = None


class StrataResponse(BaseModel):
    eu_f: int
    dim_x: int
    expected_eu: int | None
    matches_expected: bool | None


class OracleCurveRequest(BaseModel):
    p: int
    q: int
    f: str
    seed: int = 0
    draws: int = 5
    samples: int = DEFAULT_SAMPLES
    bound: int = DEFAULT_BOUND


class PerturbationModel(BaseModel):
    coefficients: list[int]
    count: int


class OracleCurveResponse(BaseModel):
    p: int
    q: int
    f: str
    seed: int
    morse_count: int
    eu_f: int
    alpha_q: int
    passed: bool
    perturbations: list[PerturbationModel]


class ErrorInfo(BaseModel):
    kind: str
    reason: str


class ErrorResponse(BaseModel):
    error: ErrorInfo
