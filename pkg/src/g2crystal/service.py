"""HTTP facade over the library.

Every capability is exposed as a read-only endpoint with a pydantic response
model; outputs are deterministic for a fixed request (stable orderings come
from the library).  Run with ``uvicorn g2crystal.service:app`` or through the
CLI's ``serve`` subcommand.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from . import canonical, plactic, selftest as selftest_mod, words
from .tableaux import Shape, Tabloid, enumerate_tableaux
from .words import WordError

app = FastAPI(
    title="g2crystal",
    description="Type-G2 crystal combinatorics: components, insertion, canonical bases.",
    version="0.1.0",
)


class ComponentResponse(BaseModel):
    vertices: list[str]
    edges: list[tuple[str, int, str]]
    highest_weight: str


class TableauModel(BaseModel):
    shape: list[int]
    columns: list[list[int]]
    reading: str


class RSPairResponse(BaseModel):
    word: str
    p: TableauModel
    q: list[list[int]]


class EquivResponse(BaseModel):
    w1: str
    w2: str
    equivalent: bool


class TableauxResponse(BaseModel):
    shape: list[int]
    count: int
    tableaux: list[TableauModel]


class VectorTermModel(BaseModel):
    tabloid: TableauModel
    coeff: list[list[int]]
    coeff_text: str


class CanonicalColumnModel(BaseModel):
    tableau: TableauModel
    terms: list[VectorTermModel]


class CanonicalResponse(BaseModel):
    shape: list[int]
    tableaux: list[str]
    tabloids: list[str]
    columns: list[CanonicalColumnModel]


class SuiteModel(BaseModel):
    name: str
    passed: bool
    detail: str


class SelftestResponse(BaseModel):
    ok: bool
    max_len: int
    suites: list[SuiteModel]


def _parse_word(text: str) -> words.Word:
    try:
        return words.parse_word(text)
    except WordError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None


def _tableau_model(t: Tabloid) -> TableauModel:
    return TableauModel(
        shape=t.shape().as_pair(),
        columns=[list(c) for c in t.columns],
        reading=words.word_to_text(t.reading()),
    )


@app.get("/healthz")
def healthz() -> dict:
    return {"ok": True}


@app.get("/component", response_model=ComponentResponse)
def component(word: str = Query(...)) -> ComponentResponse:
    comp = words.component_graph(_parse_word(word))
    return ComponentResponse(
        vertices=[words.word_to_text(w) for w in comp.vertices],
        edges=[
            (words.word_to_text(a), i, words.word_to_text(b)) for a, i, b in comp.edges
        ],
        highest_weight=words.word_to_text(comp.highest_weight),
    )


@app.get("/component.dot", response_class=PlainTextResponse)
def component_dot(word: str = Query(...)) -> str:
    return words.component_graph(_parse_word(word)).to_dot() + "\n"


@app.get("/insert", response_model=RSPairResponse)
def insert(word: str = Query(...)) -> RSPairResponse:
    w = _parse_word(word)
    pair = plactic.rs_pair(w)
    return RSPairResponse(
        word=words.word_to_text(w),
        p=_tableau_model(pair.p),
        q=[s.as_pair() for s in pair.q],
    )


@app.get("/equiv", response_model=EquivResponse)
def equiv(w1: str = Query(...), w2: str = Query(...)) -> EquivResponse:
    a, b = _parse_word(w1), _parse_word(w2)
    return EquivResponse(w1=w1, w2=w2, equivalent=plactic.congruent(a, b))


def _shape_or_422(l1: int, l2: int) -> Shape:
    if l1 < 0 or l2 < 0:
        raise HTTPException(status_code=422, detail="column counts must be nonnegative")
    return Shape(l1, l2)


@app.get("/tableaux", response_model=TableauxResponse)
def tableaux_endpoint(l1: int = Query(...), l2: int = Query(...)) -> TableauxResponse:
    shape = _shape_or_422(l1, l2)
    tabs = enumerate_tableaux(shape)
    return TableauxResponse(
        shape=shape.as_pair(),
        count=len(tabs),
        tableaux=[_tableau_model(t) for t in tabs],
    )


@app.get("/canonical", response_model=CanonicalResponse)
def canonical_endpoint(l1: int = Query(...), l2: int = Query(...)) -> CanonicalResponse:
    shape = _shape_or_422(l1, l2)
    matrix = canonical.canonical_basis(shape)
    return CanonicalResponse(
        shape=shape.as_pair(),
        tableaux=[words.word_to_text(t.reading()) for t in matrix.tableaux],
        tabloids=[words.word_to_text(t.reading()) for t in matrix.tabloids()],
        columns=[
            CanonicalColumnModel(
                tableau=_tableau_model(t),
                terms=[
                    VectorTermModel(
                        tabloid=_tableau_model(tab),
                        coeff=coeff.to_pairs(),
                        coeff_text=coeff.to_text(),
                    )
                    for tab, coeff in vec.terms()
                ],
            )
            for t, vec in zip(matrix.tableaux, matrix.vectors)
        ],
    )


@app.get("/canonical.csv", response_class=PlainTextResponse)
def canonical_csv(l1: int = Query(...), l2: int = Query(...)) -> str:
    return canonical.canonical_basis(_shape_or_422(l1, l2)).to_csv()


@app.get("/selftest", response_model=SelftestResponse)
def selftest_endpoint(max_len: int = Query(4, ge=1, le=5)) -> SelftestResponse:
    results = selftest_mod.run_selftest(max_len)
    return SelftestResponse(
        ok=all(r.passed for r in results),
        max_len=max_len,
        suites=[SuiteModel(name=r.name, passed=r.passed, detail=r.detail) for r in results],
    )
