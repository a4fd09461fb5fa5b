"""Verb implementations shared by the HTTP service and the CLI.

Each handler maps a request model to a response model; the FastAPI app and
the command line are both thin shims over these functions.
"""

from __future__ import annotations

from fractions import Fraction

from ..core import GramMatrix, LatticeError, det, dual_gram, gram_from_text, gram_to_text
from ..criterion import (
    FormSet,
    PartitionFamily,
    SearchSpace,
    check_criterion,
    check_minimality,
    check_prop2_hypothesis,
    check_prop3,
    enumerate_classes,
)
from ..decomposition import indecomposable_summands
from ..embedding import Embedding, represents
from ..enumeration import min_dual_norm, min_norm, short_vectors
from ..exprs import parse_expr
from ..verify import run_all
from . import schemas as s


def parse_lattice(text: str) -> GramMatrix:
    """Expression or (if it spans lines) Gram text format."""
    stripped = text.strip()
    if "\n" in stripped or stripped.startswith("#"):
        return gram_from_text(text)
    return parse_expr(stripped)


def _space(m: s.SpaceModel) -> SearchSpace:
    return SearchSpace(m.rank, m.max_diag, m.max_det)


def _parse_bound(text: str) -> Fraction:
    try:
        bound = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise LatticeError(f"bad bound: {text!r}") from None
    if bound < 1:
        raise LatticeError("bound must be >= 1")
    return bound


def info(req: s.InfoRequest) -> s.InfoResponse:
    g = parse_lattice(req.lattice)
    d = det(g)
    return s.InfoResponse(
        rank=g.rank,
        det=d,
        min_norm=min_norm(g),
        min_dual_norm=str(min_dual_norm(g)),
        unimodular=d == 1,
        gram=gram_to_text(g),
    )


def shortvec(req: s.ShortVecRequest) -> s.ShortVecResponse:
    g = parse_lattice(req.lattice)
    bound = _parse_bound(req.bound)
    svl = short_vectors(g, bound)
    return s.ShortVecResponse(
        bound=str(bound),
        count=len(svl),
        count_both_signs=2 * len(svl),
        vectors=[s.ShortVecEntry(coords=list(v), norm=n) for v, n in svl.vectors],
    )


def embed(req: s.EmbedRequest) -> s.EmbedResponse:
    target = parse_lattice(req.target)
    source = parse_lattice(req.source)
    e = represents(target, source)
    if e is None:
        return s.EmbedResponse(found=False)
    return s.EmbedResponse(found=True, matrix=[list(row) for row in e.matrix])


def complement(req: s.ComplementRequest) -> s.ComplementResponse:
    from ..embedding import orthogonal_complement
    from .. import intlinalg

    g = parse_lattice(req.lattice)
    rows = req.vectors
    if not rows:
        raise LatticeError("at least one sublattice vector is required")
    if any(len(r) != g.rank for r in rows):
        raise LatticeError("sublattice vectors must have length equal to the rank")
    sub_gram = GramMatrix(
        len(rows),
        intlinalg.as_matrix(
            [[intlinalg.gram_product(a, g.entries, b) for b in rows] for a in rows]
        ),
    )
    emb = Embedding(sub_gram, g, intlinalg.as_matrix(intlinalg.transpose(rows)))
    comp = orthogonal_complement(g, emb)
    return s.ComplementResponse(gram=gram_to_text(comp), rank=comp.rank, det=det(comp))


def dual(req: s.DualRequest) -> s.DualResponse:
    g = parse_lattice(req.lattice)
    dm = dual_gram(g)
    return s.DualResponse(
        entries=[[str(x) for x in row] for row in dm.entries],
        integral=dm.is_integral(),
    )


def decompose(req: s.DecomposeRequest) -> s.DecomposeResponse:
    g = parse_lattice(req.lattice)
    dec = indecomposable_summands(g)
    return s.DecomposeResponse(
        indecomposable=len(dec.summands) == 1,
        summands=[
            s.SummandEntry(
                gram=gram_to_text(piece),
                rank=piece.rank,
                det=det(piece),
                embedding=[list(row) for row in emb.matrix],
            )
            for piece, emb in zip(dec.summands, dec.embeddings)
        ],
    )


def enumerate_space(req: s.EnumerateRequest) -> s.EnumerateResponse:
    space = _space(req)
    grams = []
    count = 0
    for g in enumerate_classes(space):
        count += 1
        if not req.count_only:
            grams.append(gram_to_text(g))
    return s.EnumerateResponse(count=count, grams=grams)


def criterion(req: s.CheckCriterionRequest) -> s.CriterionResponse:
    base = parse_lattice(req.base)
    members = FormSet(tuple(parse_lattice(m) for m in req.members))
    rep = check_criterion(base, members, _space(req.space), req.shards, req.shard)
    ce = None
    if rep.counterexample is not None:
        ce = s.CounterexampleModel(
            gram=gram_to_text(rep.counterexample.form),
            missing=gram_to_text(rep.counterexample.missing),
            certificates=[[list(r) for r in e.matrix] for e in rep.counterexample.certificates],
        )
    return s.CriterionResponse(
        verdict=rep.verdict,
        space=s.SpaceModel(**rep.space.to_dict()),
        classes_checked=rep.classes_checked,
        counterexample=ce,
    )


def minimality(req: s.CheckMinimalityRequest) -> s.MinimalityResponse:
    base = parse_lattice(req.base)
    members = FormSet(tuple(parse_lattice(m) for m in req.members))
    witnesses = [parse_lattice(w) for w in req.witnesses]
    rep = check_minimality(base, members, witnesses, _space(req.space))
    return s.MinimalityResponse(
        all_witnessed=rep.all_witnessed,
        entries=[
            s.MinimalityEntryModel(
                dropped=gram_to_text(e.dropped),
                witness=gram_to_text(e.witness) if e.witness is not None else None,
                witness_origin=e.witness_origin,
            )
            for e in rep.entries
        ],
    )


def prop2(req: s.CheckProp2Request) -> s.Prop2Response:
    rep = check_prop2_hypothesis(parse_lattice(req.l), parse_lattice(req.l_prime))
    return s.Prop2Response(
        holds=rep.holds,
        dual_min=str(rep.dual_min),
        generating_bound=rep.generating_bound,
    )


def prop3(req: s.CheckProp3Request) -> s.Prop3Response:
    ground = FormSet(tuple(parse_lattice(m) for m in req.ground))
    family = PartitionFamily(ground, tuple(tuple(p) for p in req.parts))
    rep = check_prop3(family)
    return s.Prop3Response(
        passed=rep.passed,
        unimodular_ok=rep.unimodular_ok,
        coprime_ok=rep.coprime_ok,
        union_ok=rep.union_ok,
        minimality_ok=rep.minimality_ok,
        redundant_parts=list(rep.redundant_parts),
        criterion_set=[gram_to_text(g) for g in rep.criterion_set],
    )


def verify(req: s.VerifyRequest) -> s.VerifyResponse:
    results = run_all(slow=req.slow or None)
    return s.VerifyResponse(
        passed=all(r.passed for r in results),
        results=[
            s.CheckResultModel(name=r.name, passed=r.passed, detail=r.detail)
            for r in results
        ],
    )
