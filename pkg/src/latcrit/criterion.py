"""Criterion-set verification over finite, explicitly bounded search spaces.

Quantification over "all forms" is replaced by exhaustive scans of a
SearchSpace (bounded rank and reduced diagonal).  Reports always name their
space and say "verified-within-space", never "proved": the scans are
falsification machinery at desk scale, not proofs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from . import intlinalg
from .core import (
    GramMatrix,
    LatticeError,
    det,
    direct_sum_all,
    gram_to_text,
)
from .decomposition import coprime
from .embedding import Embedding, is_isometric, represents
from .enumeration import (
    min_dual_norm,
    short_vectors,
    smallest_generating_norm,
)

VERIFIED = "verified-within-space"
COUNTEREXAMPLE = "counterexample"


class MemberNotInS(LatticeError):
    """A candidate criterion subset member is not represented by the base form."""


@dataclass(frozen=True)
class FormSet:
    """Finite set of pairwise non-isometric forms."""

    members: tuple[GramMatrix, ...]
    description: str = ""

    def __post_init__(self):
        for a, b in itertools.combinations(self.members, 2):
            if is_isometric(a, b) is not None:
                raise LatticeError("form set members must be pairwise non-isometric")

    def drop(self, index: int) -> tuple[GramMatrix, ...]:
        return self.members[:index] + self.members[index + 1:]


@dataclass(frozen=True)
class SearchSpace:
    """All isometry classes admitting a reduced-style Gram within the bounds."""

    rank: int
    max_diag: int
    max_det: Optional[int] = None

    def __post_init__(self):
        if self.rank < 1 or self.max_diag < 1:
            raise LatticeError("rank and max_diag must be >= 1")

    def to_dict(self) -> dict:
        d = {"rank": self.rank, "max_diag": self.max_diag}
        if self.max_det is not None:
            d["max_det"] = self.max_det
        return d


@dataclass(frozen=True)
class Counterexample:
    form: GramMatrix
    missing: GramMatrix
    certificates: tuple[Embedding, ...]  # embeddings of the criterion members

    def to_dict(self) -> dict:
        return {
            "gram": gram_to_text(self.form),
            "missing": gram_to_text(self.missing),
            "certificates": [[list(row) for row in e.matrix] for e in self.certificates],
        }


@dataclass(frozen=True)
class CriterionReport:
    verdict: str
    space: SearchSpace
    classes_checked: int
    counterexample: Optional[Counterexample] = None

    def __post_init__(self):
        assert (self.verdict == COUNTEREXAMPLE) == (self.counterexample is not None)

    @property
    def verified(self) -> bool:
        return self.verdict == VERIFIED

    def to_dict(self) -> dict:
        d = {
            "verdict": self.verdict,
            "space": self.space.to_dict(),
            "classes_checked": self.classes_checked,
        }
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample.to_dict()
        return d


@dataclass(frozen=True)
class PartitionFamily:
    """Ground set of lattices with a family of index subsets covering it."""

    ground: FormSet
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.ground.members)
        for part in self.parts:
            if not part:
                raise LatticeError("parts must be nonempty")
            if any(i < 0 or i >= n for i in part):
                raise LatticeError("part index out of range")


def _nondecreasing_diagonals(rank: int, max_diag: int) -> Iterator[tuple[int, ...]]:
    yield from itertools.combinations_with_replacement(range(1, max_diag + 1), rank)


def _sign_canonical(upper: list[list[int]], n: int) -> bool:
    """Keep one representative per orbit of coordinate sign flips."""
    flat = tuple(upper[i][j] for i in range(n) for j in range(i + 1, n))
    for signs in itertools.product((1, -1), repeat=n - 1):
        eps = (1,) + signs
        flipped = tuple(
            eps[i] * eps[j] * upper[i][j] for i in range(n) for j in range(i + 1, n)
        )
        if flipped < flat:
            return False
    return True


def _space_candidates(diag: tuple[int, ...]) -> Iterator[GramMatrix]:
    """Candidate Grams with the given ordered diagonal and 2|g_ij| <= g_ii."""
    n = len(diag)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    ranges = [range(-(diag[i] // 2), diag[i] // 2 + 1) for i, _ in pairs]
    for combo in itertools.product(*ranges):
        rows = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), v in zip(pairs, combo):
            rows[i][j] = rows[j][i] = v
        if not _sign_canonical(rows, n):
            continue
        minors_ok = True
        for k in range(1, n + 1):
            if intlinalg.bareiss_det([r[:k] for r in rows[:k]]) <= 0:
                minors_ok = False
                break
        if minors_ok:
            yield GramMatrix(n, intlinalg.as_matrix(rows))


def _fingerprint(g: GramMatrix, max_diag: int) -> tuple:
    svl = short_vectors(g, max_diag)
    counts = tuple(svl.count_of_norm(m) for m in range(1, max_diag + 1))
    return (det(g), counts)


def enumerate_classes(space: SearchSpace, shards: int = 1, shard: int = 0) -> Iterator[GramMatrix]:
    """One representative per isometry class admitting a Gram within the space.

    The diagonal constraints over-approximate Minkowski reduction, so every
    class with a reduced diagonal within max_diag appears; duplicates are
    removed by invariant fingerprint and then exact isometry testing.  With
    shards > 1, only diagonals with index % shards == shard are scanned
    (deduplication is then per shard).
    """
    if shards < 1 or not (0 <= shard < shards):
        raise LatticeError("bad shard specification")
    seen: dict[tuple, list[GramMatrix]] = {}
    for idx, diag in enumerate(_nondecreasing_diagonals(space.rank, space.max_diag)):
        if idx % shards != shard:
            continue
        for g in _space_candidates(diag):
            if space.max_det is not None and det(g) > space.max_det:
                continue
            fp = _fingerprint(g, space.max_diag)
            bucket = seen.setdefault(fp, [])
            if any(is_isometric(g, rep) is not None for rep in bucket):
                continue
            bucket.append(g)
            yield g


def represents_all(q: GramMatrix, s: FormSet | Sequence[GramMatrix]) -> bool:
    members = s.members if isinstance(s, FormSet) else tuple(s)
    return all(represents(q, l) is not None for l in members)


def _member_certificates(q: GramMatrix, members: Sequence[GramMatrix]) -> Optional[list[Embedding]]:
    certs = []
    for l in members:
        e = represents(q, l)
        if e is None:
            return None
        certs.append(e)
    return certs


def check_criterion(
    a: GramMatrix,
    s_prime: FormSet,
    space: SearchSpace,
    shards: int = 1,
    shard: int = 0,
) -> CriterionReport:
    """Scan the space for a form representing all of s_prime but not a.

    Precondition: every member of s_prime is represented by a (criterion
    subsets live inside the set of forms represented by a).
    """
    for l in s_prime.members:
        if represents(a, l) is None:
            raise MemberNotInS(f"base form does not represent a member of rank {l.rank}")
    count = 0
    for q in enumerate_classes(space, shards, shard):
        count += 1
        certs = _member_certificates(q, s_prime.members)
        if certs is None:
            continue
        if represents(q, a) is None:
            return CriterionReport(
                COUNTEREXAMPLE, space, count, Counterexample(q, a, tuple(certs))
            )
    return CriterionReport(VERIFIED, space, count)


def check_family_criterion(
    s_prime: FormSet,
    targets: Sequence[GramMatrix],
    space: SearchSpace,
) -> CriterionReport:
    """Verify within the space that s_prime-universality implies representing
    every target form (no containment precondition)."""
    count = 0
    for q in enumerate_classes(space):
        count += 1
        certs = _member_certificates(q, s_prime.members)
        if certs is None:
            continue
        for t in targets:
            if represents(q, t) is None:
                return CriterionReport(
                    COUNTEREXAMPLE, space, count, Counterexample(q, t, tuple(certs))
                )
    return CriterionReport(VERIFIED, space, count)


@dataclass(frozen=True)
class MinimalityEntry:
    dropped: GramMatrix
    witness: Optional[GramMatrix]
    witness_origin: Optional[str]  # "provided" or "space"
    certificates: tuple[Embedding, ...]

    def to_dict(self) -> dict:
        return {
            "dropped": gram_to_text(self.dropped),
            "witness": gram_to_text(self.witness) if self.witness is not None else None,
            "witness_origin": self.witness_origin,
            "certificates": [[list(row) for row in e.matrix] for e in self.certificates],
        }


@dataclass(frozen=True)
class MinimalityReport:
    entries: tuple[MinimalityEntry, ...]
    space: SearchSpace

    @property
    def all_witnessed(self) -> bool:
        return all(e.witness is not None for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "all_witnessed": self.all_witnessed,
            "space": self.space.to_dict(),
            "entries": [e.to_dict() for e in self.entries],
        }


def check_minimality(
    a: GramMatrix,
    s_prime: FormSet,
    witnesses: Sequence[GramMatrix],
    space: SearchSpace,
) -> MinimalityReport:
    """For each member, exhibit a form universal for the rest but not for a.

    Provided witnesses are tried before scanning the space; the members of
    s_prime themselves are natural witnesses for each other.
    """
    entries = []
    for idx in range(len(s_prime.members)):
        remaining = s_prime.drop(idx)
        found: Optional[MinimalityEntry] = None
        for origin, pool in (("provided", list(witnesses)), ("space", enumerate_classes(space))):
            for q in pool:
                certs = _member_certificates(q, remaining)
                if certs is None:
                    continue
                if represents(q, a) is None:
                    found = MinimalityEntry(s_prime.members[idx], q, origin, tuple(certs))
                    break
            if found is not None:
                break
        if found is None:
            found = MinimalityEntry(s_prime.members[idx], None, None, ())
        entries.append(found)
    return MinimalityReport(tuple(entries), space)


def check_norm2_lemma(q: GramMatrix) -> bool:
    """Every norm-2 vector is orthogonal to all norm-1 vectors, or is a sum of
    two orthogonal norm-1 vectors."""
    svl = short_vectors(q, 2)
    ones = svl.of_norm(1)
    if not ones:
        return True
    ones_signed = [v for v in ones] + [tuple(-x for x in v) for v in ones]
    gq = q.entries
    for v in svl.of_norm(2):
        gv = intlinalg.mat_vec(gq, v)
        if all(intlinalg.dot(x, gv) == 0 for x in ones):
            continue
        ok = False
        for x in ones_signed:
            y = tuple(a - b for a, b in zip(v, x))
            if q.norm(y) == 1 and q.inner(x, y) == 0:
                ok = True
                break
        if not ok:
            return False
    return True


@dataclass(frozen=True)
class Prop2Report:
    holds: bool
    dual_min: Fraction
    generating_bound: int

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "dual_min": str(self.dual_min),
            "generating_bound": self.generating_bound,
        }


def check_prop2_hypothesis(l: GramMatrix, l_prime: GramMatrix) -> Prop2Report:
    """Whether l_prime is generated by vectors of norm below the dual minimum of l."""
    g = smallest_generating_norm(l_prime)
    dm = min_dual_norm(l)
    return Prop2Report(g < dm, dm, g)


@dataclass(frozen=True)
class Prop3Report:
    unimodular_ok: bool
    coprime_ok: bool
    union_ok: bool
    minimality_ok: bool
    redundant_parts: tuple[int, ...]
    criterion_set: tuple[GramMatrix, ...]

    @property
    def passed(self) -> bool:
        return self.unimodular_ok and self.coprime_ok and self.union_ok and self.minimality_ok

    def to_dict(self) -> dict:
        return {
            "unimodular_ok": self.unimodular_ok,
            "coprime_ok": self.coprime_ok,
            "union_ok": self.union_ok,
            "minimality_ok": self.minimality_ok,
            "redundant_parts": list(self.redundant_parts),
            "criterion_set": [gram_to_text(g) for g in self.criterion_set],
            "passed": self.passed,
        }


def check_prop3(family: PartitionFamily) -> Prop3Report:
    """Verify the coprime-unimodular covering-family construction.

    Checks: every ground member unimodular; ground pairwise coprime; the parts
    cover the ground set; and removing any part loses some member (otherwise
    that part is redundant and the induced set is not minimal).
    """
    members = family.ground.members
    unimodular_ok = all(det(g) == 1 for g in members)
    coprime_ok = all(
        coprime(a, b) for a, b in itertools.combinations(members, 2)
    )
    full = set(range(len(members)))
    union_ok = set().union(*[set(p) for p in family.parts]) == full if family.parts else not full
    redundant = tuple(
        i for i, part in enumerate(family.parts)
        if set().union(*[set(p) for j, p in enumerate(family.parts) if j != i], set()) == full
    )
    criterion_set = tuple(
        direct_sum_all(members[i] for i in part) for part in family.parts
    )
    return Prop3Report(
        unimodular_ok, coprime_ok, union_ok, not redundant, redundant, criterion_set
    )
