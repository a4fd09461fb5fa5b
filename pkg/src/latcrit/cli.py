"""Command-line client for the lattice toolkit.

Verbs mirror the service endpoints and run in-process by default; pass
--server URL to send the same requests to a running instance instead.
Lattice arguments are expressions ("diag(1,1,2)", "E8 + Zn(1)") or @file
paths in the Gram text format.

Exit status: 0 on success or verified-within-space, 1 when a counterexample
was found or a check failed, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .core import LatticeError
from .service import handlers
from .service import schemas as s

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _lattice_arg(text: str) -> str:
    """Resolve @file arguments to their contents; pass expressions through."""
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            return fh.read()
    return text


def _split_set(text: str) -> list[str]:
    """';'-separated lattice list (',' belongs to diag(...))."""
    items = [part.strip() for part in text.split(";") if part.strip()]
    if not items:
        raise LatticeError("empty lattice list")
    return [_lattice_arg(t) for t in items]


def _call(args, endpoint: str, request_model, local: Callable, response_model):
    """Run a request locally or against --server, returning the response model."""
    if args.server:
        import httpx

        url = args.server.rstrip("/") + "/v1/" + endpoint
        resp = httpx.post(url, json=request_model.model_dump(), timeout=None)
        if resp.status_code != 200:
            raise LatticeError(f"server error {resp.status_code}: {resp.text}")
        return response_model.model_validate(resp.json())
    return local(request_model)


def _emit(args, model, text: str) -> None:
    if args.json:
        print(json.dumps(model.model_dump(), indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_info(args) -> int:
    req = s.InfoRequest(lattice=_lattice_arg(args.lattice))
    resp = _call(args, "info", req, handlers.info, s.InfoResponse)
    text = (
        f"rank {resp.rank}, determinant {resp.det}, min norm {resp.min_norm}, "
        f"min dual norm {resp.min_dual_norm}"
        + (", unimodular" if resp.unimodular else "")
        + "\n" + resp.gram.rstrip()
    )
    _emit(args, resp, text)
    return EXIT_OK


def _cmd_shortvec(args) -> int:
    req = s.ShortVecRequest(lattice=_lattice_arg(args.lattice), bound=args.bound)
    resp = _call(args, "shortvec", req, handlers.shortvec, s.ShortVecResponse)
    lines = [
        f"{resp.count} vectors of norm <= {resp.bound} up to sign "
        f"({resp.count_both_signs} counting both signs)"
    ]
    lines += [f"  norm {e.norm}: {tuple(e.coords)}" for e in resp.vectors]
    _emit(args, resp, "\n".join(lines))
    return EXIT_OK


def _cmd_embed(args) -> int:
    req = s.EmbedRequest(
        target=_lattice_arg(args.target), source=_lattice_arg(args.source)
    )
    resp = _call(args, "embed", req, handlers.embed, s.EmbedResponse)
    if resp.found:
        rows = "\n".join(" ".join(str(x) for x in row) for row in resp.matrix)
        _emit(args, resp, "embedding found; image of source basis as columns:\n" + rows)
        return EXIT_OK
    _emit(args, resp, "no embedding exists (search was exhaustive)")
    return EXIT_CHECK_FAILED


def _cmd_complement(args) -> int:
    vectors = [[int(tok) for tok in v.split(",")] for v in args.vector]
    req = s.ComplementRequest(lattice=_lattice_arg(args.lattice), vectors=vectors)
    resp = _call(args, "complement", req, handlers.complement, s.ComplementResponse)
    _emit(
        args, resp,
        f"orthogonal complement: rank {resp.rank}, determinant {resp.det}\n"
        + resp.gram.rstrip(),
    )
    return EXIT_OK


def _cmd_dual(args) -> int:
    req = s.DualRequest(lattice=_lattice_arg(args.lattice))
    resp = _call(args, "dual", req, handlers.dual, s.DualResponse)
    lines = ["dual Gram matrix" + (" (integral)" if resp.integral else "")]
    lines += ["  " + " ".join(row) for row in resp.entries]
    _emit(args, resp, "\n".join(lines))
    return EXIT_OK


def _cmd_decompose(args) -> int:
    req = s.DecomposeRequest(lattice=_lattice_arg(args.lattice))
    resp = _call(args, "decompose", req, handlers.decompose, s.DecomposeResponse)
    lines = [
        "indecomposable"
        if resp.indecomposable
        else f"{len(resp.summands)} indecomposable summands"
    ]
    for i, piece in enumerate(resp.summands):
        lines.append(f"summand {i}: rank {piece.rank}, det {piece.det}")
        lines += ["  " + ln for ln in piece.gram.rstrip().splitlines()[1:]]
    _emit(args, resp, "\n".join(lines))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    req = s.EnumerateRequest(
        rank=args.rank, max_diag=args.max_diag, max_det=args.max_det,
        count_only=args.count_only,
    )
    resp = _call(args, "enumerate", req, handlers.enumerate_space, s.EnumerateResponse)
    lines = [f"{resp.count} isometry classes"]
    lines += [g.rstrip().replace("\n", " | ") for g in resp.grams]
    _emit(args, resp, "\n".join(lines))
    return EXIT_OK


def _space_model(args) -> s.SpaceModel:
    return s.SpaceModel(rank=args.rank, max_diag=args.max_diag, max_det=args.max_det)


def _cmd_check_criterion(args) -> int:
    req = s.CheckCriterionRequest(
        base=_lattice_arg(args.a),
        members=_split_set(args.set),
        space=_space_model(args),
        shards=args.shards,
        shard=args.shard,
    )
    resp = _call(args, "check-criterion", req, handlers.criterion, s.CriterionResponse)
    if resp.counterexample is None:
        _emit(args, resp, f"{resp.verdict}: {resp.classes_checked} classes checked")
        return EXIT_OK
    text = (
        f"{resp.verdict} after {resp.classes_checked} classes; "
        f"the following form represents the set but not the base form:\n"
        + resp.counterexample.gram.rstrip()
    )
    _emit(args, resp, text)
    return EXIT_CHECK_FAILED


def _cmd_check_minimality(args) -> int:
    req = s.CheckMinimalityRequest(
        base=_lattice_arg(args.a),
        members=_split_set(args.set),
        witnesses=_split_set(args.witnesses) if args.witnesses else [],
        space=_space_model(args),
    )
    resp = _call(args, "check-minimality", req, handlers.minimality, s.MinimalityResponse)
    lines = []
    for e in resp.entries:
        head = e.dropped.rstrip().replace("\n", " | ")
        if e.witness is None:
            lines.append(f"drop [{head}]: no witness within the space")
        else:
            lines.append(
                f"drop [{head}]: witness ({e.witness_origin}) "
                + e.witness.rstrip().replace("\n", " | ")
            )
    lines.append("minimal within the searched pool" if resp.all_witnessed
                 else "some drop has no witness; minimality not established here")
    _emit(args, resp, "\n".join(lines))
    return EXIT_OK if resp.all_witnessed else EXIT_CHECK_FAILED


def _cmd_check_prop2(args) -> int:
    req = s.CheckProp2Request(
        l=_lattice_arg(args.l), l_prime=_lattice_arg(args.l_prime)
    )
    resp = _call(args, "check-prop2", req, handlers.prop2, s.Prop2Response)
    _emit(
        args, resp,
        f"smallest generating norm bound {resp.generating_bound}, "
        f"dual minimal norm {resp.dual_min}: hypothesis "
        + ("holds" if resp.holds else "fails"),
    )
    return EXIT_OK if resp.holds else EXIT_CHECK_FAILED


def _cmd_check_prop3(args) -> int:
    parts = [[int(tok) for tok in part.split(",")] for part in args.parts.split(";")]
    req = s.CheckProp3Request(ground=_split_set(args.ground), parts=parts)
    resp = _call(args, "check-prop3", req, handlers.prop3, s.Prop3Response)
    lines = [
        f"unimodular: {'ok' if resp.unimodular_ok else 'FAIL'}",
        f"pairwise coprime: {'ok' if resp.coprime_ok else 'FAIL'}",
        f"parts cover the ground set: {'ok' if resp.union_ok else 'FAIL'}",
        f"no redundant part: {'ok' if resp.minimality_ok else 'FAIL (' + str(resp.redundant_parts) + ')'}",
        f"induced criterion set has {len(resp.criterion_set)} members",
    ]
    _emit(args, resp, "\n".join(lines))
    return EXIT_OK if resp.passed else EXIT_CHECK_FAILED


def _cmd_verify_paper(args) -> int:
    req = s.VerifyRequest(slow=args.slow)
    resp = _call(args, "verify-paper", req, handlers.verify, s.VerifyResponse)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in resp.results
    ]
    lines.append("all checks passed" if resp.passed else "SOME CHECKS FAILED")
    _emit(args, resp, "\n".join(lines))
    return EXIT_OK if resp.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lat",
        description="Exact toolkit for positive-definite integral lattices.",
    )
    parser.add_argument("--json", action="store_true", help="emit the structured report")
    parser.add_argument("--server", metavar="URL", default=None,
                        help="send the request to a running service instead")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("info", help="rank, determinant, minimal norms")
    p.add_argument("lattice")
    p.set_defaults(fn=_cmd_info)

    p = sub.add_parser("shortvec", help="all vectors of norm up to a bound")
    p.add_argument("lattice")
    p.add_argument("--bound", default="1", help="norm bound, integer or rational")
    p.set_defaults(fn=_cmd_shortvec)

    p = sub.add_parser("embed", help="find an embedding of --source into --target")
    p.add_argument("--target", required=True)
    p.add_argument("--source", required=True)
    p.set_defaults(fn=_cmd_embed)

    p = sub.add_parser("complement", help="orthogonal complement of a sublattice")
    p.add_argument("lattice")
    p.add_argument("--vector", action="append", required=True,
                   help="sublattice basis vector as comma-separated integers (repeatable)")
    p.set_defaults(fn=_cmd_complement)

    p = sub.add_parser("dual", help="exact dual Gram matrix")
    p.add_argument("lattice")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("decompose", help="indecomposable orthogonal summands")
    p.add_argument("lattice")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("enumerate", help="isometry classes within bounds")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-diag", type=int, required=True)
    p.add_argument("--max-det", type=int, default=None)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("check-criterion",
                       help="scan a space for forms representing the set but not --a")
    p.add_argument("--a", required=True, help="the base form")
    p.add_argument("--set", required=True, help="';'-separated candidate criterion set")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-diag", type=int, required=True)
    p.add_argument("--max-det", type=int, default=None)
    p.add_argument("--shards", type=int, default=1,
                   help="partition the scan for external parallel drivers")
    p.add_argument("--shard", type=int, default=0)
    p.set_defaults(fn=_cmd_check_criterion)

    p = sub.add_parser("check-minimality",
                       help="witness that no member of the set can be dropped")
    p.add_argument("--a", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--witnesses", default="",
                   help="';'-separated witness candidates tried before the space scan")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-diag", type=int, required=True)
    p.add_argument("--max-det", type=int, default=None)
    p.set_defaults(fn=_cmd_check_minimality)

    p = sub.add_parser("check-prop2",
                       help="generated-below-dual-minimum hypothesis for a pair")
    p.add_argument("--l", required=True, help="the lattice whose dual minimum matters")
    p.add_argument("--l-prime", required=True, help="the lattice that must be generated")
    p.set_defaults(fn=_cmd_check_prop2)

    p = sub.add_parser("check-prop3",
                       help="coprime unimodular covering-family construction")
    p.add_argument("--ground", required=True, help="';'-separated ground lattices")
    p.add_argument("--parts", required=True,
                   help="parts as ';'-separated comma-lists of ground indices")
    p.set_defaults(fn=_cmd_check_prop3)

    p = sub.add_parser("verify-paper", help="run the built-in verification suite")
    p.add_argument("--slow", action="store_true",
                   help="include the minutes-scale Leech shell checks "
                        "(also enabled by LAT_SLOW_TESTS=1)")
    p.set_defaults(fn=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
