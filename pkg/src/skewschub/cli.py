"""Command line interface: ``skewschub compute | tableaux | verify``.

Exit codes: 0 ok, 1 verification mismatch, 2 parse error, 3 precondition failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from . import nilcoxeter as nc
from . import tableaux as tb
from .poly import Polynomial, scale_pow2
from .shapes import (
    Shape,
    TypedPartition,
    _parts,
    compatible_pairs,
    parse_partition,
    skew_element,
    skew_pairs,
)
from .weyl import GroupTag, SignedPermutation, format_element, parse_element, parse_word

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3

TAGS = {"A": GroupTag.A, "B": GroupTag.BC, "C": GroupTag.BC, "D": GroupTag.D}


class ParseError(ValueError):
    pass


@dataclass
class Request:
    letter: str
    tag: GroupTag
    element: Optional[SignedPermutation]
    outer: Optional[Shape]
    inner: Optional[Shape]
    k: Optional[int]
    n: Optional[int]
    m: int


def _typed(parts, k: int, type_: Optional[int], what: str) -> TypedPartition:
    if type_ is None:
        if k in parts:
            raise ParseError(f"{what} has a part equal to k={k}; give its type (1 or 2)")
        type_ = 0
    return TypedPartition(parts, k, type_)


def parse_request(args: argparse.Namespace) -> Request:
    """Turn parsed flags into a Request; raises ParseError on malformed input."""
    letter = args.type.upper()
    if letter not in TAGS:
        raise ParseError(f"unknown type {args.type!r}")
    tag = TAGS[letter]
    try:
        element = outer = inner = None
        word = getattr(args, "word", None)
        elem = getattr(args, "element", None)
        if word is not None:
            element = SignedPermutation.from_word(parse_word(word), tag)
        elif elem is not None:
            element = parse_element(elem, tag)
        elif args.shape is not None:
            if args.k is None:
                raise ParseError("--shape needs --k")
            lam = parse_partition(args.shape)
            mu = parse_partition(args.inner_shape or "")
            if tag is GroupTag.D:
                outer = _typed(lam, args.k, args.shape_type, "--shape")
                inner = _typed(mu, args.k, args.inner_type, "--inner-shape")
            else:
                outer, inner = lam, mu
        else:
            raise ParseError("give one of --word, --element or --shape")
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from e
    if args.z < 0 or (args.n is not None and args.n < 1):
        raise ParseError("--z must be >= 0 and --n >= 1")
    return Request(letter, tag, element, outer, inner, args.k, args.n, args.z)


def _pair_for(req: Request) -> tuple[Shape, Shape, int]:
    """A compatible pair (and k) realizing the requested element."""
    if req.outer is not None:
        return req.outer, req.inner, req.k
    w = req.element
    n = req.n or w.size
    if req.k is not None:
        ks = [req.k]
    elif req.tag is GroupTag.A:
        ks = list(range(1, n + 1))
    else:
        ks = list(range(1 if req.tag is GroupTag.D else 0, n + 1))
    for k in ks:
        side = n + k
        pairs = skew_pairs(w, k, (side,) * side)
        if pairs:
            return pairs[0][0], pairs[0][1], k
    raise ValueError(f"{format_element(w)} is not skew within the search bound")


def _element(req: Request) -> SignedPermutation:
    if req.element is not None:
        return req.element
    return skew_element(req.outer, req.inner, req.k, req.tag)


def compute(req: Request, method: str, stanley: bool = False) -> tuple[SignedPermutation, int, Polynomial]:
    w = _element(req)
    n = req.n if req.n is not None else max(w.size, 2 if req.tag is GroupTag.D else 1)
    if not w.fits(n):
        raise ValueError(f"{format_element(w)} does not lie in rank {n}")
    if stanley:
        if req.tag is GroupTag.A:
            raise ValueError("Stanley functions are available for types B, C, D")
        if method == "nilcoxeter":
            p = nc.stanley_F(w, req.m, n) if req.tag is GroupTag.BC else nc.stanley_E(w, req.m, n)
        else:
            lam, mu, k = _pair_for(req)
            p = tb.stanley_F_tableau(lam, mu, k, req.m) if req.tag is GroupTag.BC else tb.stanley_E_tableau(lam, mu, req.m)
    elif method == "nilcoxeter":
        if req.tag is GroupTag.A:
            p = nc.schubert_A(w, n)
        elif req.tag is GroupTag.D:
            p = nc.schubert_D(w, n, req.m)
        else:
            p = nc.schubert_C(w, n, req.m)
    else:
        lam, mu, k = _pair_for(req)
        if req.tag is GroupTag.A:
            p = tb.tableau_schur(lam, mu, k, n)
        elif req.tag is GroupTag.D:
            p = tb.tableau_eta(lam, mu, k, n, req.m)
        else:
            p = tb.tableau_theta(lam, mu, k, n, req.m)
    if req.letter == "B":
        p = scale_pow2(p, -w.neg_count())
    return w, n, p


# subcommands

def cmd_compute(args: argparse.Namespace, out) -> int:
    req = parse_request(args)
    w, n, p = compute(req, args.method, args.stanley)
    if args.format == "json":
        obj = {"type": req.letter, "element": list(w.window), "n": n, "z": req.m,
               "method": args.method, "stanley": bool(args.stanley), "polynomial": p.to_json_obj()}
        print(json.dumps(obj, sort_keys=True), file=out)
    else:
        print(str(p), file=out)
    return EXIT_OK


def _enumerate(req: Request, n: int):
    lam, mu, k = _pair_for(req)
    if req.tag is GroupTag.A:
        return tb.enumerate_bitableaux(lam, mu, k, n)
    if req.tag is GroupTag.D:
        return tb.enumerate_typed_tritableaux(lam, mu, k, n, req.m)
    return tb.enumerate_k_tritableaux(lam, mu, k, n, req.m)


def cmd_tableaux(args: argparse.Namespace, out) -> int:
    req = parse_request(args)
    w = _element(req)
    n = req.n if req.n is not None else max(w.size, 2 if req.tag is GroupTag.D else 1)
    tabs = list(_enumerate(req, n))
    marked = tb.Kind.UNMARKED if req.tag is GroupTag.A else tb.Kind.DOUBLE_PRIMED
    second = [t for t in tabs if t.has_kind(marked)]
    hist = Counter(t.n_stat for t in second)
    summary = {
        "total": len(tabs),
        "without_second_alphabet": len(tabs) - len(second),
        "with_second_alphabet": len(second),
        "n_histogram": {str(k): hist[k] for k in sorted(hist, reverse=True)},
    }
    if args.format == "json":
        obj = {"summary": summary}
        if not args.count_only:
            obj["tableaux"] = [{"rows": t.render().split("\n") if t.filling else [],
                                "n": t.n_stat, "weight": t.weight.to_json_obj()} for t in tabs]
        print(json.dumps(obj, sort_keys=True), file=out)
        return EXIT_OK
    if not args.count_only:
        for t in tabs:
            print(f"n={t.n_stat} weight={t.weight}", file=out)
            print(t.render() if t.filling else "(empty)", file=out)
            print(file=out)
    label = "unmarked" if req.tag is GroupTag.A else "double-primed"
    print(f"total: {len(tabs)}", file=out)
    print(f"without {label} letters: {summary['without_second_alphabet']}", file=out)
    print(f"with {label} letters: {summary['with_second_alphabet']}", file=out)
    hist_text = ", ".join(f"n={k}: {v}" for k, v in summary["n_histogram"].items())
    print(f"n(U) among tableaux with {label} letters: {hist_text or '-'}", file=out)
    return EXIT_OK


@dataclass(frozen=True)
class Instance:
    letter: str
    k: int
    n: int
    m: int
    outer: Shape
    inner: Shape

    def key(self):
        size = sum(_parts(self.outer)) + sum(_parts(self.inner))
        return (size, self.n, self.m, self.k, str(self.outer), str(self.inner))

    def describe(self) -> str:
        k_note = "m" if self.letter == "A" else "k"
        return (f"type {self.letter}: outer={self.outer} inner={self.inner} "
                f"{k_note}={self.k} n={self.n} z={self.m}")


def verification_instances(letter: str, bound: Sequence[int], kmax: int, nmax: int, zmax: int):
    tag = TAGS[letter]
    if tag is GroupTag.A:
        ks, ms = range(1, kmax + 1), [0]
    elif tag is GroupTag.D:
        ks, ms = range(1, kmax + 1), range(1, zmax + 1)
    else:
        ks, ms = range(0, kmax + 1), range(1, zmax + 1)
    for k in ks:
        pairs = list(compatible_pairs(bound, k, tag))
        for n in range(2 if tag is GroupTag.D else 1, nmax + 1):
            for lam, mu in pairs:
                if not skew_element(lam, mu, k, tag).fits(n):
                    continue
                for m in ms:
                    yield Instance(letter, k, n, m, lam, mu)


def check_instance(inst: Instance) -> bool:
    tag = TAGS[inst.letter]
    w = skew_element(inst.outer, inst.inner, inst.k, tag)
    if tag is GroupTag.A:
        return tb.tableau_schur(inst.outer, inst.inner, inst.k, inst.n) == nc.schubert_A(w, inst.n)
    if tag is GroupTag.D:
        return tb.tableau_eta(inst.outer, inst.inner, inst.k, inst.n, inst.m) == nc.schubert_D(w, inst.n, inst.m)
    return tb.tableau_theta(inst.outer, inst.inner, inst.k, inst.n, inst.m) == nc.schubert_C(w, inst.n, inst.m)


def verify(letters: Sequence[str], bound: Sequence[int], kmax: int, nmax: int, zmax: int,
           kmax_a: Optional[int] = None, progress=None) -> tuple[dict[str, int], list[Instance]]:
    counts: dict[str, int] = {}
    failures: list[Instance] = []
    for letter in letters:
        kk = kmax_a if (letter == "A" and kmax_a is not None) else kmax
        n_inst = 0
        for inst in verification_instances(letter, bound, kk, nmax, zmax):
            n_inst += 1
            if not check_instance(inst):
                failures.append(inst)
        counts[letter] = n_inst
        if progress is not None:
            print(f"type {letter}: {n_inst} instances checked", file=progress)
    failures.sort(key=Instance.key)
    return counts, failures


def cmd_verify(args: argparse.Namespace, out) -> int:
    try:
        bound = parse_partition(args.bound)
        letters = [t.strip().upper() for t in args.types.split(",") if t.strip()]
        if any(t not in ("A", "C", "D") for t in letters):
            raise ParseError("--types takes a comma list drawn from A, C, D")
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from e
    counts, failures = verify(letters, bound, args.kmax, args.nmax, args.zmax,
                              kmax_a=args.kmax_a, progress=sys.stderr)
    total = sum(counts.values())
    for letter in letters:
        print(f"type {letter}: {counts[letter]} instances", file=out)
    if failures:
        print(f"MISMATCH in {len(failures)} of {total} instances; smallest counterexample:", file=out)
        print(failures[0].describe(), file=out)
        return EXIT_MISMATCH
    if not any(bound):
        print(f"OK, per-type identity checks ({total} instances)", file=out)
    else:
        print(f"OK, {total} instances", file=out)
    return EXIT_OK


# argument parsing

def _add_target(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, help="A, B, C or D")
    p.add_argument("--word", help="reduced word, e.g. 1,2 or B,2,1 (B is the type D box generator)")
    p.add_argument("--element", help="window of a signed permutation, e.g. 3,-2,1")
    p.add_argument("--shape", help="outer partition, e.g. 3,1")
    p.add_argument("--shape-type", type=int, choices=(0, 1, 2), help="type of the outer shape (type D)")
    p.add_argument("--inner-shape", help="inner partition (default empty)")
    p.add_argument("--inner-type", type=int, choices=(0, 1, 2), help="type of the inner shape (type D)")
    p.add_argument("--k", type=int, help="k (or m for type A)")
    p.add_argument("--n", type=int, help="rank n")
    p.add_argument("--z", type=int, default=2, help="number of z variables (default 2)")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewschub", description="Skew Schubert polynomials of classical types.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute a Schubert polynomial or Stanley function")
    _add_target(p)
    p.add_argument("--method", choices=("nilcoxeter", "tableau"), default="tableau")
    p.add_argument("--stanley", action="store_true", help="Stanley function F_w / E_w instead")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("tableaux", help="list the tableaux of a skew shape")
    _add_target(p)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("verify", help="compare tableau sums with nilCoxeter coefficients")
    p.add_argument("--bound", default="4,3,2,1", help="outer bounding partition")
    p.add_argument("--types", default="A,C,D")
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--kmax-a", type=int, default=3, help="largest m for type A")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--zmax", type=int, default=2)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    try:
        return args.func(args, out)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
