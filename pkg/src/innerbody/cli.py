"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Callable, Iterator, List, Optional, Tuple

from . import analysis as an
from .corpus import NAMED_BODIES, SplitMix64, random_polytope, random_pythagorean_polytope
from .exactnum import NotPythagorean, rat_parse, rat_str
from .gauge import BallGauge, Gauge, PolytopeGauge
from .parallel import form_body, inner_parallel, inradius, minkowski_sum, outer_body
from .polytope import Polytope, dumps, loads, surface_area, volume

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CHECK_KINDS = ("n2-equality", "sy", "larson-cond", "larson-bound", "rp", "homothety", "lemma-suite")


class UsageError(Exception):
    pass


# -- input --------------------------------------------------------------------------


def load_body(spec: str) -> Polytope:
    """A named built-in body or a polytope JSON file."""
    if spec in NAMED_BODIES:
        return NAMED_BODIES[spec]()
    try:
        with open(spec, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {spec!r}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid polytope in {spec!r}: {exc}") from None


def load_gauge(spec: str, dim: int) -> Gauge:
    if spec == "ball":
        if dim not in (2, 3):
            raise UsageError("the ball gauge needs dimension 2 or 3")
        return BallGauge(dim)
    body = load_body(spec)
    if body.dim != dim:
        raise UsageError(f"gauge dimension {body.dim} differs from body dimension {dim}")
    try:
        return PolytopeGauge(body)
    except ValueError as exc:
        raise UsageError(f"invalid gauge: {exc}") from None


def parse_rational(text: str) -> Fraction:
    try:
        return rat_parse(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _fmt(x) -> str:
    if isinstance(x, (int, Fraction)):
        return rat_str(x)
    return format(float(x), ".17g")


def _fmt_vec(v) -> str:
    return "(" + ", ".join(_fmt(c) for c in v) + ")"


class Output:
    """Collects text and writes it once, to ``--out`` or stdout."""

    def __init__(self, path: Optional[str]):
        self.path = path
        self.parts: List[str] = []

    def line(self, text: str = "") -> None:
        self.parts.append(text + "\n")

    def raw(self, text: str) -> None:
        self.parts.append(text)

    def flush(self) -> None:
        text = "".join(self.parts)
        if self.path is None:
            sys.stdout.write(text)
        else:
            with open(self.path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)


# -- body commands ----------------------------------------------------------------


def cmd_info(args, out: Output) -> int:
    K = load_body(args.body)
    out.line(f"dim: {K.dim}")
    out.line(f"affine_dim: {K.affine_dim}")
    out.line(f"vertices: {len(K.vertices)}")
    for v in K.vertices:
        out.line(f"  {_fmt_vec(v)}")
    out.line(f"halfspaces: {len(K.halfspaces)}")
    for h in K.halfspaces:
        out.line(f"  {_fmt_vec(h.normal)} . x <= {_fmt(h.offset)}")
    out.line(f"volume: {_fmt(volume(K))}")
    if K.is_full_dimensional:
        out.line(f"surface_area: {_fmt(surface_area(K))}")
        E = load_gauge(args.gauge, K.dim)
        ir = inradius(K, E)
        out.line(f"inradius: {_fmt(ir.r)}")
        out.line("kernel: " + ", ".join(_fmt_vec(v) for v in ir.kernel.vertices))
    return EXIT_OK


def _emit_body(P: Polytope, out: Output) -> int:
    out.line(dumps(P))
    return EXIT_OK


def cmd_erode(args, out: Output) -> int:
    K = load_body(args.body)
    return _emit_body(inner_parallel(K, load_gauge(args.gauge, K.dim), args.lam), out)


def cmd_form_body(args, out: Output) -> int:
    K = load_body(args.body)
    return _emit_body(form_body(K, load_gauge(args.gauge, K.dim)), out)


def cmd_outer(args, out: Output) -> int:
    K = load_body(args.body)
    return _emit_body(outer_body(K, load_gauge(args.gauge, K.dim), args.mu), out)


def cmd_minkowski_sum(args, out: Output) -> int:
    K, L = load_body(args.body), load_body(args.other)
    if K.dim != L.dim:
        raise UsageError("dimension mismatch")
    return _emit_body(minkowski_sum(K, L), out)


def cmd_sweep(args, out: Output) -> int:
    K = load_body(args.body)
    E = load_gauge(args.gauge, K.dim)
    if not 0 <= args.i < args.j < K.dim:
        raise UsageError(f"need 0 <= i < j < {K.dim}")
    if args.extend is not None and not isinstance(E, PolytopeGauge):
        raise UsageError("--extend needs a polytopal gauge")
    rep = an.sweep(
        K, E, args.i, args.j, args.grid, args.tol,
        extend_to=args.extend, extend_steps=args.extend_steps if args.extend else 0,
        with_conditions=args.conditions,
    )
    out.raw(rep.to_csv())
    ok = rep.verdict(args.mode)
    word = "non-increasing" if args.mode == "quotient" else "non-decreasing"
    print(f"{args.mode}: {word if ok else 'NOT ' + word}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_repro(args, out: Output) -> int:
    certs = an.reproduce_counterexample()
    for c in certs:
        out.line(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}")
        out.line(f"       {c.detail}")
    ok = all(c.passed for c in certs)
    out.line("counterexample reproduced" if ok else "counterexample NOT reproduced")
    return EXIT_OK if ok else EXIT_FAIL


# -- checks -------------------------------------------------------------------------


def _bodies(args, dim: int) -> Iterator[Tuple[str, Polytope, Gauge]]:
    """The file/named body, or ``--random N`` seeded bodies.

    Random bodies under the ball gauge come from the Pythagorean-normal corpus
    so that every support value stays exact.
    """
    if args.random:
        rng = SplitMix64(args.seed)
        ball = args.gauge == "ball"
        E = None if ball else load_gauge(args.gauge, dim)
        for k in range(args.random):
            if ball:
                K = random_pythagorean_polytope(rng, dim, n_facets=6 if dim == 2 else 10)
                yield f"random[{k}]", K, BallGauge(dim)
            else:
                yield f"random[{k}]", random_polytope(rng, dim), E
    else:
        if args.body is None:
            raise UsageError("a body (file or name) or --random N is required")
        K = load_body(args.body)
        yield args.body, K, load_gauge(args.gauge, K.dim)


def _run_over(args, dim: int, fn: Callable[[str, Polytope, Gauge, Output], bool], out: Output) -> int:
    total = passed = 0
    for name, K, E in _bodies(args, dim):
        total += 1
        passed += bool(fn(name, K, E, out))
    out.line(f"{passed}/{total} passed")
    return EXIT_OK if passed == total else EXIT_FAIL


def _grid_lams(K, E, grid):
    return an.lambda_grid(inradius(K, E).r, grid)


def check_n2_equality(name, K, E, out, args) -> bool:
    if K.dim != 2:
        raise UsageError("n2-equality needs a planar body")
    bad = [lam for lam in _grid_lams(K, E, args.grid) if not an.planar_equality(K, E, lam)]
    if bad:
        note = "" if E.is_regular() else " (outside the hypotheses: gauge not regular)"
        out.line(f"{name}: FAIL equality at lambda = " + ", ".join(_fmt(l) for l in bad) + note)
    else:
        out.line(f"{name}: pass")
    return not bad


def check_sy(name, K, E, out, args) -> bool:
    lams = [args.lam] if args.lam is not None else _grid_lams(K, E, args.grid)
    ok = True
    for lam in lams:
        res = an.check_sy_condition(K, E, lam)
        out.line(f"{name} lambda={_fmt(lam)}: holds={res.holds} inclusion={res.inclusion_holds} "
                 f"equality={res.equality}")
        # a violation of the implication is the only mathematical failure
        ok &= res.inclusion_holds or not (res.holds and E.is_regular())
    return ok


def check_larson_cond(name, K, E, out, args) -> bool:
    res = an.check_larson_condition(K, E)
    out.line(f"{name}: U(K+K*) == U(K): {res}")
    return res


def check_larson_bound(name, K, E, out, args) -> bool:
    rep = an.larson_bound_check(K, E, args.grid, args.tol)
    ok = rep.all_contained and rep.all_bounds
    out.line(f"{name}: inradius={_fmt(rep.inradius)} center={_fmt_vec(rep.center)} "
             f"containment={rep.all_contained} bound={rep.all_bounds} equality={rep.all_equal}")
    return ok


def check_rp(name, K, E, out, args) -> bool:
    res = an.class_rp_diagnostic(K, E, args.p, args.grid, args.tol)
    where = "" if res.worst_at is None else f" at lambda={_fmt(res.worst_at[0])}, i={res.worst_at[1]}"
    out.line(f"{name}: member_plausible={res.member_plausible} worst_gap={_fmt(res.worst_gap)}{where} "
             f"ordering={res.ordering_ok}")
    return res.member_plausible


def check_homothety(name, K, E, out, args) -> bool:
    if args.other is None:
        raise UsageError("homothety needs a second body (--other)")
    L = load_body(args.other)
    h = an.is_homothetic(K, L)
    if h is None:
        out.line(f"{name}: not homothetic")
        return False
    out.line(f"{name}: homothetic, scale={_fmt(h.scale)} translation={_fmt_vec(h.translation)}")
    return True


def check_lemma_suite(name, K, E, out, args) -> bool:
    if args.other is not None:
        L = load_body(args.other)
    elif isinstance(E, PolytopeGauge):
        L = E.body
    else:
        L = form_body(K, E)
    lams = _grid_lams(K, E, args.grid)
    res = an.lemma_suite(K, E, L, lams)
    out.line(f"{name}: " + " ".join(f"({k})={v}" for k, v in res.items()))
    return all(res.values())


CHECKS = {
    "n2-equality": check_n2_equality,
    "sy": check_sy,
    "larson-cond": check_larson_cond,
    "larson-bound": check_larson_bound,
    "rp": check_rp,
    "homothety": check_homothety,
    "lemma-suite": check_lemma_suite,
}


def cmd_check(args, out: Output) -> int:
    fn = CHECKS[args.kind]
    dim = 2 if args.kind == "n2-equality" else args.dim
    if args.kind == "rp" and args.p is None:
        raise UsageError("rp needs --p")
    return _run_over(args, dim, lambda n, K, E, o: fn(n, K, E, o, args), out)


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="innerbody", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, body=True, gauge=True):
        if body:
            p.add_argument("body", help="polytope JSON file or built-in name (" + ", ".join(NAMED_BODIES) + ")")
        if gauge:
            p.add_argument("--gauge", default="ball", help="'ball', a JSON file or a built-in name")
        p.add_argument("--out", default=None, help="output file (default stdout)")

    common(sub.add_parser("info", help="representations, volume, surface area, inradius"))

    p = sub.add_parser("erode", help="inner parallel body K_lambda")
    common(p)
    p.add_argument("--lambda", dest="lam", type=parse_rational, required=True)

    common(sub.add_parser("form-body", help="form body K*"))

    p = sub.add_parser("outer", help="outer construction K(mu)")
    common(p)
    p.add_argument("--mu", type=parse_rational, required=True)

    p = sub.add_parser("minkowski-sum", help="K + L")
    common(p, gauge=False)
    p.add_argument("other")

    p = sub.add_parser("sweep", help="quotient/deficit table over a lambda grid (CSV)")
    common(p)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--mode", choices=("quotient", "deficit"), default="quotient")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--extend", type=parse_rational, default=None, metavar="MU",
                   help="also sweep K + lambda E for 0 < lambda <= MU (polytopal gauge)")
    p.add_argument("--extend-steps", type=int, default=16)
    p.add_argument("--conditions", action="store_true", help="add per-lambda condition flags")

    p = sub.add_parser("check", help="run a checker on a body or a seeded random corpus")
    p.add_argument("kind", choices=CHECK_KINDS)
    p.add_argument("body", nargs="?", default=None)
    p.add_argument("--other", default=None, help="second body (homothety, lemma-suite)")
    p.add_argument("--gauge", default="ball")
    p.add_argument("--lambda", dest="lam", type=parse_rational, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--grid", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--random", type=int, default=0, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=int, choices=(2, 3), default=3, help="dimension of random bodies")
    p.add_argument("--out", default=None)

    p = sub.add_parser("repro", help="certificates for the polytope P counterexample")
    p.add_argument("--out", default=None)
    return parser


COMMANDS = {
    "info": cmd_info,
    "erode": cmd_erode,
    "form-body": cmd_form_body,
    "outer": cmd_outer,
    "minkowski-sum": cmd_minkowski_sum,
    "sweep": cmd_sweep,
    "check": cmd_check,
    "repro": cmd_repro,
}


RATIONAL_FLAGS = ("--lambda", "--mu", "--extend")


def _join_rational_flags(argv: List[str]) -> List[str]:
    """``--lambda -1/2`` -> ``--lambda=-1/2`` so argparse does not read a flag."""
    out, k = [], 0
    while k < len(argv):
        if argv[k] in RATIONAL_FLAGS and k + 1 < len(argv):
            out.append(f"{argv[k]}={argv[k + 1]}")
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_join_rational_flags(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Output(args.out)
    try:
        code = COMMANDS[args.command](args, out)
    except (UsageError, NotPythagorean) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # out-of-range lambda, invalid indices, empty erosions
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        out.flush()
    except OSError as exc:
        print(f"error: cannot write output: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    return code


if __name__ == "__main__":
    sys.exit(main())
