"""Text formats and the command-line interface.

Graph files (.sg) are line-oriented:

    # comment
    sg <n>
    e <u> <v> <+|->
    v <idx> <name>        (optional display name; parsed, validated, dropped)

Coloring files hold one (p,q)-coloring:

    coloring <p>/<q>
    <vertex> <color>      (every vertex exactly once)

Exit codes: 0 success/true, 1 parse or usage error, 2 infeasible/false,
3 budget exhausted, 4 capacity guard refused.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from .arith import normalize_even
from .certificates import (NotRefinableError, RationalColoring, cert_value,
                           find_tight_cycle, refine, tight_digraph)
from .constructions import (big_gamma, circular_clique_signed, gamma,
                            gamma_prime, hat_clique, k4_omega, mini_gadget,
                            omega_d, outerplanar_F, signed_cycle, spal5,
                            wenger, wenger_tilde)
from .core import (CapacityError, NEG, POS, SignedGraph,
                   StructuralMismatchError, UncolorableError, girth_types,
                   switching_equivalent)
from .indicators import Indicator, z_set
from .solver import (BudgetExhausted, ChiUndecided, Coloring, SolveBudget,
                     chi_c, chi_s, verify_coloring)


class ParseError(ValueError):
    """Malformed .sg or coloring text; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_sg(text: str) -> SignedGraph:
    """Parse the .sg format; raises ParseError with a line number."""
    n = None
    triples = []
    for lineno, line in _content_lines(text):
        parts = line.split()
        if n is None:
            if parts[0] != "sg" or len(parts) != 2:
                raise ParseError(lineno, "expected header 'sg <n>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(lineno, f"bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise ParseError(lineno, "vertex count must be nonnegative")
            continue
        if parts[0] == "e":
            if len(parts) != 4:
                raise ParseError(lineno, "expected 'e <u> <v> <+|->'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "edge endpoints must be integers") from None
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(lineno, f"endpoint out of range 0..{n - 1}")
            if parts[3] == "+":
                sign = POS
            elif parts[3] == "-":
                sign = NEG
            else:
                raise ParseError(lineno, f"bad sign token {parts[3]!r} (want + or -)")
            triples.append((u, v, sign))
        elif parts[0] == "v":
            if len(parts) < 3:
                raise ParseError(lineno, "expected 'v <idx> <name>'")
            try:
                idx = int(parts[1])
            except ValueError:
                raise ParseError(lineno, "vertex index must be an integer") from None
            if not 0 <= idx < n:
                raise ParseError(lineno, f"vertex index out of range 0..{n - 1}")
            # names are I/O-level decoration only
        else:
            raise ParseError(lineno, f"unknown directive {parts[0]!r}")
    if n is None:
        raise ParseError(1, "missing 'sg <n>' header")
    return SignedGraph.from_triples(n, triples)


def render_sg(g: SignedGraph) -> str:
    lines = [f"sg {g.n}"]
    lines.extend(f"e {e.u} {e.v} {e.sign.symbol}" for e in g.edges)
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, n: int) -> Coloring:
    """Parse a coloring file for an n-vertex graph; must cover every vertex."""
    header = None
    seen: dict[int, int] = {}
    for lineno, line in _content_lines(text):
        parts = line.split()
        if header is None:
            if parts[0] != "coloring" or len(parts) != 2 or "/" not in parts[1]:
                raise ParseError(lineno, "expected header 'coloring <p>/<q>'")
            ps, qs = parts[1].split("/", 1)
            try:
                header = (int(ps), int(qs))
            except ValueError:
                raise ParseError(lineno, f"bad p/q {parts[1]!r}") from None
            continue
        if len(parts) != 2:
            raise ParseError(lineno, "expected '<vertex> <color>'")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, "vertex and color must be integers") from None
        if not 0 <= v < n:
            raise ParseError(lineno, f"vertex {v} out of range 0..{n - 1}")
        if v in seen:
            raise ParseError(lineno, f"vertex {v} colored twice")
        if not 0 <= c < header[0]:
            raise ParseError(lineno, f"color {c} out of range 0..{header[0] - 1}")
        seen[v] = c
    if header is None:
        raise ParseError(1, "missing 'coloring <p>/<q>' header")
    missing = [v for v in range(n) if v not in seen]
    if missing:
        raise ParseError(1, f"vertices without a color: {missing[:5]}")
    return Coloring(header[0], header[1], tuple(seen[v] for v in range(n)))


def render_coloring(c: Coloring) -> str:
    lines = [f"coloring {c.p}/{c.q}"]
    lines.extend(f"{v} {x}" for v, x in enumerate(c.colors))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# CLI plumbing
# ---------------------------------------------------------------------------


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want code 1
        raise _UsageError(message)


def fmt_value(x: Fraction) -> str:
    """Lowest-terms display, with the even normal form appended when distinct."""
    low = str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if x >= 2:
        er = normalize_even(x.numerator, x.denominator)
        if (er.p, er.q) != (x.numerator, x.denominator):
            return f"{low} ({er.p}/{er.q})"
    return low


def _parse_fraction(s: str) -> Fraction:
    try:
        if "/" in s:
            a, b = s.split("/", 1)
            return Fraction(int(a), int(b))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"bad rational {s!r} (want N or N/D)") from None


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _env_budget() -> SolveBudget | None:
    raw = os.environ.get("SGC_BUDGET")
    if raw is None:
        return None
    try:
        return SolveBudget(max_nodes=int(raw))
    except ValueError:
        raise _UsageError(f"SGC_BUDGET must be an integer, got {raw!r}") from None


def _cmd_chi(args) -> int:
    g = parse_sg(_read(args.file))
    if args.budget is not None:
        budget = SolveBudget(max_nodes=args.budget)
    else:
        budget = _env_budget()
    result = chi_c(g, budget=budget)
    print(f"chi_c = {fmt_value(result.value)}")
    if result.witness is not None:
        col_path = Path(args.file).with_suffix(".col")
        col_path.write_text(render_coloring(result.witness), encoding="utf-8")
        print(f"witness: {col_path}")
    if args.certify:
        if result.witness is None:
            print("no certificate: graph has no edges")
        else:
            rc = RationalColoring.from_coloring(result.witness)
            cycle = find_tight_cycle(tight_digraph(g, rc))
            assert cycle is not None, "optimal coloring must have a tight cycle"
            cert = cert_value(g, rc, cycle)
            verts = " -> ".join(str(a[0]) for a in cycle) + f" -> {cycle[0][0]}"
            print("certificate: tight cycle")
            print(f"  cycle: {verts}")
            print(f"  s = {cert.s} positive arcs, t = {cert.t} negative arcs, a = {cert.a}")
            print(f"  r = 2(s+t)/(2a+t) = {fmt_value(cert.r)}")
    return 0


def _cmd_check(args) -> int:
    g = parse_sg(_read(args.file))
    c = parse_coloring(_read(args.coloring), g.n)
    r = _parse_fraction(args.r)
    if Fraction(c.p, c.q) != r:
        print(f"coloring file is at {c.p}/{c.q}, not {args.r}", file=sys.stderr)
        return 1
    if verify_coloring(g, c):
        print("valid coloring")
        return 0
    print("invalid coloring")
    return 2


def _cmd_zset(args) -> int:
    g = parse_sg(_read(args.file))
    er = normalize_even(*_parse_fraction(args.r).as_integer_ratio())
    ind = Indicator(g, args.u, args.v)
    zs = z_set(ind, er.p, er.q, budget=_env_budget())
    print(f"Z-set at r = {fmt_value(er.value)} (grid {er.p}/{er.q}):")
    for d, ok in enumerate(zs.member):
        print(f"  d = {Fraction(d, er.q)} : {'yes' if ok else 'no'}")
    members = zs.members()
    if not members:
        print("empty set")
    elif len(members) == members[-1] - members[0] + 1:
        lo, hi = Fraction(members[0], er.q), Fraction(members[-1], er.q)
        print(f"interval: [{lo}, {hi}]")
    else:
        print("not contiguous")
    return 0


_GENERATORS: dict[str, tuple[int, str, Callable[..., SignedGraph]]] = {
    "cycle": (2, "LENGTH +|-", lambda l, s: signed_cycle(int(l), s == "-")),
    "clique": (2, "P Q", lambda p, q: circular_clique_signed(int(p), int(q))),
    "hat": (2, "P Q", lambda p, q: hat_clique(int(p), int(q))),
    "gamma": (1, "DEPTH", lambda i: gamma(int(i)).graph),
    "gamma_prime": (1, "INDEX", lambda i: gamma_prime(int(i))),
    "spal5": (0, "", spal5),
    "F": (0, "", outerplanar_F),
    "omega": (1, "D", lambda d: omega_d(int(d))),
    "mini_gadget": (0, "", mini_gadget),
    "wenger": (0, "", wenger),
    "wenger_tilde": (0, "", wenger_tilde),
    "big_gamma": (0, "", lambda: big_gamma().graph),
    "k4_omega": (0, "", k4_omega),
}


def _cmd_gen(args) -> int:
    if args.name not in _GENERATORS:
        known = ", ".join(sorted(_GENERATORS))
        raise _UsageError(f"unknown construction {args.name!r}; known: {known}")
    arity, params_help, fn = _GENERATORS[args.name]
    if len(args.params) != arity:
        want = params_help or "no parameters"
        raise _UsageError(f"{args.name} takes {want}")
    if args.name == "cycle" and args.params[1] not in ("+", "-"):
        raise _UsageError("cycle sign must be + or -")
    try:
        g = fn(*args.params)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    text = render_sg(g)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_equiv(args) -> int:
    g1 = parse_sg(_read(args.file1))
    g2 = parse_sg(_read(args.file2))
    if switching_equivalent(g1, g2):
        print("switching equivalent")
        return 0
    print("not switching equivalent")
    return 2


def _cmd_girth(args) -> int:
    g = parse_sg(_read(args.file))
    table = girth_types(g)
    for key in ((0, 0), (0, 1), (1, 0), (1, 1)):
        val = table[key]
        print(f"g{key[0]}{key[1]} = {'inf' if val is None else val}")
    return 0


def _cmd_refine(args) -> int:
    g = parse_sg(_read(args.file))
    c = parse_coloring(_read(args.coloring), g.n)
    r = _parse_fraction(args.r)
    if Fraction(c.p, c.q) != r:
        print(f"coloring file is at {c.p}/{c.q}, not {args.r}", file=sys.stderr)
        return 1
    rc = RationalColoring.from_coloring(c)
    try:
        out = refine(g, rc)
    except NotRefinableError:
        print("tight cycle present")
        return 2
    print(f"r0 = {out.r}")
    for v, x in enumerate(out.colors):
        print(f"v {v} {x}")
    return 0


def _cmd_chis(args) -> int:
    g = parse_sg(_read(args.file))
    value = chi_s(g, budget=_env_budget())
    print(f"chi_s = {fmt_value(value)}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="sgc", description="circular chromatic numbers of signed graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="exact circular chromatic number")
    p.add_argument("file")
    p.add_argument("--certify", action="store_true", help="print a tight-cycle certificate")
    p.add_argument("--budget", type=int, default=None, help="node budget (default: SGC_BUDGET)")
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("check", help="verify a coloring file")
    p.add_argument("file")
    p.add_argument("--r", required=True, help="circle size p/q")
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("zset", help="feasible terminal separations of an indicator")
    p.add_argument("file")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--r", required=True, help="circle size p/q")
    p.set_defaults(func=_cmd_zset)

    p = sub.add_parser("gen", help="write a named construction")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("equiv", help="switching equivalence of two graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("girth", help="shortest closed-walk lengths by parity type")
    p.add_argument("file")
    p.set_defaults(func=_cmd_girth)

    p = sub.add_parser("refine", help="strictly shrink a coloring's circle if possible")
    p.add_argument("file")
    p.add_argument("--r", required=True, help="circle size p/q of the coloring file")
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=_cmd_refine)

    p = sub.add_parser("chis", help="max chi_c over signatures of a simple graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_chis)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"no such file: {exc.filename}", file=sys.stderr)
        return 1
    except UncolorableError as exc:
        print(f"uncolorable: {exc}", file=sys.stderr)
        return 2
    except ChiUndecided as exc:
        print(f"budget exhausted: chi_c in ({fmt_value(exc.lower)}, {fmt_value(exc.upper)}], "
              f"undecided at {exc.undecided} after {exc.nodes} nodes", file=sys.stderr)
        return 3
    except BudgetExhausted as exc:
        print(f"budget exhausted after {exc.nodes} nodes", file=sys.stderr)
        return 3
    except CapacityError as exc:
        print(f"capacity guard: {exc}", file=sys.stderr)
        return 4
    except StructuralMismatchError as exc:
        print(f"structural mismatch: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
