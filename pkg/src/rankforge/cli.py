"""Command-line entry point: ``rankforge [--budget N] [--format json|table] [--seed S] <command> ...``.

Exit codes: 0 success, 2 invalid input, 3 enumeration budget exceeded,
4 inconsistent distribution input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import config
from .anticode import check_anticode, criterion_optimal_anticode, mrd_corpus, standard_anticode
from .codefile import code_to_json, load_code
from .codes import (LinearMatrixCode, VectorCode, distance_distribution, dual_code,
                    gamma_expand, vector_dual, weight_distribution)
from .errors import BudgetExceeded, InconsistentInput, InvalidParameter, RankForgeError
from .field import ExtensionBasis, FieldSpec, dual_basis, extension_field
from .macwilliams import (CodeParams, RecursionInput, ZeroPattern, binomial_moment,
                          count_zero_diagonal, dual_moment, macwilliams_transform, weight_recursion)
from .mrd import GabidulinSpec, gabidulin_code, gabidulin_matrix_code, is_mrd

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_INCONSISTENT = 0, 2, 3, 4


# -- argument helpers ----------------------------------------------------------

def _int_list(text: str) -> list[int]:
    """'1,8,16' or '[1, 8, 16]' or '["1","8","16"]'."""
    text = text.strip()
    try:
        if text.startswith("["):
            return [int(x) for x in json.loads(text)]
        return [int(x) for x in text.split(",") if x.strip()]
    except (ValueError, TypeError, json.JSONDecodeError):
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def _positions(text: str) -> list[tuple[int, int]]:
    """'1,1:2,2' -> [(1, 1), (2, 2)]; the empty string means no positions."""
    out = []
    for part in filter(None, text.split(":")):
        try:
            i, j = (int(x) for x in part.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad position {part!r}; expected i,j") from None
        out.append((i, j))
    return out


def _known(text: str) -> dict[int, int]:
    """'2:7,3:0' -> {2: 7, 3: 0}."""
    out = {}
    for part in filter(None, text.split(",")):
        try:
            i, w = (int(x) for x in part.split(":"))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad entry {part!r}; expected i:W_i") from None
        out[i] = w
    return out


def _strs(xs) -> list[str]:
    return [str(x) for x in xs]


# -- commands ------------------------------------------------------------------

def cmd_field(args: argparse.Namespace) -> Any:
    spec = FieldSpec.build(args.p, args.degree, args.sub_degree, args.modulus)
    return spec.to_json()


def _params_from(args: argparse.Namespace) -> CodeParams:
    return CodeParams(args.q, args.k, args.m, args.size)


def _matrix_params(C) -> CodeParams:
    if isinstance(C, VectorCode):
        k, m = C.k, C.spec.m
    else:
        k, m = C.k, C.m
    if k > m:
        raise InvalidParameter("the closed forms need k <= m; transpose the code first")
    return CodeParams(C.spec.q, k, m, C.size)


def code_gabidulin(args: argparse.Namespace) -> Any:
    if args.representation == "matrix":
        return code_to_json(gabidulin_matrix_code(args.q, args.m, args.k, args.d, args.points))
    spec = extension_field(args.q, args.m)
    return code_to_json(gabidulin_code(GabidulinSpec(spec, args.k, args.d, tuple(args.points or ()))))


def code_anticode(args: argparse.Namespace) -> Any:
    return code_to_json(standard_anticode(args.k, args.m, args.delta, args.q))


def code_dual(args: argparse.Namespace) -> Any:
    C = load_code(args.file)
    if isinstance(C, LinearMatrixCode):
        return code_to_json(dual_code(C))
    if isinstance(C, VectorCode):
        return code_to_json(vector_dual(C))
    raise InvalidParameter("the dual is defined for linear codes only")


def code_expand(args: argparse.Namespace) -> Any:
    C = load_code(args.file)
    if not isinstance(C, VectorCode):
        raise InvalidParameter("expand needs a vector code")
    basis = ExtensionBasis(C.spec, tuple(args.basis)) if args.basis else ExtensionBasis.polynomial(C.spec)
    if args.dual_basis:
        basis = dual_basis(basis)
    return code_to_json(gamma_expand(C, basis))


def code_weights(args: argparse.Namespace) -> Any:
    return {"W": weight_distribution(load_code(args.file)).to_json()}


def code_distances(args: argparse.Namespace) -> Any:
    C = load_code(args.file)
    if isinstance(C, VectorCode):
        raise InvalidParameter("distances works on matrix codes; expand the vector code first")
    return {"A": distance_distribution(C).to_json()}


def code_macwilliams(args: argparse.Namespace) -> Any:
    if args.file:
        C = load_code(args.file)
        W, params = weight_distribution(C), _matrix_params(C)
    else:
        W, params = args.weights, _params_from(args)
    return {"W_dual": macwilliams_transform(W, params).to_json()}


def code_moments(args: argparse.Namespace) -> Any:
    params = _params_from(args)
    out = {"moments": _strs(binomial_moment(args.weights, nu, params) for nu in range(params.k + 1))}
    if args.dual_weights is not None:
        out["dual_moments"] = _strs(dual_moment(args.dual_weights, nu, params) for nu in range(params.k + 1))
    return out


def code_recursion(args: argparse.Namespace) -> Any:
    params = CodeParams.linear(args.q, args.k, args.m, args.dim)
    inp = RecursionInput(params, args.dim, args.d, args.d_perp, args.epsilon, args.known)
    return {"W": weight_recursion(inp).to_json()}


def code_check(args: argparse.Namespace) -> Any:
    C = load_code(args.file)
    if args.mrd:
        return is_mrd(C).to_json()
    if isinstance(C, VectorCode):
        raise InvalidParameter("anticode checks work on matrix codes")
    out = check_anticode(C, args.anticode).to_json()
    if args.criterion:
        if not isinstance(C, LinearMatrixCode):
            raise InvalidParameter("the MRD intersection criterion needs a linear code")
        if C.k > C.m or args.anticode == 0:
            raise InvalidParameter("the MRD intersection criterion needs k <= m and delta >= 1")
        regime, corpus = mrd_corpus(C.spec.q, C.k, C.m, args.anticode + 1, seed=args.seed)
        out["criterion"] = criterion_optimal_anticode(C, args.anticode, corpus)
        out["corpus"] = {"regime": regime, "size": str(len(corpus)), "seed": args.seed}
    return out


def cmd_count(args: argparse.Namespace) -> Any:
    pattern = ZeroPattern.of(args.k, args.m, args.positions)
    if args.rank is not None:
        return str(count_zero_diagonal(pattern, args.q, args.rank))
    return {"counts": _strs(count_zero_diagonal(pattern, args.q, r) for r in range(args.k + 1))}


# -- parser --------------------------------------------------------------------

def _add_params(p: argparse.ArgumentParser, size: bool = True) -> None:
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    if size:
        p.add_argument("--size", type=int, required=True, help="code cardinality |C|")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rankforge", description="Exact rank-metric code computations.")
    parser.add_argument("--budget", type=int, default=None,
                        help=f"max objects any enumeration may visit (default ${config.ENV_VAR} or 2^24)")
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized corpora")
    sub = parser.add_subparsers(dest="command", required=True)

    f = sub.add_parser("field", help="construct and print a field tower")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--degree", type=int, required=True)
    f.add_argument("--modulus", type=_int_list, default=None,
                   help="little-endian coefficients, e.g. 2,2,1 for x^2+2x+2")
    f.add_argument("--sub-degree", type=int, default=None)
    f.set_defaults(func=cmd_field)

    c = sub.add_parser("code", help="code construction, transforms and checks")
    cs = c.add_subparsers(dest="subcommand", required=True)

    g = cs.add_parser("gabidulin")
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--points", type=_int_list, default=None)
    g.add_argument("--representation", choices=("vector", "matrix"), default="vector")
    g.set_defaults(func=code_gabidulin)

    a = cs.add_parser("anticode")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--m", type=int, required=True)
    a.add_argument("--q", type=int, required=True)
    a.add_argument("--delta", type=int, required=True)
    a.set_defaults(func=code_anticode)

    for name, func in (("dual", code_dual), ("weights", code_weights), ("distances", code_distances)):
        p = cs.add_parser(name)
        p.add_argument("file")
        p.set_defaults(func=func)

    e = cs.add_parser("expand")
    e.add_argument("file")
    e.add_argument("--basis", type=_int_list, default=None, help="basis of F_{q^m} over F_q")
    e.add_argument("--dual-basis", action="store_true", help="expand over the trace-dual of the basis")
    e.set_defaults(func=code_expand)

    mw = cs.add_parser("macwilliams")
    mw.add_argument("file", nargs="?", default=None)
    mw.add_argument("--weights", type=_int_list)
    mw.add_argument("--q", type=int)
    mw.add_argument("--k", type=int)
    mw.add_argument("--m", type=int)
    mw.add_argument("--size", type=int)
    mw.set_defaults(func=code_macwilliams)

    mo = cs.add_parser("moments")
    mo.add_argument("--weights", type=_int_list, required=True)
    mo.add_argument("--dual-weights", type=_int_list, default=None)
    _add_params(mo)
    mo.set_defaults(func=code_moments)

    r = cs.add_parser("recursion")
    _add_params(r, size=False)
    r.add_argument("--dim", type=int, required=True)
    r.add_argument("--d", type=int, required=True)
    r.add_argument("--d-perp", type=int, required=True)
    r.add_argument("--epsilon", type=int, choices=(0, 1), required=True)
    r.add_argument("--known", type=_known, default={}, help="middle weights as i:W_i,...")
    r.set_defaults(func=code_recursion)

    ch = cs.add_parser("check")
    ch.add_argument("file")
    mode = ch.add_mutually_exclusive_group(required=True)
    mode.add_argument("--mrd", action="store_true")
    mode.add_argument("--anticode", type=int, metavar="DELTA")
    ch.add_argument("--criterion", action="store_true",
                    help="also test trivial intersection with an MRD corpus of distance DELTA+1")
    ch.set_defaults(func=code_check)

    n = sub.add_parser("count", help="matrices of given rank vanishing on diagonal positions")
    n.add_argument("--k", type=int, required=True)
    n.add_argument("--m", type=int, required=True)
    n.add_argument("--q", type=int, required=True)
    n.add_argument("--positions", type=_positions, default=[], help="e.g. 1,1:2,2")
    n.add_argument("--rank", type=int, default=None)
    n.set_defaults(func=cmd_count)
    return parser


# -- output --------------------------------------------------------------------

def _table(result: Any) -> str:
    if isinstance(result, dict):
        width = max((len(k) for k in result), default=0)
        return "\n".join(f"{k:<{width}}  {_table_value(v)}" for k, v in result.items())
    return _table_value(result)


def _table_value(v: Any) -> str:
    if isinstance(v, list):
        return " ".join(_table_value(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return json.dumps(v) if isinstance(v, bool) or v is None else str(v)


def render(result: Any, fmt: str) -> str:
    if fmt == "table":
        return _table(result)
    return json.dumps(result, sort_keys=True)


def _validate(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if getattr(args, "func", None) is code_macwilliams and not args.file:
        missing = [f"--{n}" for n in ("weights", "q", "k", "m", "size") if getattr(args, n) is None]
        if missing:
            parser.error(f"macwilliams needs a code file or {' '.join(missing)}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    func: Callable[[argparse.Namespace], Any] = args.func
    try:
        if args.budget is not None:
            config.set_budget(args.budget)
        else:
            config.get_budget()
        result = func(args)
    except BudgetExceeded as exc:
        print(f"rankforge: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InconsistentInput as exc:
        print(f"rankforge: inconsistent input: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (InvalidParameter, RankForgeError, ValueError, ZeroDivisionError) as exc:
        print(f"rankforge: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    finally:
        config.set_budget(None)
    print(render(result, args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
