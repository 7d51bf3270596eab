"""Command-line front end: ``solve <command> SYSTEM [options]``.

Results go to standard output (JSON by default), diagnostics to standard
error. Exit codes: 0 ok, 1 other failure, 2 parse error, 3 dimension
mismatch, 4 singular M11, 5 residual failure, 6 unstable quotient dimension.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .eigen import random_linear_form, solve_bilinear_koszul, solve_torus
from .errors import (
    DimensionMismatch,
    DimensionUnstable,
    PolySyntaxError,
    ResidualFailure,
    SingularM11,
    ToricSolveError,
)
from .matrices import canny_emiris_matrix, koszul_bilinear_matrix, macaulay_matrix_dense, sylvester_matrix
from .poly import PolySystem
from .polytope import mixed_volume, mixed_volume_terms, newton_polytope
from .toric_gb import (
    GradedMonomialOrder,
    default_setup,
    dehomogenize_gb,
    eliminant,
    fglm_lex,
    lex_key,
    multiplication_maps,
    truncated_gb,
)

DEFAULT_SEED = 0
EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DIM, EXIT_SINGULAR, EXIT_RESIDUAL, EXIT_UNSTABLE = range(7)


@dataclass
class RunConfig:
    command: str
    source: str
    seed: int
    tol: float
    bstop: tuple | None
    fmt: str

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tolerance must be positive")


def _seed_default():
    env = os.environ.get("SOLVE_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise SystemExit(f"SOLVE_SEED must be an integer, got {env!r}") from None


def load_system(args) -> PolySystem:
    if args.expr is not None:
        if not args.vars:
            raise PolySyntaxError("inline systems need --vars")
        names = [v.strip() for v in args.vars.split(",")]
        return PolySystem.from_strings([p for p in args.expr.split(";") if p.strip()], names)
    if args.system is None:
        raise PolySyntaxError("no system given (path, '-' or --expr)")
    if args.system == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.system, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise PolySyntaxError(f"cannot read {args.system}: {exc.strerror}") from None
    return PolySystem.loads(text)


def _cplx(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _emit(obj, args, text=None):
    if args.format == "text" and text is not None:
        sys.stdout.write(text.rstrip("\n") + "\n")
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _dump(args, matrix):
    if args.matrix_dump:
        with open(args.matrix_dump, "w", encoding="utf-8") as fh:
            json.dump(matrix.to_json(), fh, sort_keys=True, indent=1)
            fh.write("\n")


def _parse_bstop(text):
    if text is None:
        return None
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise PolySyntaxError(f"--bstop expects comma-separated integers, got {text!r}") from None


# --------------------------------------------------------------------------
# commands


def cmd_mixed_volume(args) -> int:
    sys_ = load_system(args)
    if not sys_.is_square:
        raise DimensionMismatch(f"{len(sys_)} polynomials in {sys_.nvars} variables")
    Ps = [newton_polytope(f) for f in sys_.polys]
    mv = mixed_volume(Ps)
    out = {"mv": mv}
    lines = [f"mv = {mv}"]
    if args.verbose:
        terms = mixed_volume_terms(Ps)
        out["terms"] = [{"subset": list(k), "signed_count": v} for k, v in sorted(terms.items())]
        lines += [f"  {list(k)}: {v:+d}" for k, v in sorted(terms.items())]
    _emit(out, args, "\n".join(lines))
    return EXIT_OK


def cmd_macaulay(args) -> int:
    sys_ = load_system(args)
    if sys_.nvars == 1 and len(sys_) == 2 and args.kind == "sylvester":
        M = sylvester_matrix(*sys_.polys)
    else:
        degrees = [int(x) for x in args.degrees.split(",")] if args.degrees else None
        M = macaulay_matrix_dense(sys_.polys, degrees)
    det = M.det() if M.is_square() else None
    _dump(args, M)
    out = {"shape": list(M.shape), "det": None if det is None else str(det), "matrix": M.to_json()}
    _emit(out, args, M.to_text() + f"\ndet = {det}")
    return EXIT_OK


def cmd_ce_matrix(args) -> int:
    sys_ = load_system(args)
    ce = canny_emiris_matrix(sys_.polys, seed=args.seed, delta_seed=args.seed)
    _dump(args, ce.matrix)
    det = ce.matrix.det()
    out = {
        "size": ce.size,
        "B_sizes": [len(b) for b in ce.B],
        "B": [[list(x) for x in b] for b in ce.B],
        "delta": [str(x) for x in ce.delta],
        "det": str(det),
        "seed": args.seed,
        "matrix": ce.matrix.to_json(),
    }
    text = f"size = {ce.size}\n#B_i = {[len(b) for b in ce.B]}\ndet = {det}"
    _emit(out, args, text)
    return EXIT_OK


def cmd_koszul(args) -> int:
    sys_ = load_system(args)
    if sys_.nvars != 4:
        raise DimensionMismatch("bilinear forms need the four variables x0, x1, y0, y1")
    if len(sys_) == 3:
        K = koszul_bilinear_matrix(*sys_.polys)
        _dump(args, K)
        det = K.det()
        out = {"det": str(det), "matrix": K.to_json()}
        _emit(out, args, K.to_text() + f"\ndet = {det}")
        return EXIT_OK
    if len(sys_) == 2:
        sol = solve_bilinear_koszul(*sys_.polys, seed=args.seed, tol=args.tol)
        return _report_solutions(sol, args, sys_.names)
    raise DimensionMismatch("koszul expects two (solve) or three (matrix) bilinear forms")


def _report_solutions(sol, args, names) -> int:
    out = sol.to_json()
    lines = []
    for p, r, m in zip(sol.points, sol.residuals, sol.multiplicities):
        coords = ", ".join(f"{n}={complex(z):.12g}" for n, z in zip(names, p))
        lines.append(f"{coords}  residual={r:.3e}" + (f"  multiplicity={m}" if m > 1 else ""))
    for p, r in sol.rejected:
        coords = ", ".join(f"{n}={complex(z):.12g}" for n, z in zip(names, p))
        lines.append(f"REJECTED {coords}  residual={r:.3e}")
    _emit(out, args, "\n".join(lines) if lines else "no solutions")
    for w in sol.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if sol.rejected:
        print(f"{len(sol.rejected)} point(s) exceed the residual tolerance {args.tol:g}", file=sys.stderr)
        return EXIT_RESIDUAL
    return EXIT_OK


def cmd_solve(args) -> int:
    sys_ = load_system(args)
    sol = solve_torus(sys_, seed=args.seed, tol=args.tol)
    if sol.ce is not None:
        _dump(args, sol.ce.matrix)
    return _report_solutions(sol, args, sys_.names)


def _eig_summary(M):
    vals = np.linalg.eigvals(np.array([[complex(x) for x in row] for row in M], dtype=complex))
    return [_cplx(z) for z in vals]


def cmd_gb(args) -> int:
    sys_ = load_system(args)
    spec = None
    if args.summands == "file":
        if not args.summands_file:
            raise PolySyntaxError("--summands file needs --summands-file PATH")
        with open(args.summands_file, encoding="utf-8") as fh:
            spec = json.load(fh)
    H = default_setup(sys_, args.summands, spec)
    order = GradedMonomialOrder(args.order)
    bstop = _parse_bstop(args.bstop)
    gb = truncated_gb(H, order, bstop)
    names = list(sys_.names)
    out = {
        "gb": [f.to_text(names) for f in dehomogenize_gb(gb)],
        "b_stop": list(gb.b_stop),
        "seed": args.seed,
    }
    lines = ["truncated basis:"] + [f"  {s}" for s in out["gb"]]
    if sys_.is_square:
        f0 = random_linear_form(sys_.nvars, random.Random(args.seed))
        maps = multiplication_maps(H, order, f0=f0, gb=gb if bstop is None else None)
        lex = fglm_lex(maps.maps, maps.one)
        out["basis"] = [list(b) for b in maps.basis]
        out["d0"] = list(maps.d0)
        out["eigen"] = {
            "f0": f0.to_text(names),
            "f0_values": _eig_summary(maps.f0_map),
            "coordinates": {n: _eig_summary(M) for n, M in zip(names, maps.maps)},
        }
        out["lex_gb"] = [f.to_text(names, lex_key) for f in lex]
        try:
            out["eliminant"] = eliminant(lex).to_text(names, lex_key)
        except ValueError:
            pass
        lines += [f"basis size: {len(maps.basis)}", "lex basis:"] + [f"  {s}" for s in out["lex_gb"]]
    if args.stats:
        out["stats"] = gb.stats_json()
        lines += ["stats:"] + [f"  {json.dumps(s, sort_keys=True)}" for s in out["stats"]]
    _emit(out, args, "\n".join(lines))
    return EXIT_OK


COMMANDS = {
    "mv": cmd_mixed_volume,
    "bkk": cmd_mixed_volume,
    "macaulay": cmd_macaulay,
    "ce-matrix": cmd_ce_matrix,
    "koszul": cmd_koszul,
    "solve": cmd_solve,
    "gb": cmd_gb,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("system", nargs="?", help="system JSON file, or '-' for stdin")
    common.add_argument("-e", "--expr", help="inline system: polynomials separated by ';'")
    common.add_argument("--vars", help="comma-separated variable names for --expr")
    common.add_argument("--seed", type=int, default=None, help="random seed (default: $SOLVE_SEED or 0)")
    common.add_argument("--tol", type=float, default=1e-8, help="residual tolerance")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--matrix-dump", metavar="PATH", help="write the intermediate matrix as JSON")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="solve", description="Sparse polynomial systems over the torus.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("mv", parents=[common], help="mixed volume (root bound)")
    sub.add_parser("bkk", parents=[common], help="alias of mv")
    p = sub.add_parser("macaulay", parents=[common], help="dense Macaulay or Sylvester matrix")
    p.add_argument("--degrees", help="comma-separated degree bounds d_0..d_n")
    p.add_argument("--kind", choices=("macaulay", "sylvester"), default="macaulay")
    sub.add_parser("ce-matrix", parents=[common], help="Canny-Emiris matrix of n+1 polynomials")
    sub.add_parser("koszul", parents=[common], help="bilinear Koszul matrix (3 forms) or solve (2 forms)")
    sub.add_parser("solve", parents=[common], help="torus roots via Schur complement and eigenvalues")
    p = sub.add_parser("gb", parents=[common], help="truncated toric Groebner basis and lex basis")
    p.add_argument("--summands", choices=("auto", "dense", "file"), default="auto")
    p.add_argument("--summands-file", metavar="PATH")
    p.add_argument("--bstop", help="truncation multidegree, comma-separated")
    p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    p.add_argument("--stats", action="store_true", help="include per-degree elimination statistics")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is None:
        args.seed = _seed_default()
    try:
        RunConfig(args.command, args.system or args.expr or "", args.seed, args.tol,
                  _parse_bstop(getattr(args, "bstop", None)), args.format)
        return COMMANDS[args.command](args)
    except PolySyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DimensionMismatch as exc:
        print(f"dimension mismatch: {exc}", file=sys.stderr)
        return EXIT_DIM
    except SingularM11 as exc:
        print(f"singular M11: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ResidualFailure as exc:
        print(f"residual failure: {exc}", file=sys.stderr)
        return EXIT_RESIDUAL
    except DimensionUnstable as exc:
        print(f"unstable quotient dimension: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE
    except (ToricSolveError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
