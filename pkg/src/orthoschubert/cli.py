"""Command-line front end.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error. Errors
are written to stderr as one JSON object.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .arakelov import BottChernPlugin, MissingBottChernInput, PluginError, arith_degree
from .cache import DiskCache
from .checks import SUITES, run_suite
from .ortho import (
    NotInIdealError,
    expand_in_d_basis,
    ideal_decompose,
    ortho_coefficients,
    ortho_schubert,
    structure_constants_batch,
)
from .poly import Polynomial, PolynomialError
from .stanley import TABLEAU_LENGTH_BOUND, f_coeff, kl_tableaux
from .symfun import Partition, PartitionError
from .table import render_terms, row_word, table_json, table_rows
from .weyl import PermutationA, SignedPermutation, WeylError

log = logging.getLogger("orthoschubert")

DOMAIN_ERRORS = (
    WeylError,
    PolynomialError,
    PartitionError,
    NotInIdealError,
    MissingBottChernInput,
    PluginError,
    ArithmeticError,
    ValueError,
    LookupError,
    OSError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class Config:
    n: int | None
    fmt: str
    cache_dir: str | None
    plugin_path: str | None
    bound: int
    jobs: int


def _emit(cfg: Config, text: str, obj) -> None:
    if cfg.fmt == "json":
        sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _frac(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _perm(text: str, n: int | None) -> SignedPermutation:
    w = SignedPermutation.parse(text)
    if n is not None and w.n != n:
        if w.n > n:
            raise WeylError(f"{w} does not lie in W~_{n}")
        w = w.embed(n)
    return w


def _load_poly(path: str, n: int | None) -> Polynomial:
    f = Polynomial.from_json(Path(path).read_text(encoding="utf-8"))
    if n is not None and f.n != n:
        if f.n > n:
            raise PolynomialError(f"polynomial has {f.n} variables, --n is {n}")
        f = f.with_vars(n)
    return f


# ---------------------------------------------------------------------------
# subcommands


def cmd_dw(args, cfg: Config) -> int:
    w = _perm(args.w, cfg.n)
    poly = ortho_schubert(w)
    coeffs = sorted(ortho_coefficients(w).items(), key=lambda kv: (kv[0].pi.length(), kv[0].pi.entries, kv[0].lam.parts))
    obj = {
        "w": str(w),
        "n": w.n,
        "word": row_word(w),
        "rendering": render_terms(w),
        "f": [{"lambda": list(k.lam.parts), "pi": str(k.pi), "f": c} for k, c in coeffs],
        "polynomial": poly.to_json_obj(),
    }
    _emit(cfg, f"{render_terms(w)}\n{poly.to_str()}", obj)
    return 0


def cmd_table(args, cfg: Config) -> int:
    n = cfg.n or 3
    if cfg.fmt == "json":
        _emit(cfg, "", table_json(n))
    else:
        _emit(cfg, "\n".join(table_rows(n, jobs=cfg.jobs)), None)
    return 0


def cmd_fcoeff(args, cfg: Config) -> int:
    w = _perm(args.w, cfg.n)
    lam = Partition.parse(args.lam)
    pi = PermutationA.parse(args.pi)
    if pi.n < w.n:
        pi = pi.embed(w.n)
    c = f_coeff(w, lam, pi)
    _emit(cfg, str(c), {"w": str(w), "lambda": list(lam.parts), "pi": str(pi), "f": c})
    return 0


def cmd_tableaux(args, cfg: Config) -> int:
    w = _perm(args.w, cfg.n)
    lam = Partition.parse(args.shape)
    tabs = kl_tableaux(w, lam, cfg.bound)
    text = "\n\n".join(f"{t}\nm = {t.m}" for t in tabs) if tabs else "(none)"
    obj = {"w": str(w), "shape": list(lam.parts),
           "tableaux": [{"rows": t.to_json_obj(), "m": t.m} for t in tabs],
           "d": sum(1 << t.m for t in tabs)}
    _emit(cfg, text, obj)
    return 0


def cmd_product(args, cfg: Config) -> int:
    u = _perm(args.u, cfg.n)
    v = _perm(args.v, cfg.n)
    cache = DiskCache.from_env(cfg.cache_dir)
    (sc,) = structure_constants_batch([(u, v)], jobs=1, cache=cache)
    obj = sc.to_json_obj()
    lines = [f"{e['w']}: {e['d']}" for e in obj["schubert"]]
    lines += [
        f"[{','.join(map(str, e['lambda']))}] {e['pi']}: {e['d']}" for e in obj["ideal"]
    ]
    _emit(cfg, "\n".join(lines) or "0", obj)
    return 0


def cmd_expand(args, cfg: Config) -> int:
    f = _load_poly(args.poly_file, cfg.n)
    exp = expand_in_d_basis(f, f.n)
    lines = [
        f"[{','.join(map(str, k.lam.parts))}] {k.pi}: {_frac(c)}" for k, c in exp.items()
    ]
    _emit(cfg, "\n".join(lines) or "0", exp.to_json_obj())
    return 0


def cmd_decompose(args, cfg: Config) -> int:
    f = _load_poly(args.poly_file, cfg.n)
    dec = ideal_decompose(f, f.n)
    lines = [f"f{i} = {fi.to_str()}" for i, fi in enumerate(dec.f, start=1)]
    lines.append(f"g = {dec.g.to_str()}")
    _emit(cfg, "\n".join(lines), dec.to_json_obj())
    return 0


def cmd_arithdeg(args, cfg: Config) -> int:
    try:
        mono = tuple(int(t) for t in args.mono.split(","))
    except ValueError:
        raise UsageError(f"--mono expects comma separated integers, got {args.mono!r}") from None
    n = cfg.n if cfg.n is not None else len(mono)
    plugin = BottChernPlugin.load(cfg.plugin_path) if cfg.plugin_path else None
    deg = arith_degree(mono, n, plugin)
    _emit(cfg, _frac(deg), {"n": n, "mono": list(mono), "degree": _frac(deg)})
    return 0


def cmd_check(args, cfg: Config) -> int:
    kwargs = {}
    if args.suite == "structure":
        kwargs = {"jobs": cfg.jobs, "cache": DiskCache.from_env(cfg.cache_dir)}
    results = run_suite(args.suite, **kwargs)
    text = "\n".join(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}" for r in results)
    _emit(cfg, text, {"suite": args.suite, "results": [r.to_json_obj() for r in results]})
    return 0 if all(r.ok for r in results) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="rank of W~_n")
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--cache-dir", default=None, help="structure-constant cache (overrides the env var)")
    common.add_argument("--plugin", default=None, help="Bott-Chern plugin JSON file")
    common.add_argument("--bound", type=int, default=TABLEAU_LENGTH_BOUND, help="word length bound for tableaux")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="orthoschubert", description="Orthogonal Schubert polynomials and arithmetic Schubert calculus.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dw", parents=[common], help="orthogonal Schubert polynomial D_w")
    s.add_argument("--w", required=True)
    s.set_defaults(func=cmd_dw)

    s = sub.add_parser("table", parents=[common], help="all D_w for w in W~_n")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("fcoeff", parents=[common], help="expansion coefficient f^w_{lambda,pi}")
    s.add_argument("--w", required=True)
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--pi", required=True)
    s.set_defaults(func=cmd_fcoeff)

    s = sub.add_parser("tableaux", parents=[common], help="Kraskiewicz-Lam tableaux of a shape")
    s.add_argument("--w", required=True)
    s.add_argument("--shape", required=True)
    s.set_defaults(func=cmd_tableaux)

    s = sub.add_parser("product", parents=[common], help="structure constants of D_u D_v")
    s.add_argument("--u", required=True)
    s.add_argument("--v", required=True)
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("expand", parents=[common], help="expand a polynomial in the D-basis")
    s.add_argument("--poly-file", required=True)
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("decompose", parents=[common], help="write an element of J_n over its generators")
    s.add_argument("--poly-file", required=True)
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("arithdeg", parents=[common], help="arithmetic degree of a top monomial")
    s.add_argument("--mono", required=True)
    s.set_defaults(func=cmd_arithdeg)

    s = sub.add_parser("check", parents=[common], help="run a named invariant suite")
    s.add_argument("--suite", required=True, choices=sorted(SUITES))
    s.set_defaults(func=cmd_check)
    return p


def _error(kind: str, message: str, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": message, "exit": code}, sort_keys=True) + "\n")
    return code


VALUE_FLAGS = ("--w", "--u", "--v", "--mono", "--pi", "--lambda", "--shape")


def _attach_values(argv: list[str]) -> list[str]:
    """Glue values such as "-3,-1,2" to their flag so argparse keeps them."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_attach_values(argv))
    except UsageError as exc:
        return _error("usage", str(exc), 2)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    if args.n is not None and args.n < 2 and args.command != "check":
        return _error("usage", "--n must be at least 2", 2)
    if args.jobs < 1:
        return _error("usage", "--jobs must be positive", 2)
    cfg = Config(args.n, args.fmt, args.cache_dir, args.plugin, args.bound, args.jobs)
    try:
        return args.func(args, cfg)
    except UsageError as exc:
        return _error("usage", str(exc), 2)
    except DOMAIN_ERRORS as exc:
        return _error(type(exc).__name__, str(exc), 1)


def main() -> None:
    sys.exit(run())
