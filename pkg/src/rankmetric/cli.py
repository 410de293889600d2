"""Command line interface.

    rankmetric analyze CODE.json [--json | --csv]
    rankmetric construct mrd q=2 n=3 m=3 d=3 [-o OUT]
    rankmetric construct example exdualqmrd
    rankmetric verify all --qmax 3 --nmax 3
    rankmetric complete n=3 m=3 t=4 d=2 dperp=1 A2=9
    rankmetric complete --closed-form n=2 m=2 d=2 t=2
    rankmetric expand GAB.json [-o OUT] [--check]
    rankmetric dual CODE.json [-o OUT]

Exit codes: 0 ok, 1 invariant failure, 2 input error, 3 enumeration cap,
4 trivial code.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import codefile
from .codes import (
    DistributionQuery,
    RankDistribution,
    analyze,
    closed_form_mrd_qmrd,
    complete_distribution,
)
from .constructions import CodeRecipe
from .errors import (
    EnumerationTooLarge,
    InputError,
    InvariantViolation,
    RankMetricError,
    TooLarge,
    TrivialCode,
)
from .field import ExtensionBasis
from .gabidulin import check_serie, expand
from .matspace import dual_code
from .verify import SUITES, Sweep, run

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP, EXIT_TRIVIAL = 0, 1, 2, 3, 4

log = logging.getLogger("rankmetric")


def _kv(tokens: list[str]) -> tuple[dict[str, str], list[str]]:
    kv, bare = {}, []
    for tok in tokens:
        if "=" in tok:
            k, v = tok.split("=", 1)
            kv[k.strip()] = v.strip()
        else:
            bare.append(tok)
    return kv, bare


def _ints(kv: dict[str, str], *keys: str) -> dict[str, int]:
    out = {}
    for k in keys:
        if k not in kv:
            raise InputError(f"missing parameter {k}=")
        try:
            out[k] = int(kv[k])
        except ValueError:
            raise InputError(f"{k} must be an integer, got {kv[k]!r}") from None
    return out


def _counts_json(counts) -> list:
    return [codefile.json_int(c) for c in counts]


def _emit(text: str, out) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


# -- analyze --------------------------------------------------------------------------


REPORT_FIELDS = ("q", "n", "m", "t", "d", "d_perp", "rdef", "rdef_perp", "alpha", "rho", "class")


def cmd_analyze(args, out) -> int:
    C = codefile.load_code(args.path)
    rep = analyze(C, args.cap, args.threads)
    doc = rep.as_dict()
    if args.format == "json":
        doc["A"] = _counts_json(rep.distribution.counts)
        doc["A_perp"] = _counts_json(rep.dual_distribution.counts)
        _emit(json.dumps(doc, indent=2), out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        n = rep.n
        w.writerow(list(REPORT_FIELDS) + [f"A{i}" for i in range(n + 1)] + [f"Aperp{i}" for i in range(n + 1)])
        w.writerow([doc[k] for k in REPORT_FIELDS] + list(rep.distribution.counts)
                   + list(rep.dual_distribution.counts))
        _emit(buf.getvalue(), out)
    else:
        lines = [f"{k:>10}: {doc[k]}" for k in REPORT_FIELDS]
        lines.append(f"{'A':>10}: {' '.join(map(str, rep.distribution.counts))}")
        lines.append(f"{'A_perp':>10}: {' '.join(map(str, rep.dual_distribution.counts))}")
        _emit("\n".join(lines), out)
    return EXIT_OK


# -- construct ------------------------------------------------------------------------


def recipe_from_tokens(kind: str, tokens: list[str], seed: int | None) -> CodeRecipe:
    kv, bare = _kv(tokens)
    kind = kind.lower()
    if kind == "mrd":
        return CodeRecipe("MRD", _ints(kv, "q", "n", "m", "d"))
    if kind == "qmrd":
        return CodeRecipe("QMRD_FROM_MRD", _ints(kv, "q", "n", "m", "t"))
    if kind == "example":
        name = bare[0] if bare else kv.get("name", "")
        if name.lower() != "exdualqmrd":
            raise InputError(f"unknown example {name!r}; available: exdualqmrd")
        return CodeRecipe("EXAMPLE_EXDUALQMRD")
    if kind == "random":
        params = _ints(kv, "q", "n", "m", "t")
        if seed is None and "seed" in kv:
            seed = _ints(kv, "seed")["seed"]
        return CodeRecipe("RANDOM", params, seed if seed is not None else 0)
    if kind in ("mat-of-subspace", "mat_of_subspace"):
        params = _ints(kv, "q", "n", "m")
        try:
            params["vectors"] = json.loads(kv.get("vectors", "[]"))
        except json.JSONDecodeError as exc:
            raise InputError(f"vectors must be a JSON list: {exc}") from None
        return CodeRecipe("MAT_OF_SUBSPACE", params)
    raise InputError(f"unknown construction {kind!r}")


def _write_doc(doc: dict, path, out) -> None:
    if path:
        codefile.save(doc, path)
    else:
        out.write(codefile.dumps(doc))


def cmd_construct(args, out) -> int:
    recipe = recipe_from_tokens(args.kind, args.params, args.seed)
    try:
        C = recipe.build()
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad parameters: {exc}") from exc
    _write_doc(codefile.code_to_dict(C), args.output, out)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------------


def cmd_verify(args, out) -> int:
    sw = Sweep(qmax=args.qmax, nmax=args.nmax, mmax=args.mmax, tmax=args.tmax,
               seed=args.seed, samples=args.samples)
    if args.code:
        sw.code = codefile.load_code(args.code)
    ok = True
    for res in run(args.suite, sw):
        status = "PASS" if res.passed else "FAIL"
        extra = f", {res.found} hypothesis-satisfying" if res.name in ("bij", "qmrd-criterion") else ""
        out.write(f"{status} {res.name}: {res.checked} checks{extra}\n")
        for msg, doc in zip(res.failures, res.reproducers + [None] * len(res.failures)):
            out.write(f"  counterexample: {msg}\n")
            if doc is not None:
                out.write(codefile.dumps(doc))
        ok &= res.passed
    return EXIT_OK if ok else EXIT_FAIL


# -- complete -------------------------------------------------------------------------


def cmd_complete(args, out) -> int:
    kv, bare = _kv(args.params)
    if bare:
        raise InputError(f"unexpected arguments {bare}")
    q = int(kv.get("q", 2))
    if args.closed_form:
        p = _ints(kv, "n", "m", "d", "t")
        A = closed_form_mrd_qmrd(p["n"], p["m"], p["d"], p["t"], q)
    else:
        p = _ints(kv, "n", "m", "t", "d", "dperp")
        prefix = {}
        for k, v in kv.items():
            if k.startswith("A") and k[1:].isdigit():
                prefix[int(k[1:])] = int(v)
        Q = DistributionQuery(q, p["n"], p["m"], p["t"], p["d"], p["dperp"], prefix)
        extra = sorted(set(prefix) - set(Q.prefix_range))
        if extra:
            raise InputError(f"counts A{extra} are outside the prefix range {list(Q.prefix_range)}")
        A = complete_distribution(Q)
    _print_distribution(A, args.json, out)
    return EXIT_OK


def _print_distribution(A: RankDistribution, as_json: bool, out) -> None:
    if as_json:
        _emit(json.dumps({"n": A.n, "A": _counts_json(A.counts),
                          "cardinality": codefile.json_int(A.cardinality)}), out)
    else:
        _emit(" ".join(map(str, A.counts)), out)


# -- expand / dual ------------------------------------------------------------------------


def cmd_expand(args, out) -> int:
    G = codefile.load_gabidulin(args.path)
    basis = None
    if args.basis:
        try:
            gammas = tuple(int(x) for x in args.basis.split(","))
        except ValueError:
            raise InputError("--basis takes comma separated integers") from None
        basis = ExtensionBasis(G.base, G.ext, gammas)
    M = expand(G, basis)
    if args.check:
        rep = check_serie(G, basis, args.cap)
        status = "PASS" if rep.passed else "FAIL"
        sys.stderr.write(
            f"{status} dimension {rep.dimension} (expected {rep.expected_dimension}); "
            f"A {rep.distribution.counts} vs {rep.expanded_distribution.counts}; "
            f"A_perp {rep.dual_distribution.counts} vs {rep.expanded_dual_distribution.counts}\n"
        )
        if not rep.passed:
            return EXIT_FAIL
    _write_doc(codefile.code_to_dict(M), args.output, out)
    return EXIT_OK


def cmd_dual(args, out) -> int:
    C = codefile.load_code(args.path)
    _write_doc(codefile.code_to_dict(dual_code(C)), args.output, out)
    return EXIT_OK


# -- entry point ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rankmetric", description="Exact analysis of rank-metric codes.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cap", type=int, default=None,
                       help="enumeration cap in codewords (default: $RANKMETRIC_CAP or 2^26)")
        p.add_argument("--threads", type=int, default=1, help="worker processes for enumeration")

    p = sub.add_parser("analyze", help="parameters, class and rank distribution of a code")
    p.add_argument("path")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    common(p)
    p.set_defaults(func=cmd_analyze, format="text")

    p = sub.add_parser("construct", help="write a named or random code to a file")
    p.add_argument("kind", help="mrd | qmrd | example | random | mat-of-subspace")
    p.add_argument("params", nargs="*", help="key=value parameters (q, n, m, d, t, vectors)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the identities over a parameter sweep")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--qmax", type=int, default=3)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--mmax", type=int, default=3)
    p.add_argument("--tmax", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--code", help="check a single code file instead of the sweep")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("complete", help="complete a rank distribution from its parameters")
    p.add_argument("params", nargs="*", help="q= n= m= t= d= dperp= and known counts Ai=")
    p.add_argument("--closed-form", action="store_true", help="MRD / dually QMRD closed form")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("expand", help="matrix code associated to a vector code")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.add_argument("--basis", help="comma separated basis elements of the extension field")
    p.add_argument("--check", action="store_true", help="compare distributions of code, dual and expansion")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("dual", help="write the dual of a code")
    p.add_argument("path")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dual)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args, out)
    except InvariantViolation as exc:
        log.error("invariant violated: %s", exc)
        return EXIT_FAIL
    except TrivialCode as exc:
        log.error("%s", exc)
        return EXIT_TRIVIAL
    except (EnumerationTooLarge, TooLarge) as exc:
        log.error("%s (raise --cap or RANKMETRIC_CAP)", exc)
        return EXIT_CAP
    except InputError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except RankMetricError as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
