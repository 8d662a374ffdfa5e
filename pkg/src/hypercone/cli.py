"""Command-line front end.

Reports go to stdout as deterministic JSON, diagnostics to stderr.  Exit
codes: 0 true/success, 1 false/negative verdict, 2 input error, 3
precondition violation.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .errors import InputError, NotRealRootedError, PreconditionError
from .hyperbolicity import HyperbolicContext, check_hyperbolic, derivative_context, eigenvalue_poly, in_cone
from .matroid import (
    UniformSpec,
    equals_uniform,
    gurvits_rank,
    is_polymatroid,
    is_unimodular_realization,
    members,
    unimodular_search,
)
from .poly import Polynomial, elementary_symmetric, polar, product_of_forms
from .serialize import (
    ModelFile,
    dumps,
    encode_forms,
    encode_matrix,
    encode_pencil,
    encode_point,
    encode_polynomial,
    encode_rank,
    encode_univariate,
    parse_model,
    parse_point,
)
from .spectra import (
    e2_arrowhead,
    e2_target,
    is_psd,
    normalize_forms,
    pencil_det,
    pencil_eval,
    realization_pencil,
    renegar_pencil,
)

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


def _poly_report(p: Polynomial, names=None) -> dict:
    return {"terms": encode_polynomial(p), "text": p.to_str(names)}


def _as_polynomial(model: ModelFile) -> Polynomial:
    if model.kind == "polynomial":
        return model.payload
    if model.kind == "forms":
        return product_of_forms(model.payload)
    if model.kind == "pencil":
        return pencil_det(model.payload)
    raise InputError(f"expected a polynomial, forms or pencil model, got kind {model.kind!r}")


def _check_length(x, n: int, what: str) -> None:
    if len(x) != n:
        raise InputError(f"{what} has length {len(x)}, model has {n} variables")


def _subset(mask: int) -> list[int]:
    return [i + 1 for i in members(mask)]


def cmd_polar(args) -> tuple[dict, int]:
    model = parse_model(args.input)
    p = _as_polynomial(model)
    e = parse_point(args.dir)
    _check_length(e, p.nvars, "direction")
    r = polar(p, e, args.order)
    return {
        "input": _poly_report(p, model.variables),
        "direction": encode_point(e),
        "order": args.order,
        "polar": _poly_report(r, model.variables),
    }, EXIT_TRUE


def cmd_hyp_check(args) -> tuple[dict, int]:
    model = parse_model(args.input)
    p = _as_polynomial(model)
    e = parse_point(args.dir)
    _check_length(e, p.nvars, "direction")
    v = check_hyperbolic(p, e, args.samples, args.seed, jobs=args.jobs)
    report = {
        "hyperbolic": v.hyperbolic,
        "samples": v.samples,
        "seed": v.seed,
        "certificate": "evidence" if v.hyperbolic else "proof",
        "witness": None if v.witness is None else encode_point(v.witness),
        "witness_index": v.witness_index,
    }
    return report, EXIT_TRUE if v.hyperbolic else EXIT_FALSE


def cmd_member(args) -> tuple[dict, int]:
    model = parse_model(args.input)
    p = _as_polynomial(model)
    e = parse_point(args.dir)
    x = parse_point(args.point)
    _check_length(e, p.nvars, "direction")
    _check_length(x, p.nvars, "point")
    ctx = derivative_context(HyperbolicContext(p, e), args.derivative)
    mode = "open" if args.open else "closed"
    member = in_cone(ctx, x, mode)
    report = {
        "point": encode_point(x),
        "direction": encode_point(e),
        "derivative": args.derivative,
        "mode": mode,
        "member": member,
        "eigenvalue_poly": encode_univariate(eigenvalue_poly(ctx, x)),
    }
    return report, EXIT_TRUE if member else EXIT_FALSE


def cmd_renegar(args) -> tuple[dict, int]:
    model = parse_model(args.forms)
    if model.kind != "forms":
        raise InputError(f"--forms expects a forms model, got kind {model.kind!r}")
    e = parse_point(args.dir)
    _check_length(e, model.nvars, "direction")
    forms = normalize_forms(model.payload, e)
    pencil = renegar_pencil(forms, e)
    report = {
        "direction": encode_point(e),
        "normalized_forms": encode_forms(forms),
        "pencil": encode_pencil(pencil),
    }
    code = EXIT_TRUE
    if args.verify:
        det = pencil_det(pencil)
        pol = polar(product_of_forms(forms), e, 1)
        report.update(
            equal=det == pol,
            det=_poly_report(det, model.variables),
            polar=_poly_report(pol, model.variables),
        )
        code = EXIT_TRUE if det == pol else EXIT_FALSE
    return report, code


def cmd_binet(args) -> tuple[dict, int]:
    model = parse_model(args.realization)
    if model.kind != "realization":
        raise InputError(f"--realization expects a realization model, got kind {model.kind!r}")
    pencil, bases = realization_pencil(model.payload)
    det = pencil_det(pencil)
    report = {
        "realization": encode_matrix(model.payload.entries),
        "pencil": encode_pencil(pencil),
        "bases": _poly_report(bases, model.variables),
        "det": _poly_report(det, model.variables),
        "equal": det == bases,
    }
    return report, EXIT_TRUE if det == bases else EXIT_FALSE


def cmd_polymatroid(args) -> tuple[dict, int]:
    model = parse_model(args.input)
    report: dict = {}
    if model.kind == "rank":
        rk = model.payload
    else:
        if args.dir is None:
            raise InputError("--dir is required unless the input is a rank table")
        p = _as_polynomial(model)
        e = parse_point(args.dir)
        _check_length(e, p.nvars, "direction")
        rk = gurvits_rank(HyperbolicContext(p, e), strict_orthant=args.strict_orthant)
        report["direction"] = encode_point(e)
    check = is_polymatroid(rk)
    report.update(encode_rank(rk))
    report.update(
        polymatroid=check.polymatroid,
        matroid=check.matroid,
        violation=None
        if check.violation is None
        else {"I": _subset(check.violation[0]), "J": _subset(check.violation[1])},
        cardinality_violation=None
        if check.cardinality_violation is None
        else _subset(check.cardinality_violation),
    )
    uniform = [k for k in range(rk.n + 1) if equals_uniform(rk, UniformSpec(k, rk.n))]
    report["uniform_k"] = uniform[0] if uniform else None
    return report, EXIT_TRUE if check.polymatroid else EXIT_FALSE


def cmd_uniform_search(args) -> tuple[dict, int]:
    spec = UniformSpec(args.k, args.n)
    res = unimodular_search(spec, jobs=args.jobs)
    report = {
        "k": spec.k,
        "n": spec.n,
        "found": res.found,
        "searched": res.searched,
        "witness": None if res.witness is None else encode_matrix(res.witness.entries),
        "verified": None if res.witness is None else is_unimodular_realization(res.witness, spec),
    }
    return report, EXIT_TRUE if res.found else EXIT_FALSE


def cmd_e2_rep(args) -> tuple[dict, int]:
    n = args.n
    pencil = e2_arrowhead(n, literal_paper_matrix=args.literal_paper_matrix)
    det = pencil_det(pencil)
    e1 = elementary_symmetric(n, 1)
    if args.literal_paper_matrix:
        claimed = (e1 ** (n - 2) * elementary_symmetric(n, 2)).scale(2)
    else:
        claimed = e2_target(n)
    difference = det - claimed
    xn = Polynomial.variable(n, n - 1)
    pd = is_psd(pencil_eval(pencil, (1,) * n), strict=True)
    report = {
        "n": n,
        "literal_paper_matrix": args.literal_paper_matrix,
        "size": pencil.size,
        "pencil": encode_pencil(pencil),
        "det": _poly_report(det),
        "claimed": _poly_report(claimed),
        "equal": difference.is_zero(),
        "difference": _poly_report(difference),
        "difference_is_e1_power_times_xn_squared": difference == e1 ** (n - 2) * xn * xn,
        "strictly_pd_at_ones": pd,
    }
    return report, EXIT_TRUE if difference.is_zero() and pd else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercone",
        description="Exact hyperbolic polynomials, derivative cones and spectrahedral representations.",
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for sampling/search")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polar", help="i-th polar of a polynomial")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("-i", dest="order", type=int, required=True)
    p.set_defaults(func=cmd_polar)

    p = sub.add_parser("hyp-check", help="sampled hyperbolicity test")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_hyp_check)

    p = sub.add_parser("member", help="hyperbolicity / derivative cone membership")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--derivative", type=int, default=0)
    p.add_argument("--open", action="store_true")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("renegar", help="spectrahedral pencil of the first derivative cone")
    p.add_argument("--forms", required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_renegar)

    p = sub.add_parser("binet", help="Cauchy-Binet pencil of a realization")
    p.add_argument("--realization", required=True)
    p.set_defaults(func=cmd_binet)

    p = sub.add_parser("polymatroid", help="rank function of a hyperbolic polynomial")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--dir")
    p.add_argument("--strict-orthant", action="store_true")
    p.set_defaults(func=cmd_polymatroid)

    p = sub.add_parser("uniform-search", help="search unimodular realizations of U_{k,n}")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_uniform_search)

    p = sub.add_parser("e2-rep", help="arrowhead representation of 2 E_1^(n-1) E_2")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--literal-paper-matrix", action="store_true")
    p.set_defaults(func=cmd_e2_rep)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, code = args.func(args)
    except NotRealRootedError as exc:
        print(f"error: context is not hyperbolic: {exc}", file=stderr)
        return EXIT_PRECONDITION
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"error: precondition violated: {exc}", file=stderr)
        return EXIT_PRECONDITION
    report = {"command": args.command, **report}
    stdout.write(dumps(report))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
