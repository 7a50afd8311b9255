"""Command-line front end: ``ideal-interp <command> -i FILE [options]``."""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from .conditions import apply_functional, moller_vanishing_gb, vanishing_lex_family
from .errors import IdealInterpError, NotInUniversalClass
from .groebner import GroebnerBasis, buchberger_reduced, classify_universal, escalier, lex_escalier_family
from .mindegree import minimal_degree_check, projector_minimal_degree
from .order_ideal import OrderIdeal
from .poly import LEX1, MonomialOrder, Polynomial
from .problem import ProblemSpec, load_problem
from .projector import (
    IdealProjector,
    certify_good_formula,
    check_ideal_projector_laws,
    error_decompose,
    project,
    projector_from_conditions,
    projector_from_corner_images,
    random_polynomial,
)

COMMANDS = (
    "gbasis",
    "escalier",
    "classify",
    "interpolate",
    "decompose",
    "certify",
    "minimal-degree",
    "check-laws",
)

EXIT_OK, EXIT_ERROR, EXIT_NOT_UNIVERSAL = 0, 1, 2


@dataclass
class ResultDocument:
    command: str
    data: dict[str, Any]
    lines: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def to_json(self) -> str:
        return json.dumps({"command": self.command, **self.data}, indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        return "\n".join(self.lines)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------
def _render(spec: ProblemSpec, f: Polynomial) -> str:
    return f.render(spec.variables)


def _monomial_text(spec: ProblemSpec, e) -> str:
    return Polynomial.monomial(e).render(spec.variables)


def _escalier_list(spec: ProblemSpec, O: OrderIdeal) -> list[str]:
    return [_monomial_text(spec, e) for e in O.sorted(LEX1)]


def _ideal_generators(spec: ProblemSpec) -> list[Polynomial]:
    return [Polynomial.monomial(a) - img for a, img in spec.corner_images.items()]


def _basis(spec: ProblemSpec, order: MonomialOrder) -> GroebnerBasis:
    if spec.conditions is not None:
        return moller_vanishing_gb(spec.conditions, order)
    return buchberger_reduced(_ideal_generators(spec), order)


def _projector(spec: ProblemSpec) -> IdealProjector:
    if spec.conditions is not None:
        return projector_from_conditions(spec.conditions)
    return projector_from_corner_images(spec.corner_images)


def _functions(spec: ProblemSpec, expr: str | None) -> list[tuple[str, Polynomial]]:
    sources = [expr] if expr is not None else list(spec.test_functions)
    if not sources:
        raise IdealInterpError("no function given: pass -f EXPR or list test_functions in the problem file")
    return [(src, spec.parse(src)) for src in sources]


def _basis_doc(spec: ProblemSpec, G: GroebnerBasis) -> dict[str, Any]:
    return {
        "order": G.order.name,
        "basis": [_render(spec, g) for g in G.generators],
        "leading_monomials": [_monomial_text(spec, e) for e in G.leading_exponents],
    }


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------
def _cmd_gbasis(spec, opts) -> ResultDocument:
    G = _basis(spec, opts["order"])
    doc = _basis_doc(spec, G)
    lines = [f"reduced Groebner basis ({G.order.name}):"] + [f"  g{j + 1} = {p}" for j, p in enumerate(doc["basis"])]
    return ResultDocument("gbasis", doc, lines)


def _cmd_escalier(spec, opts) -> ResultDocument:
    if opts["all_lex"]:
        fam = _lex_family(spec)
        items = [
            {"order": G.order.name, "escalier": _escalier_list(spec, O)}
            for G, O in zip(fam.bases, fam.escaliers)
        ]
        lines = [f"{it['order']}: {{{', '.join(it['escalier'])}}}" for it in items]
        lines.append(f"all equal: {str(fam.all_equal).lower()}")
        return ResultDocument("escalier", {"family": items, "all_equal": fam.all_equal}, lines)
    G = _basis(spec, opts["order"])
    O = escalier(G)
    mons = _escalier_list(spec, O)
    return ResultDocument(
        "escalier",
        {"order": G.order.name, "escalier": mons, "size": len(O)},
        [f"escalier ({G.order.name}, {len(O)} monomials): {{{', '.join(mons)}}}"],
    )


def _lex_family(spec: ProblemSpec):
    if spec.conditions is not None:
        return vanishing_lex_family(spec.conditions)
    return lex_escalier_family(_ideal_generators(spec))


def _cmd_classify(spec, opts) -> ResultDocument:
    G = _basis(spec, LEX1)
    structural = classify_universal(G)
    fam = _lex_family(spec)
    verdict = structural and fam.all_equal
    data = {
        "structural": structural,
        "lex_family": fam.all_equal,
        "agree": structural == fam.all_equal,
        "universal": verdict,
        "escaliers": {B.order.name: _escalier_list(spec, O) for B, O in zip(fam.bases, fam.escaliers)},
    }
    lines = [
        f"componentwise shape test: {str(structural).lower()}",
        f"lex escalier family test: {str(fam.all_equal).lower()}",
        f"universal class: {str(verdict).lower()}",
    ]
    return ResultDocument("classify", data, lines, EXIT_OK if verdict else EXIT_NOT_UNIVERSAL)


def _cmd_interpolate(spec, opts) -> ResultDocument:
    P = _projector(spec)
    results = []
    lines = []
    for src, f in _functions(spec, opts["expr"]):
        Pf = project(P, f)
        entry = {"f": src, "Pf": _render(spec, Pf), "error": _render(spec, f - Pf)}
        if spec.conditions is not None:
            entry["interpolates"] = all(
                apply_functional(lam, Pf) == apply_functional(lam, f) for lam in spec.conditions
            )
        results.append(entry)
        lines.append(f"f = {src}")
        lines.append(f"  Pf     = {entry['Pf']}")
        lines.append(f"  f - Pf = {entry['error']}")
    return ResultDocument("interpolate", {"results": results}, lines)


def _cmd_decompose(spec, opts) -> ResultDocument:
    P = _projector(spec)
    basis = [_render(spec, g) for g in P.generators]
    results = []
    lines = ["basis:"] + [f"  g{j + 1} = {g}" for j, g in enumerate(basis)]
    for src, f in _functions(spec, opts["expr"]):
        dec = error_decompose(P, f)
        coeffs = [_render(spec, a) for a in dec.coefficients]
        results.append({"f": src, "coefficients": coeffs, "residual_check": dec.residual_check})
        terms = [f"({c})*g{j + 1}" for j, c in enumerate(coeffs) if c != "0"]
        lines.append(f"f = {src}")
        lines.append(f"  f - Pf = {' + '.join(terms) if terms else '0'}")
        lines.append(f"  identity verified: {str(dec.residual_check).lower()}")
    return ResultDocument("decompose", {"basis": basis, "results": results}, lines)


def _cmd_certify(spec, opts) -> ResultDocument:
    P = _projector(spec)
    bound = opts["degree_bound"]
    if bound is None:
        bound = spec.options.get("degree_bound")
    cert = certify_good_formula(P, bound)
    data = {
        "basis": [_render(spec, g) for g in P.generators],
        "duals": [_render(spec, h) for h in cert.duals],
        "kronecker_ok": cert.kronecker_ok,
        "kernel_containment_ok": cert.kernel_containment_ok,
        "checked_degree_bound": cert.checked_degree_bound,
        "good_formula": cert.ok,
        "failures": list(cert.failures),
    }
    lines = [f"  H{j + 1} = {h}   for g{j + 1} = {g}" for j, (h, g) in enumerate(zip(data["duals"], data["basis"]))]
    lines = ["dual operators:"] + lines + [
        f"H_j(D) g_k = delta_jk: {str(cert.kronecker_ok).lower()}",
        f"A_j vanishes off the corner multiples (degree <= {cert.checked_degree_bound}): "
        f"{str(cert.kernel_containment_ok).lower()}",
        f"good error formula: {str(cert.ok).lower()}",
    ] + [f"  failure: {msg}" for msg in cert.failures]
    return ResultDocument("certify", data, lines, EXIT_OK if cert.ok else EXIT_ERROR)


def _cmd_minimal_degree(spec, opts) -> ResultDocument:
    P = _projector(spec)
    if spec.conditions is not None:
        rep = minimal_degree_check(spec.conditions, P.escalier, P)
    else:
        rep = projector_minimal_degree(P)
    data = {
        "r": rep.r,
        "n": rep.n,
        "rank_lower": rep.rank_lower,
        "degree_reducing": rep.degree_reducing,
        "minimal": rep.minimal,
        "escalier": _escalier_list(spec, P.escalier),
    }
    lines = [
        f"top degree r = {rep.r}, n = {rep.n}",
        f"rank over all monomials of degree <= {rep.r - 1}: {rep.rank_lower}",
        f"degree reducing: {str(rep.degree_reducing).lower()}",
        f"minimal degree: {str(rep.minimal).lower()}",
    ]
    ok = rep.degree_reducing and rep.minimal
    return ResultDocument("minimal-degree", data, lines, EXIT_OK if ok else EXIT_ERROR)


def _cmd_check_laws(spec, opts) -> ResultDocument:
    P = _projector(spec)
    rng = random.Random(opts["seed"])
    trials = opts["trials"]
    law1 = law2 = idem = interp = 0
    for _ in range(trials):
        f = random_polynomial(rng, spec.dim, 6)
        g = random_polynomial(rng, spec.dim, 6)
        res = check_ideal_projector_laws(P, f, g)
        law1 += not res.law1.is_zero()
        law2 += not res.law2.is_zero()
        Pf = project(P, f)
        idem += project(P, Pf) != Pf
        if spec.conditions is not None:
            interp += any(apply_functional(lam, Pf) != apply_functional(lam, f) for lam in spec.conditions)
    data = {
        "trials": trials,
        "seed": opts["seed"],
        "law1_failures": law1,
        "law2_failures": law2,
        "idempotence_failures": idem,
        "interpolation_failures": interp if spec.conditions is not None else None,
    }
    lines = [
        f"{trials} random pairs (seed {opts['seed']}, degree <= 6)",
        f"P(fg) = P(f Pg) failures: {law1}",
        f"P'(fg) = f P'(g) + P'(f Pg) failures: {law2}",
        f"P^2 = P failures: {idem}",
    ]
    if spec.conditions is not None:
        lines.append(f"interpolation failures: {interp}")
    bad = law1 + law2 + idem + interp
    return ResultDocument("check-laws", data, lines, EXIT_OK if bad == 0 else EXIT_ERROR)


_DISPATCH = {
    "gbasis": _cmd_gbasis,
    "escalier": _cmd_escalier,
    "classify": _cmd_classify,
    "interpolate": _cmd_interpolate,
    "decompose": _cmd_decompose,
    "certify": _cmd_certify,
    "minimal-degree": _cmd_minimal_degree,
    "check-laws": _cmd_check_laws,
}


def run_command(
    cmd: str,
    spec: ProblemSpec,
    expr: str | None = None,
    order: str | MonomialOrder | None = None,
    all_lex: bool = False,
    degree_bound: int | None = None,
    seed: int = 0,
    trials: int = 200,
) -> ResultDocument:
    """Run one subcommand on a loaded problem and return its structured result."""
    if cmd not in _DISPATCH:
        raise ValueError(f"unknown command {cmd!r}")
    if order is None:
        order = spec.order
    elif isinstance(order, str):
        order = MonomialOrder.from_name(order, spec.dim)
    opts = {
        "expr": expr,
        "order": order,
        "all_lex": all_lex,
        "degree_bound": degree_bound,
        "seed": seed,
        "trials": trials,
    }
    return _DISPATCH[cmd](spec, opts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ideal-interp",
        description="Ideal projectors, good error formulas and minimal-degree checks over the rationals.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("-i", "--input", required=True, metavar="FILE", help="JSON problem file")
    parser.add_argument("-f", "--function", dest="expr", metavar="EXPR", help="polynomial to process")
    parser.add_argument("--order", help="lex1 ... lexd or grlex (default: problem option, else lex1)")
    parser.add_argument("--all-lex", action="store_true", help="escalier under every Lex(i)")
    parser.add_argument("--degree-bound", type=int, metavar="N", help="truncation degree for certify")
    parser.add_argument("--seed", type=int, default=0, help="random seed for check-laws")
    parser.add_argument("--trials", type=int, default=200, help="random pairs for check-laws")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = load_problem(args.input)
        result = run_command(
            args.command,
            spec,
            expr=args.expr,
            order=args.order,
            all_lex=args.all_lex,
            degree_bound=args.degree_bound,
            seed=args.seed,
            trials=args.trials,
        )
    except NotInUniversalClass as exc:
        _report_error(exc, args.json)
        return EXIT_NOT_UNIVERSAL
    except IdealInterpError as exc:
        _report_error(exc, args.json)
        return EXIT_ERROR
    except ValueError as exc:
        _report_error(exc, args.json)
        return EXIT_ERROR
    print(result.to_json() if args.json else result.to_text())
    return result.exit_code


def _report_error(exc: Exception, as_json: bool) -> None:
    code = getattr(exc, "code", type(exc).__name__)
    if as_json:
        print(json.dumps({"error": code, "message": str(exc)}, sort_keys=True))
    print(f"error [{code}]: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
