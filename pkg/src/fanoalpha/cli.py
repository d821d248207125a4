"""Command-line frontend.

Parses JSON inputs, dispatches to the library, and emits either aligned
text tables or machine-readable JSON certificates.  All reported numbers
are exact rationals in "p/q" form; --decimal appends a 12-digit
approximation that is clearly marked approximate.  JSON output is
deterministic: fixed key order, canonical rational strings.

Exit codes: 0 on success or a consistent check, 1 when a verification or
consistency check fails (the failing certificate is still emitted), 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .beta_invariants import (
    beta_from_profile,
    beta_linear_subspace,
    integral_identity_check,
    lct_lower_bound,
    truncated_integral,
    truncated_profile,
)
from .catalog import GeometryRecord, builtin_records, load_record, load_records, validate_record
from .ci_model import CIModel, center_codimension, volume_polynomial_binomial, volume_polynomial_moving_fixed
from .exact_math import as_rational, format_rational
from .monomial_lct import (
    MonomialIdeal,
    dfem_check,
    is_integrally_closed,
    lct_monomial,
    length_quotient,
    multiplicity,
    newton_polyhedron,
    random_m_primary_ideal,
)
from .stability_criteria import (
    alpha_monotonicity_check,
    divisibility_test,
    fujita_volume_test,
    projective_space_from_top_alpha,
    stability_from_alpha_pair,
    top_alpha_volume_bound,
)

MAX_SWEEP = 16

NORMALIZATION_GRID = [
    (Fraction(1), Fraction(1)),
    (Fraction(1), Fraction(2)),
    (Fraction(1), Fraction(3, 2)),
    (Fraction(5), Fraction(1)),
    (Fraction(5), Fraction(2)),
    (Fraction(5), Fraction(3, 2)),
    (Fraction(17, 3), Fraction(1)),
    (Fraction(17, 3), Fraction(2)),
    (Fraction(17, 3), Fraction(3, 2)),
]


def _decimal(value: Fraction) -> str:
    return f"{float(value):.12f}"


def _rational_out(value: Fraction, decimal: bool) -> str:
    text = format_rational(value)
    if decimal:
        text += f" (approx {_decimal(value)})"
    return text


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def _emit_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> None:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    line = "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers))
    sys.stdout.write(line.rstrip() + "\n")
    sys.stdout.write("  ".join("-" * w for w in widths) + "\n")
    for row in rows:
        sys.stdout.write(
            "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() + "\n"
        )


def _mark(ok: bool) -> str:
    return "ok" if ok else "FAIL"


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON in {path}: {exc}") from None
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None


def _identity_rows(n_max: int) -> list[dict]:
    rows = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            moving_fixed = volume_polynomial_moving_fixed(CIModel(n, k))
            binomial_form = volume_polynomial_binomial(CIModel(n, k))
            formulas_agree = moving_fixed == binomial_form
            integral_ok = integral_identity_check(n, k) == 1 - Fraction(k, n + 1)
            normalization_ok = all(
                truncated_integral(CIModel(n, k, r=r, degree=d))
                == d * Fraction(k, (n + 1)) / r
                for d, r in NORMALIZATION_GRID
            )
            center_ok = center_codimension(binomial_form) == k
            beta_zero: Optional[bool] = None
            if n <= 8:
                beta_zero = beta_linear_subspace(n, k) == 0
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "formulas_agree": formulas_agree,
                    "integral_identity": integral_ok,
                    "normalization": normalization_ok,
                    "center_codimension": center_ok,
                    "beta_linear_zero": beta_zero,
                }
            )
    return rows


def _cmd_verify_identities(args) -> int:
    rows = _identity_rows(args.n_max)
    all_passed = all(
        all(v for key, v in row.items() if key not in ("n", "k") and v is not None)
        for row in rows
    )
    if args.output == "json":
        _emit_json({"n_max": args.n_max, "rows": rows, "all_passed": all_passed})
    else:
        _emit_table(
            ["n", "k", "two closed forms", "integral identity", "normalization",
             "center codim", "linear-subspace beta"],
            [
                [
                    str(row["n"]),
                    str(row["k"]),
                    _mark(row["formulas_agree"]),
                    _mark(row["integral_identity"]),
                    _mark(row["normalization"]),
                    _mark(row["center_codimension"]),
                    "-" if row["beta_linear_zero"] is None else _mark(row["beta_linear_zero"]),
                ]
                for row in rows
            ],
        )
        sys.stdout.write(f"all identities: {_mark(all_passed)}\n")
    return 0 if all_passed else 1


def _cmd_alpha_bound(args) -> int:
    model = CIModel(args.n, args.k)
    bound = lct_lower_bound(model)
    if args.output == "json":
        _emit_json(
            {
                "n": args.n,
                "k": args.k,
                "alpha_lower_bound": format_rational(bound),
                "assumption": "K-semistability asserted by caller",
            }
        )
    else:
        sys.stdout.write(_rational_out(bound, args.decimal) + "\n")
    return 0


def _parse_model(args) -> CIModel:
    if args.input:
        return CIModel.from_json(_load_json(args.input))
    if args.n is None or args.k is None:
        raise ValueError("need either --input or both --n and --k")
    return CIModel(args.n, args.k, r=as_rational(args.r), degree=as_rational(args.degree))


def _cmd_beta_ci(args) -> int:
    model = _parse_model(args)
    if args.integer_r and model.r.denominator != 1:
        raise ValueError(
            f"--integer-r: the anticanonical multiple r={model.r} is not an integer"
        )
    integral = truncated_integral(model)
    bound = lct_lower_bound(model)
    doc = {
        "model": model.to_json(),
        "volume_polynomial": [
            format_rational(c) for c in volume_polynomial_binomial(model).coefficients
        ],
        "truncated_integral": format_rational(integral),
        "lct_lower_bound": format_rational(bound),
    }
    if args.lct is not None:
        result = beta_from_profile(truncated_profile(model), as_rational(args.lct))
        doc["beta"] = result.to_json()
    if args.output == "json":
        _emit_json(doc)
    else:
        sys.stdout.write(f"model: n={model.n} k={model.k} r={model.r} degree={model.degree}\n")
        sys.stdout.write(f"volume polynomial: {volume_polynomial_binomial(model)}\n")
        sys.stdout.write(
            f"truncated volume integral: {_rational_out(integral, args.decimal)}\n"
        )
        sys.stdout.write(
            f"lct(X, (1/r)Z) lower bound (K-semistable case): "
            f"{_rational_out(bound, args.decimal)}\n"
        )
        if args.lct is not None:
            result = beta_from_profile(truncated_profile(model), as_rational(args.lct))
            kind = "upper bound (truncated)" if result.truncated else "exact"
            sys.stdout.write(
                f"beta with lct={args.lct}: {_rational_out(result.value, args.decimal)} "
                f"[{kind}]\n"
            )
    return 0


def _cmd_beta_linear(args) -> int:
    value = beta_linear_subspace(args.n, args.k)
    if args.output == "json":
        _emit_json(
            {
                "n": args.n,
                "k": args.k,
                "beta": format_rational(value),
                "lct": str(args.k),
                "exact": True,
            }
        )
    else:
        sys.stdout.write(
            f"beta of a codimension-{args.k} linear subspace of P^{args.n}: "
            f"{_rational_out(value, args.decimal)} (exact)\n"
        )
    return 0


def _ideal_from_args(args) -> MonomialIdeal:
    if not args.input:
        raise ValueError("need --input pointing to a monomial ideal JSON file")
    return MonomialIdeal.from_json(_load_json(args.input))


def _cmd_lct_monomial(args) -> int:
    ideal = _ideal_from_args(args)
    value = lct_monomial(ideal)
    polyhedron = newton_polyhedron(ideal)
    if args.output == "json":
        _emit_json(
            {
                "ideal": ideal.to_json(),
                "lct": format_rational(value),
                "facets": [
                    {"normal": list(f.normal), "offset": f.offset}
                    for f in polyhedron.facets
                ],
            }
        )
    else:
        sys.stdout.write(f"ideal: {ideal}\n")
        for facet in polyhedron.facets:
            sys.stdout.write(f"facet: {facet}\n")
        sys.stdout.write(f"lct: {_rational_out(value, args.decimal)}\n")
    return 0


def _cmd_mult_monomial(args) -> int:
    ideal = _ideal_from_args(args)
    mult = multiplicity(ideal)
    length = length_quotient(ideal)
    route = (
        "covolume"
        if len(ideal.generators) <= ideal.num_vars or is_integrally_closed(ideal)
        else "colength limit"
    )
    if args.output == "json":
        _emit_json(
            {
                "ideal": ideal.to_json(),
                "multiplicity": mult,
                "length": length,
                "route": route,
            }
        )
    else:
        sys.stdout.write(f"ideal: {ideal}\n")
        sys.stdout.write(f"multiplicity: {mult} (route: {route})\n")
        sys.stdout.write(f"colength: {length}\n")
    return 0


def _cmd_dfem_sweep(args) -> int:
    if args.count < 1:
        raise ValueError("--count must be positive")
    rng = random.Random(args.seed)
    rows = []
    all_ok = True
    for _ in range(args.count):
        d = rng.randint(1, min(args.d_max, 3))
        ideal = random_m_primary_ideal(rng, d, args.max_exp, rng.randint(0, 3))
        cert = dfem_check(ideal)
        all_ok = all_ok and cert.satisfied
        rows.append((ideal, cert))
    if args.output == "json":
        _emit_json(
            {
                "seed": args.seed,
                "count": args.count,
                "results": [
                    {"ideal": ideal.to_json(), **cert.to_json()} for ideal, cert in rows
                ],
                "all_satisfied": all_ok,
            }
        )
    else:
        _emit_table(
            ["ideal", "lct", "mult", "lct^d * mult", "d^d", "ok"],
            [
                [
                    str(ideal),
                    format_rational(cert.lct),
                    str(cert.multiplicity),
                    format_rational(cert.lhs),
                    str(cert.rhs),
                    _mark(cert.satisfied),
                ]
                for ideal, cert in rows
            ],
        )
        sys.stdout.write(f"all satisfied: {_mark(all_ok)}\n")
    return 0 if all_ok else 1


def _parse_bounds_json(obj) -> dict:
    if not isinstance(obj, dict):
        raise ValueError("field 'alpha_bounds': expected an object keyed by codimension")
    bounds = {}
    for key, pair in obj.items():
        try:
            k = int(key)
        except ValueError:
            raise ValueError(f"alpha bound key {key!r} is not an integer") from None
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValueError(f"alpha bound for k={k} must be a [lower, upper] pair")
        bounds[k] = (as_rational(pair[0]), as_rational(pair[1]))
    return bounds


def _cmd_stability_check(args) -> int:
    request = _load_json(args.input) if args.input else {}
    criterion = request.get("criterion", args.criterion)
    if criterion is None:
        raise ValueError("need --criterion or an --input request with a 'criterion' field")

    def pick(name, flag, default=None):
        if name in request:
            return request[name]
        return flag if flag is not None else default

    if criterion == "fujita":
        n = int(pick("n", args.n))
        verdict = fujita_volume_test(
            n, as_rational(pick("vol", args.vol)), bool(pick("smooth", args.smooth, False))
        )
    elif criterion == "top-alpha-volume":
        n = int(pick("n", args.n))
        verdict = top_alpha_volume_bound(
            n, as_rational(pick("vol", args.vol)), as_rational(pick("alpha_n", args.alpha_n))
        )
    elif criterion == "top-alpha-projective":
        n = int(pick("n", args.n))
        verdict = projective_space_from_top_alpha(
            n,
            as_rational(pick("alpha_n", args.alpha_n)),
            bool(pick("smooth", args.smooth, False)),
            bool(pick("k_semistable", args.k_semistable, False)),
        )
    elif criterion == "alpha-pair":
        n = int(pick("n", args.n))
        verdict = stability_from_alpha_pair(
            n, as_rational(pick("alpha1", args.alpha1)), as_rational(pick("alpha2", args.alpha2))
        )
    elif criterion == "divisibility":
        n = int(pick("n", args.n))
        k = int(pick("k", args.k))
        verdict = divisibility_test(
            n,
            k,
            as_rational(pick("l", args.l)),
            bool(pick("smooth", args.smooth, False)),
            bool(pick("k_semistable", args.k_semistable, False)),
        )
    elif criterion == "monotonicity":
        raw = request.get("alpha_bounds")
        if raw is None:
            raise ValueError("monotonicity check needs an --input request with 'alpha_bounds'")
        verdict = alpha_monotonicity_check(_parse_bounds_json(raw))
    else:
        raise ValueError(f"unknown criterion {criterion!r}")

    if args.output == "json":
        _emit_json(verdict.to_json())
    else:
        sys.stdout.write(f"criterion: {verdict.criterion}\n")
        sys.stdout.write(f"verdict: {verdict.verdict.value}\n")
        for note in verdict.assumptions:
            sys.stdout.write(f"assumption: {note}\n")
        for line in verdict.trace:
            sys.stdout.write(f"trace: {line}\n")
    return 1 if verdict.is_failure else 0


def _records_from_args(args) -> list[GeometryRecord]:
    if args.input:
        import os

        if os.path.isdir(args.input):
            return load_records(args.input)
        return [load_record(args.input)]
    return builtin_records()


def _cmd_catalog_show(args) -> int:
    records = _records_from_args(args)
    if args.name:
        records = [r for r in records if r.name == args.name]
        if not records:
            raise ValueError(f"no geometry record named {args.name!r}")
    if args.output == "json":
        _emit_json([r.to_json() for r in records])
    else:
        rows = []
        for record in records:
            bounds = "; ".join(
                f"k={k}: [{format_rational(b.lower)}, {format_rational(b.upper)}]"
                + (" exact" if b.exact else "")
                + (" strict-lower" if b.strict_lower else "")
                for k, b in sorted(record.alpha_bounds.items())
            )
            rows.append(
                [
                    record.name,
                    str(record.n),
                    format_rational(record.vol),
                    {True: "yes", False: "no", None: "?"}[record.k_semistable],
                    bounds or "-",
                ]
            )
        _emit_table(["name", "n", "volume", "K-ss", "alpha bounds"], rows)
    return 0


def _cmd_catalog_validate(args) -> int:
    records = _records_from_args(args)
    results = [(record, validate_record(record)) for record in records]
    all_ok = all(not verdict.is_failure for _, verdict in results)
    if args.output == "json":
        _emit_json(
            {
                "records": [
                    {"name": record.name, **verdict.to_json()} for record, verdict in results
                ],
                "all_consistent": all_ok,
            }
        )
    else:
        _emit_table(
            ["name", "verdict", "criterion"],
            [
                [
                    record.name,
                    "consistent" if not verdict.is_failure else verdict.verdict.value,
                    verdict.criterion,
                ]
                for record, verdict in results
            ],
        )
        sys.stdout.write(f"all consistent: {_mark(all_ok)}\n")
    return 0 if all_ok else 1


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", choices=("table", "json"), default="table")
    parser.add_argument(
        "--decimal",
        action="store_true",
        help="append 12-digit decimal approximations (marked approximate)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanoalpha",
        description="Exact-arithmetic alpha/beta invariants, monomial log canonical "
        "thresholds, and stability certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-identities", help="check the closed-form identities on a sweep")
    p.add_argument("--n-max", type=int, default=10)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_verify_identities)

    p = sub.add_parser("alpha-bound", help="the K-semistable lower bound k/(n+1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_alpha_bound)

    p = sub.add_parser("beta-ci", help="truncated integral and beta data of a model")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", default="1", help="anticanonical multiple, rational 'p/q'")
    p.add_argument("--degree", default="1", help="top self-intersection of L, rational")
    p.add_argument("--lct", help="optional lct value to evaluate beta with")
    p.add_argument("--input", help="JSON file with the model")
    p.add_argument(
        "--integer-r", action="store_true", help="reject models whose r is not an integer"
    )
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_beta_ci)

    p = sub.add_parser("beta-linear", help="exact beta of a linear subspace of P^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_beta_linear)

    p = sub.add_parser("lct-monomial", help="log canonical threshold of a monomial ideal")
    p.add_argument("--input", required=True, help="JSON file with the ideal")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_lct_monomial)

    p = sub.add_parser("mult-monomial", help="multiplicity and colength of a monomial ideal")
    p.add_argument("--input", required=True, help="JSON file with the ideal")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_mult_monomial)

    p = sub.add_parser("dfem-sweep", help="threshold-multiplicity inequality on random ideals")
    p.add_argument("--count", type=int, default=60)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--d-max", type=int, default=3)
    p.add_argument("--max-exp", type=int, default=6)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_dfem_sweep)

    p = sub.add_parser("stability-check", help="run one stability criterion")
    p.add_argument(
        "--criterion",
        choices=(
            "fujita",
            "top-alpha-volume",
            "top-alpha-projective",
            "alpha-pair",
            "divisibility",
            "monotonicity",
        ),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--vol")
    p.add_argument("--alpha-n", dest="alpha_n")
    p.add_argument("--alpha1")
    p.add_argument("--alpha2")
    p.add_argument("--l")
    p.add_argument("--smooth", action="store_true", default=None)
    p.add_argument("--k-semistable", action="store_true", default=None)
    p.add_argument("--input", help="JSON request file")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_stability_check)

    p = sub.add_parser("catalog-show", help="print geometry records")
    p.add_argument("--name")
    p.add_argument("--input", help="record file or directory (defaults to builtins)")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_catalog_show)

    p = sub.add_parser("catalog-validate", help="validate geometry records")
    p.add_argument("--input", help="record file or directory (defaults to builtins)")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_catalog_validate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n_max", None) is not None and args.command == "verify-identities":
        if args.n_max < 1 or args.n_max > MAX_SWEEP:
            sys.stderr.write(f"error: --n-max must lie in 1..{MAX_SWEEP}\n")
            return 2
    try:
        return args.handler(args)
    except (ValueError, KeyError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def console_main() -> None:
    sys.exit(main())
