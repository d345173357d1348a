"""Config-driven check suites with machine-readable JSON reports.

Usage:
    curvlab run CONFIG [--seed N] [--samples N] [--tol X] [--report PATH] [--quiet]
    curvlab list-builtins

The config is a JSON object naming a signature, an optional complex or
quaternion structure, a set of named generators, the tensor to build from
them, and the checks to run.  Reports carry verdicts, max violations, and
witness data, echo the seed, and contain no timestamps, so identical inputs
produce byte-identical report bodies.

Exit codes: 0 all checks pass, 1 any check fails, 2 config or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

import numpy as np

from . import __version__
from .complex_structures import (
    ComplexStructure,
    QuaternionStructure,
    check_admissible,
    check_admissible_pair,
    nilpotent_null_pair,
    nilpotent_null_pair_partner,
    standard_complex_structure,
    standard_quaternion_structure,
)
from .curvature import (
    CurvatureTensor,
    check_gray_identity,
    check_J_invariance,
    check_symmetries,
    combine,
    from_self_adjoint,
    from_skew_adjoint,
)
from .jordan_ip import (
    OPERATOR_TOL,
    PlaneClass,
    SpectrumModel,
    SpectrumSpec,
    build_complex_pair_tensor,
    build_quaternionic_tensor,
    check_jordan_ip,
    check_jordan_ip_real,
    curvature_operator,
    sample_complex_lines,
    solve_constants,
    spectrum_of_JR,
)
from .pseudo_linalg import BilinearSpace, JordanInvariants

SCHEMA_VERSION = 1

GENERATOR_BUILTINS = (
    "identity",
    "standard_J",
    "quat_i",
    "quat_j",
    "quat_k",
    "nilpotent_null_pair",
    "nilpotent_null_pair_partner",
)

CHECK_NAMES = (
    "symmetries",
    "almost_complex",
    "gray",
    "jordan_ip_complex",
    "jordan_ip_real",
    "spectrum",
    "admissible",
    "admissible_pair",
    "solve_constants",
)

CHECKS_NEEDING_J = {
    "almost_complex",
    "gray",
    "jordan_ip_complex",
    "spectrum",
    "admissible",
    "admissible_pair",
    "solve_constants",
}


class ConfigError(Exception):
    """Invalid configuration; carries the offending field in the message."""


def list_builtins() -> str:
    lines = ["generators:"]
    lines += [f"  {name}" for name in GENERATOR_BUILTINS]
    lines.append("  (or an explicit matrix: {\"matrix\": [[...], ...]})")
    lines.append("checks:")
    lines += [f"  {name}" for name in CHECK_NAMES]
    return "\n".join(lines)


def _require(cfg: dict, field: str, kind, where: str = "config") -> Any:
    if field not in cfg:
        raise ConfigError(f"{where}: missing required field '{field}'")
    value = cfg[field]
    if not isinstance(value, kind):
        wanted = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise ConfigError(f"{where}.{field}: expected {wanted}, got {type(value).__name__}")
    return value


def _build_structures(
    space: BilinearSpace, structure: str
) -> tuple[ComplexStructure | None, QuaternionStructure | None]:
    if structure == "none":
        return None, None
    try:
        if structure == "complex":
            return standard_complex_structure(space), None
        if structure == "quaternion":
            quat = standard_quaternion_structure(space)
            return quat.as_complex, quat
    except ValueError as exc:
        raise ConfigError(f"config.structure: {exc}") from exc
    raise ConfigError(f"config.structure: unknown structure '{structure}'")


def _build_generator(
    name: str,
    spec: Any,
    space: BilinearSpace,
    J: ComplexStructure | None,
    quat: QuaternionStructure | None,
) -> np.ndarray:
    where = f"config.generators.{name}"
    if not isinstance(spec, dict):
        raise ConfigError(f"{where}: expected an object")
    if "builtin" in spec:
        builtin = spec["builtin"]
        if builtin == "identity":
            return np.eye(space.m)
        if builtin == "standard_J":
            if J is None:
                raise ConfigError(f"{where}: standard_J needs structure complex or quaternion")
            return J.J
        if builtin in ("quat_i", "quat_j", "quat_k"):
            if quat is None:
                raise ConfigError(f"{where}: {builtin} needs structure quaternion")
            return getattr(quat, builtin[-1])
        if builtin in ("nilpotent_null_pair", "nilpotent_null_pair_partner"):
            build = (
                nilpotent_null_pair
                if builtin == "nilpotent_null_pair"
                else nilpotent_null_pair_partner
            )
            try:
                return build(space)
            except ValueError as exc:
                raise ConfigError(f"{where}: {exc}") from exc
        raise ConfigError(f"{where}: unknown builtin '{builtin}'")
    if "matrix" in spec:
        mat = np.asarray(spec["matrix"], dtype=float)
        if mat.shape != (space.m, space.m):
            raise ConfigError(f"{where}: matrix has shape {mat.shape}, expected ({space.m}, {space.m})")
        return mat
    raise ConfigError(f"{where}: needs either 'builtin' or 'matrix'")


def _json_plane(plane) -> dict:
    return {"x": [float(v) for v in plane.x], "y": [float(v) for v in plane.y]}


def _json_invariants(inv: JordanInvariants) -> dict:
    return {
        "dimension": inv.dimension,
        "clusters": [
            {"eigenvalue": [lam.real, lam.imag], "multiplicity": mult}
            for lam, mult in inv.clusters
        ],
        "rank_sequences": [list(seq) for seq in inv.rank_sequences],
        "total_rank": inv.total_rank,
        "clustering_ambiguous": inv.clustering_ambiguous,
    }


def _json_spectrum(spec: SpectrumSpec) -> list[dict]:
    return [{"eigenvalue": lam, "multiplicity": mu} for lam, mu in spec.eigenvalues]


def _run_check(
    name: str,
    tensor: CurvatureTensor,
    generators: dict[str, np.ndarray],
    tensor_generator_names: list[str],
    pair_names: list[str] | None,
    J: ComplexStructure | None,
    space: BilinearSpace,
    samples: int,
    seed: int,
    tol: float,
) -> dict:
    if name in CHECKS_NEEDING_J and J is None:
        raise ConfigError(f"config.checks: '{name}' needs structure complex or quaternion")

    if name == "symmetries":
        report = check_symmetries(tensor)
        return {
            "pass": report.passed(tol),
            "max_violation": report.max_violation,
            "witness": {
                "antisymmetry": list(report.antisymmetry_witness),
                "pair_symmetry": list(report.pair_symmetry_witness),
                "bianchi": list(report.bianchi_witness),
            },
        }

    if name == "almost_complex":
        tensor_report = check_J_invariance(tensor, J, tol)
        planes = sample_complex_lines(J, PlaneClass.SPACELIKE, samples, seed)
        worst = 0.0
        witness = None
        for plane in planes:
            op = curvature_operator(tensor, plane)
            comm = float(np.max(np.abs(J.J @ op - op @ J.J)))
            if comm > worst:
                worst, witness = comm, plane
        passed = tensor_report.passed and worst <= tol
        out = {
            "pass": passed,
            "max_violation": max(tensor_report.max_violation, worst),
            "tensor_identity_violation": tensor_report.max_violation,
            "max_line_commutator": worst,
        }
        if not passed:
            out["witness"] = {
                "quadruple": list(tensor_report.witness),
                "line": _json_plane(witness) if witness is not None else None,
            }
        return out

    if name == "gray":
        report = check_gray_identity(tensor, J, tol)
        out = {"pass": report.passed, "max_violation": report.max_violation}
        if not report.passed:
            out["witness"] = {"quadruple": list(report.witness)}
        return out

    if name == "jordan_ip_complex":
        report = check_jordan_ip(tensor, J, n=samples, seed=seed, tol=max(tol, OPERATOR_TOL))
        out = {
            "pass": report.constant,
            "constant": report.constant,
            "rank": report.rank,
            "invariants_by_type": {
                cls.value: _json_invariants(inv) for cls, inv in report.invariants_by_type.items()
            },
            "seed": report.seed,
        }
        if report.witness is not None:
            out["witness"] = {
                "anchor": _json_plane(report.witness[0]),
                "offender": _json_plane(report.witness[1]),
            }
        return out

    if name == "jordan_ip_real":
        report = check_jordan_ip_real(tensor, n=samples, seed=seed, tol=max(tol, OPERATOR_TOL))
        out = {
            "pass": report.constant and report.rank_type_independent,
            "constant_by_type": {cls.value: ok for cls, ok in report.constant_by_type.items()},
            "rank_by_type": {cls.value: r for cls, r in report.rank_by_type.items()},
            "rank_type_independent": report.rank_type_independent,
            "invariants_by_type": {
                cls.value: _json_invariants(inv) for cls, inv in report.invariants_by_type.items()
            },
            "seed": report.seed,
        }
        if report.witnesses:
            out["witness"] = {
                cls.value: {"anchor": _json_plane(a), "offender": _json_plane(b)}
                for cls, (a, b) in report.witnesses.items()
            }
        return out

    if name == "spectrum":
        planes = sample_complex_lines(J, PlaneClass.SPACELIKE, samples, seed)
        try:
            spectra = [spectrum_of_JR(tensor, J, plane) for plane in planes]
        except Exception as exc:
            return {"pass": False, "error": str(exc)}
        anchor = spectra[0]
        consistent = all(anchor.matches(s, max(tol, 1e-8)) for s in spectra[1:])
        return {
            "pass": consistent,
            "consistent": consistent,
            "spectrum": _json_spectrum(anchor),
            "seed": seed,
        }

    if name == "admissible":
        results = {}
        all_ok = True
        for gen_name, phi in generators.items():
            report = check_admissible(phi, J, tol)
            results[gen_name] = {
                "admissible": report.admissible,
                "class": report.admissible_class.value,
                "square_type": report.square_type.value,
                "residuals": report.residuals,
            }
            all_ok = all_ok and report.admissible
        return {"pass": all_ok, "generators": results}

    if name == "admissible_pair":
        names = pair_names or []
        if not names:
            seen: list[str] = []
            for gen_name in tensor_generator_names:
                if gen_name not in seen:
                    seen.append(gen_name)
            names = seen[:2]
        if len(names) != 2:
            raise ConfigError(
                "config.pair: admissible_pair needs two generators, either via 'pair' "
                "or at least two distinct generators in 'tensor'"
            )
        try:
            report = check_admissible_pair(
                generators[names[0]], generators[names[1]], J, n_lines=samples, seed=seed, tol=tol
            )
        except ValueError as exc:
            return {"pass": False, "pair": names, "error": str(exc)}
        return {
            "pass": report.admissible,
            "pair": names,
            "residuals": report.residuals,
            "min_line_rank": report.min_line_rank,
            "seed": report.seed,
        }

    if name == "solve_constants":
        plane = sample_complex_lines(J, PlaneClass.SPACELIKE, 1, seed)[0]
        try:
            measured = spectrum_of_JR(tensor, J, plane)
            if space.m % 4 == 0 and space.p % 4 == 0:
                model = SpectrumModel.QUATERNIONIC
                structures = standard_quaternion_structure(space)
                coeffs = solve_constants(measured, model)
                rebuilt = build_quaternionic_tensor(structures, *coeffs)
            else:
                model = SpectrumModel.COMPLEX_PAIR
                coeffs = solve_constants(measured, model)
                rebuilt = build_complex_pair_tensor(J, *coeffs)
            round_trip = spectrum_of_JR(rebuilt, J, plane)
            passed = measured.matches(round_trip, max(tol, 1e-8))
        except ValueError as exc:
            return {"pass": False, "error": str(exc)}
        return {
            "pass": passed,
            "model": model.value,
            "constants": [float(c) for c in coeffs],
            "spectrum": _json_spectrum(measured),
            "round_trip_spectrum": _json_spectrum(round_trip),
        }

    raise ConfigError(f"config.checks: unknown check '{name}'")


def run(config_path: str, args: argparse.Namespace) -> tuple[int, dict]:
    try:
        with open(config_path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config: top level must be a JSON object")

    signature = _require(cfg, "signature", list)
    if len(signature) != 2 or not all(isinstance(v, int) for v in signature):
        raise ConfigError("config.signature: expected [p, q] with integer entries")
    structure = cfg.get("structure", "none")
    if not isinstance(structure, str):
        raise ConfigError("config.structure: expected a string")
    samples = args.samples if args.samples is not None else cfg.get("samples", 100)
    seed = args.seed if args.seed is not None else cfg.get("seed", 0)
    tol = args.tol if args.tol is not None else cfg.get("tol", 1e-10)
    if not isinstance(samples, int) or samples < 1:
        raise ConfigError("config.samples: expected a positive integer")
    if not isinstance(seed, int):
        raise ConfigError("config.seed: expected an integer")
    if not isinstance(tol, (int, float)) or not tol > 0:
        raise ConfigError("config.tol: expected a positive number")
    tol = float(tol)

    try:
        space = BilinearSpace(signature[0], signature[1])
    except ValueError as exc:
        raise ConfigError(f"config.signature: {exc}") from exc
    J, quat = _build_structures(space, structure)

    generator_specs = _require(cfg, "generators", dict)
    generators = {
        name: _build_generator(name, spec, space, J, quat)
        for name, spec in generator_specs.items()
    }

    tensor_terms = _require(cfg, "tensor", list)
    terms = []
    tensor_generator_names: list[str] = []
    for idx, term in enumerate(tensor_terms):
        where = f"config.tensor[{idx}]"
        if not isinstance(term, dict):
            raise ConfigError(f"{where}: expected an object")
        coeff = _require(term, "coefficient", (int, float), where)
        gen_name = _require(term, "generator", str, where)
        constructor = _require(term, "constructor", str, where)
        if gen_name not in generators:
            raise ConfigError(f"{where}.generator: '{gen_name}' is not declared in generators")
        if constructor not in ("self_adjoint", "skew_adjoint"):
            raise ConfigError(f"{where}.constructor: expected self_adjoint or skew_adjoint")
        build = from_self_adjoint if constructor == "self_adjoint" else from_skew_adjoint
        try:
            terms.append((float(coeff), build(space, generators[gen_name])))
        except ValueError as exc:
            raise ConfigError(f"{where}: {exc}") from exc
        tensor_generator_names.append(gen_name)
    if not terms:
        raise ConfigError("config.tensor: needs at least one term")
    tensor = combine(terms)

    check_names = _require(cfg, "checks", list)
    for name in check_names:
        if name not in CHECK_NAMES:
            raise ConfigError(f"config.checks: unknown check '{name}'")

    pair_names = cfg.get("pair")
    if pair_names is not None:
        if (
            not isinstance(pair_names, list)
            or len(pair_names) != 2
            or not all(isinstance(n, str) for n in pair_names)
        ):
            raise ConfigError("config.pair: expected a list of two generator names")
        for n in pair_names:
            if n not in generators:
                raise ConfigError(f"config.pair: '{n}' is not declared in generators")

    checks = {}
    for name in check_names:
        checks[name] = _run_check(
            name,
            tensor,
            generators,
            tensor_generator_names,
            pair_names,
            J,
            space,
            samples,
            seed,
            tol,
        )

    all_pass = all(result["pass"] for result in checks.values())
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "signature": list(signature),
        "structure": structure,
        "samples": samples,
        "seed": seed,
        "tol": tol,
        "checks": checks,
        "all_pass": all_pass,
    }
    return (0 if all_pass else 1), report


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="curvlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command")
    run_parser = sub.add_parser("run", help="run the check suite described by a JSON config")
    run_parser.add_argument("config", help="path to the JSON config")
    run_parser.add_argument("--seed", type=int, default=None, help="override the config seed")
    run_parser.add_argument("--samples", type=int, default=None, help="override the sample count")
    run_parser.add_argument("--tol", type=float, default=None, help="override the tolerance")
    run_parser.add_argument("--report", default=None, help="write the JSON report to this path")
    run_parser.add_argument("--quiet", action="store_true", help="suppress per-check summary lines")
    sub.add_parser("list-builtins", help="list generator builders and check names")

    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    if args.command == "list-builtins":
        print(list_builtins())
        return 0

    try:
        code, report = run(args.config, args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    body = json.dumps(report, indent=2, sort_keys=True)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
        if not args.quiet:
            for name, result in report["checks"].items():
                print(f"{'PASS' if result['pass'] else 'FAIL'} {name}")
            print(f"report written to {args.report}")
    elif args.quiet:
        pass
    else:
        print(body)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
