"""Command-line frontend: checkers, classifier, synthesizer and integrator.

Exit codes: 0 = verdict true / success, 1 = verdict false (witness printed),
2 = input error.  ``--json`` switches the output to machine-readable JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bianchi, dynamics, njacobi, npoisson
from .multivector import (MultiVector, derived_rank, is_decomposable,
                          multivector_from_json, multivector_to_json)
from .nlie import NLieStructure, nlie_from_json, nlie_to_json
from .njacobi import jacobiop_from_json
from .poly import Poly


class InputError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, "
                         f"column {exc.colno}") from exc


def _load_algebra(path: str) -> NLieStructure:
    try:
        return nlie_from_json(_load_json(path))
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"{path}: invalid algebra data: {exc}") from exc


def _load_multivector(path: str) -> MultiVector:
    try:
        return multivector_from_json(_load_json(path))
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"{path}: invalid multivector data: {exc}") from exc


def _emit(data: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(data, indent=2, default=str))
        return
    for key, value in data.items():
        print(f"{key}: {value}")


def _witness_str(witness) -> list[str] | None:
    if witness is None:
        return None
    return [str(w) for w in witness]


# -- subcommand handlers -------------------------------------------------------

def cmd_check_nlie(args) -> int:
    p = _load_algebra(args.file)
    ok, witness = p.check_n_jacobi()
    _emit({"verdict": ok,
           "witness": None if ok else {"u_indices": [i + 1 for i in witness[0]],
                                       "v_indices": [i + 1 for i in witness[1]]}},
          args.json)
    return 0 if ok else 1


def cmd_check_poisson(args) -> int:
    v = _load_multivector(args.file)
    ok, witness = npoisson.is_n_poisson(v)
    out = {
        "verdict": ok,
        "witness": _witness_str(witness),
        "decomposable": is_decomposable(v) if v.degree >= 2 else None,
        "rank_at_origin": derived_rank(v, [0] * v.num_vars),
    }
    if ok and args.max_degree:
        casimirs = npoisson.casimir_polynomials(v, args.max_degree)
        out["casimirs"] = [str(c) for c in casimirs]
    _emit(out, args.json)
    return 0 if ok else 1


def cmd_check_jacobi(args) -> int:
    try:
        op = jacobiop_from_json(_load_json(args.file))
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"{args.file}: invalid operator pair: {exc}") from exc
    ok, witness = njacobi.is_n_jacobi(op)
    box_poisson = None
    if op.box.degree >= 2:
        box_poisson = npoisson.is_n_poisson(op.box)[0]
    _emit({"verdict": ok,
           "witness": _witness_str(witness),
           "box_poisson": box_poisson,
           "nabla_decomposable": is_decomposable(op.nabla)
           if op.nabla.degree >= 2 else None},
          args.json)
    return 0 if ok else 1


def cmd_classify(args) -> int:
    p = _load_algebra(args.file)
    try:
        label = bianchi.classify(p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    form = bianchi.generating_form(p)
    _emit({"label": str(label),
           "label_json": label.to_json(),
           "generating_form": [[str(x) for x in row] for row in form],
           "unimodular": bianchi.is_unimodular(p)},
          args.json)
    return 0


def cmd_derivations(args) -> int:
    p = _load_algebra(args.file)
    try:
        basis = bianchi.derivation_algebra(p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit({"dimension": len(basis),
           "basis": [[[str(x) for x in row] for row in mat] for mat in basis]},
          args.json)
    return 0


def cmd_synthesize(args) -> int:
    try:
        if args.kind == "unimodular":
            if args.r is None or args.m is None:
                raise InputError("unimodular labels need --r and --m")
            label = bianchi.unimodular_label(args.r, args.m)
        else:
            lam = Fraction(args.lam) if args.lam is not None else None
            label = bianchi.psi_label(args.kind, lam)
        p = bianchi.synthesize(label, args.arity)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(json.dumps(nlie_to_json(p), indent=2))
    return 0


def cmd_compat(args) -> int:
    p = _load_algebra(args.file)
    q = _load_algebra(args.file2)
    try:
        ok, witness = p.compat(q)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit({"verdict": ok,
           "witness": None if ok else {"u_indices": [i + 1 for i in witness[0]],
                                       "w_indices": [i + 1 for i in witness[1]]}},
          args.json)
    return 0 if ok else 1


def cmd_hereditary(args) -> int:
    p = _load_algebra(args.file)
    try:
        vectors = []
        for chunk in args.freeze.split(";"):
            vectors.append([Fraction(x) for x in chunk.split(",")])
        result = p.hereditary(vectors)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"invalid --freeze argument: {exc}") from exc
    print(json.dumps(nlie_to_json(result), indent=2))
    return 0


def cmd_integrate(args) -> int:
    monitors: list[Poly]
    if args.builtin == "spin":
        b = tuple(Fraction(x) for x in args.b_field.split(","))
        if len(b) != 3:
            raise InputError("--B needs three comma-separated rationals")
        sys_ = dynamics.SpinSystem(b, Fraction(args.mu))
        nambu_sys = sys_.nambu()
        field = nambu_sys.dynamics_field()
        monitors = list(nambu_sys.hamiltonians)
    elif args.builtin == "kepler":
        sys_ = dynamics.KeplerSystem(args.mass, args.k_const)
        field = sys_.field()
        monitors = list(sys_.hamiltonians)
    elif args.system:
        data = _load_json(args.system)
        try:
            tensor = multivector_from_json(data["tensor"])
            hams = tuple(Poly.from_json(h, tensor.num_vars)
                         for h in data["hamiltonians"])
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"invalid system file: {exc}") from exc
        nambu_sys = dynamics.NambuSystem(tensor, hams)
        field = nambu_sys.dynamics_field()
        monitors = list(hams)
    else:
        raise InputError("need --builtin spin|kepler or --system FILE")
    if args.x0 is None:
        raise InputError("--x0 is required")
    x0 = [float(Fraction(x)) for x in args.x0.split(",")]
    traj = dynamics.rk4_integrate(field, x0, args.step, args.steps, monitors)
    n_state = len(x0)
    header = ["t"] + [f"x{i + 1}" for i in range(n_state)] \
        + [f"drift{i + 1}" for i in range(len(monitors))]
    print(",".join(header))
    initial = [m.evaluate_float(x0) for m in monitors]
    for t, state in zip(traj.times, traj.states):
        drifts = [abs(m.evaluate_float(state) - v) for m, v in zip(monitors, initial)]
        print(",".join(f"{x:.12g}" for x in [t, *state, *drifts]))
    if not traj.ok:
        print(f"error: {traj.error}", file=sys.stderr)
        return 2
    return 0


def cmd_witt_demo(args) -> int:
    ok, brackets = bianchi.witt_embedding_check()
    _emit({"verdict": ok, **{k: str(v) for k, v in brackets.items()}}, args.json)
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nambu",
        description="Exact computations with n-Lie algebras, Nambu-Poisson "
                    "tensors and n-Jacobi operators.")
    parser.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized subroutines")
    parser.add_argument("--tolerance", type=float, default=1e-9,
                        help="numeric comparison tolerance")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check-nlie", help="verify the n-ary Jacobi identity")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_nlie)

    p = sub.add_parser("check-poisson", help="verify the fundamental identity")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=0,
                   help="also search polynomial Casimirs up to this degree")
    p.set_defaults(func=cmd_check_poisson)

    p = sub.add_parser("check-jacobi", help="verify the n-Jacobi property of a pair")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_jacobi)

    p = sub.add_parser("classify", help="label an (n+1)-dimensional n-Lie algebra")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("derivations", help="basis of the derivation algebra")
    p.add_argument("file")
    p.set_defaults(func=cmd_derivations)

    p = sub.add_parser("synthesize", help="build an algebra from a label")
    p.add_argument("--kind", required=True,
                   choices=["unimodular", "psi_plus", "psi_minus",
                            "psi_one", "psi_zero"])
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--lambda", dest="lam")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("compat", help="compatibility of two structures")
    p.add_argument("file")
    p.add_argument("file2")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("hereditary", help="freeze arguments of a bracket")
    p.add_argument("file")
    p.add_argument("--freeze", required=True,
                   help="semicolon-separated vectors of comma-separated rationals")
    p.set_defaults(func=cmd_hereditary)

    p = sub.add_parser("integrate", help="RK4 integration with drift monitoring")
    p.add_argument("--builtin", choices=["spin", "kepler"])
    p.add_argument("--system", help="JSON file with {tensor, hamiltonians}")
    p.add_argument("--B", dest="b_field", default="0,0,1")
    p.add_argument("--mu", default="1")
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--k", dest="k_const", type=float, default=1.0)
    p.add_argument("--x0")
    p.add_argument("--h", dest="step", type=float, default=1e-3)
    p.add_argument("--steps", type=int, default=1000)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("witt-demo", help="the quadric-generated bracket demo")
    p.set_defaults(func=cmd_witt_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
