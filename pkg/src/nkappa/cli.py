"""Command line front end.

    nkappa COMMAND --input FILE [--tol X] [--seed N] [--format json|text]

Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 violated
mathematical assumption (singular ``Gamma^+ Gamma``, point on a pole).
Negative numbers for ``--z``/``--alpha`` need the ``--z=-1,0`` spelling.
"""

import argparse
import json
import sys
import time
import warnings

import numpy as np

from . import inversion, kernel, realization
from .errors import NkappaError, NumericalError, SchemaError
from .io import digest, dumps, encode_complex, encode_matrix, load_realization, realization_to_document
from .numeric import Tolerance, matrix_norm, principal_angles
from .sampling import SamplePlan, sample_points

VERIFY_THRESHOLDS = {
    "symmetry": 1e-10,
    "identity_46": 1e-8,
    "identity_54_angle": 1e-7,
    "inverse_product": 1e-8,
}


def parse_complex(text):
    """``"re,im"``, ``"re"`` or a Python complex literal such as ``"1-2j"``."""
    text = text.strip()
    try:
        if "," in text:
            re_, im_ = text.split(",")
            return complex(float(re_), float(im_))
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _check(name, value, threshold):
    return {"name": name, "value": float(value), "threshold": float(threshold),
            "passed": bool(value <= threshold)}


def _sample(R, args, count, extra=()):
    exclude = np.concatenate([realization.spectrum(R.A), np.asarray(extra, dtype=complex)])
    return sample_points(count, args.seed, exclude=exclude)


def cmd_validate(R, args, tol):
    is_min, V = realization.minimality(R, tol)
    return {
        "n": R.n,
        "m": R.m,
        "negative_index_J": R.J.negative_index,
        "j_selfadjoint": True,
        "holomorphic_at_infinity": R.holomorphic_at_infinity,
        "minimal": is_min,
        "reachable_rank": V.shape[1],
    }, []


def cmd_eval(R, args, tol):
    return {"z": encode_complex(args.z), "Q": encode_matrix(realization.evaluate(R, args.z))}, []


def cmd_qprime(R, args, tol):
    return {"Q_prime_infinity": encode_matrix(realization.derivative_at_infinity(R))}, []


def cmd_minimal(R, args, tol):
    is_min, V = realization.minimality(R, tol)
    Rm = realization.reduce_to_minimal(R, tol)
    return {
        "minimal": is_min,
        "reachable_rank": V.shape[1],
        "reduced": realization_to_document(Rm),
        "reduced_negative_index": Rm.J.negative_index,
    }, []


def cmd_invert(R, args, tol):
    Qh = inversion.invert_at(R, args.z, tol)
    Q = realization.evaluate(R, args.z)
    res = matrix_norm(Q @ Qh + np.eye(R.m)) / max(1.0, matrix_norm(Q) * matrix_norm(Qh))
    return ({"z": encode_complex(args.z), "Q_hat": encode_matrix(Qh)},
            [_check("inverse_product", res, VERIFY_THRESHOLDS["inverse_product"])])


def _indices(d):
    return {"kappa": d.kappa, "kappa1": d.kappa1, "kappa2": d.kappa2, "minimal": d.minimal}


def cmd_decompose(R, args, tol):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        d = inversion.decompose_inverse(R, tol)
    out = {
        "S_hat": encode_matrix(d.S_hat),
        "G_hat": encode_matrix(d.G_hat),
        "Gamma_tilde": encode_matrix(d.Gamma_tilde),
        "range_IP_basis": encode_matrix(d.B),
        "A_tilde_coord": encode_matrix(d.A_tilde),
        "J_tilde_coord": encode_matrix(d.J_tilde),
        "P": encode_matrix(d.P),
        "gram_condition": d.gram_condition,
        "zeros": [{"z": encode_complex(z), "multiplicity": k} for z, k in d.zeros()],
    }
    out.update(_indices(d))
    res = 0.0
    for z in _sample(R, args, 10, realization.spectrum(d.A_tilde)):
        ref = -np.linalg.inv(realization.evaluate(R, z))
        res = max(res, matrix_norm(d(z) - ref) / max(1.0, matrix_norm(ref)))
    return out, [_check("decomposition_matches_inverse", res, VERIFY_THRESHOLDS["inverse_product"])]


def cmd_indices(R, args, tol):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        d = inversion.decompose_inverse(R, tol)
    return _indices(d), []


def cmd_zeros(R, args, tol):
    zs = inversion.zeros_of_Q(R, tol)
    return {"zeros": [{"z": encode_complex(z), "multiplicity": k} for z, k in zs]}, []


def cmd_split(R, args, tol):
    Ra, Ha = realization.split_at_pole(R, args.alpha, tol)
    res = 0.0
    for z in _sample(R, args, 10):
        Qz = realization.evaluate(R, z)
        res = max(res, matrix_norm(realization.evaluate(Ra, z) + realization.evaluate(Ha, z) - Qz)
                  / max(1.0, matrix_norm(Qz)))
    spec = lambda X: [encode_complex(v) for v in np.sort_complex(realization.spectrum(X))]
    return ({
        "alpha": encode_complex(args.alpha),
        "R_alpha": realization_to_document(Ra),
        "H_alpha": realization_to_document(Ha),
        "spectrum_R_alpha": spec(Ra.A),
        "spectrum_H_alpha": spec(Ha.A),
    }, [_check("split_sum", res, 1e-10)])


def cmd_verify(R, args, tol):
    pc = inversion._pieces(R, tol)
    zs = _sample(R, args, 5, realization.spectrum(pc.A_tilde))
    sym = kernel.check_symmetry(R, SamplePlan(count=10, seed=args.seed))
    r46 = max(inversion.verify_identity_46(R, z, tol) for z in zs)
    K = inversion.inverse_relation_multivalued_part(R, zs[0], tol)
    ang = principal_angles(K, R.Gamma)
    prod = 0.0
    for z in zs:
        Q, Qh = realization.evaluate(R, z), inversion.invert_at(R, z, tol)
        prod = max(prod, matrix_norm(Q @ Qh + np.eye(R.m)) / max(1.0, matrix_norm(Q) * matrix_norm(Qh)))
    checks = [
        _check("symmetry", sym, VERIFY_THRESHOLDS["symmetry"]),
        _check("identity_46", r46, VERIFY_THRESHOLDS["identity_46"]),
        _check("identity_54_angle", ang, VERIFY_THRESHOLDS["identity_54_angle"]),
        _check("inverse_product", prod, VERIFY_THRESHOLDS["inverse_product"]),
    ]
    return {"sample_points": [encode_complex(z) for z in zs]}, checks


def cmd_kernel(R, args, tol):
    plan = SamplePlan(count=args.samples, seed=args.seed)
    k, hist = kernel.estimate_negative_squares(R, plan, args.directions, tol)
    return {"kappa_lower": k, "history": hist, "negative_index_J": R.J.negative_index,
            "samples": args.samples, "directions": args.directions}, []


COMMANDS = {
    "validate": (cmd_validate, "check a realization document"),
    "eval": (cmd_eval, "evaluate Q(z)"),
    "qprime-inf": (cmd_qprime, "derivative at infinity, -Gamma^+ Gamma"),
    "minimal": (cmd_minimal, "minimality test and minimal reduction"),
    "invert": (cmd_invert, "evaluate -Q(z)^{-1} by the projection formula"),
    "decompose": (cmd_decompose, "polynomial + resolvent decomposition of -Q^{-1}"),
    "indices": (cmd_indices, "kappa, kappa1, kappa2"),
    "zeros": (cmd_zeros, "finite zeros of Q with multiplicities"),
    "split": (cmd_split, "split Q at a generalized pole"),
    "verify": (cmd_verify, "run the identity and symmetry checks"),
    "kernel": (cmd_kernel, "sampled lower bound for the negative squares"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH")
    common.add_argument("--tol", type=float, default=None,
                        help="relative_eps and sign_eps (default 1e-9)")
    common.add_argument("--cond-cap", type=float, default=None,
                        help="condition cap for bounded invertibility (default 1e8)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--timing", action="store_true",
                        help="include wall-clock time (makes reports non-reproducible)")

    parser = argparse.ArgumentParser(prog="nkappa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name in ("eval", "invert"):
            p.add_argument("--z", type=parse_complex, required=True)
        if name == "split":
            p.add_argument("--alpha", type=parse_complex, required=True)
        if name == "kernel":
            p.add_argument("--samples", type=int, default=12)
            p.add_argument("--directions", type=int, default=2)
    return parser


def _format_number(x):
    return f"{x:.6g}"


def _format_matrix(rows, indent="  "):
    M = np.array([[complex(*v) for v in r] for r in rows], dtype=complex).reshape(len(rows), -1)
    if M.size == 0:
        return indent + "(empty)"
    cells = [[f"{_format_number(v.real)} {'+' if v.imag >= 0 else '-'} {_format_number(abs(v.imag))}i"
              for v in r] for r in M]
    width = max(len(c) for r in cells for c in r)
    return "\n".join(indent + "  ".join(c.rjust(width) for c in r) for r in cells)


def _is_matrix(v):
    return (isinstance(v, list) and v and all(isinstance(r, list) for r in v)
            and all(isinstance(c, list) and len(c) == 2 for r in v for c in r))


def format_text(report):
    lines = [f"command: {report['command']}", f"status: {report['status']}"]
    if "error" in report:
        e = report["error"]
        lines.append(f"error: {e['type']} [{e['invariant']}]: {e['message']}")
    for key, value in report.get("outputs", {}).items():
        if _is_matrix(value):
            lines.append(f"{key}:")
            lines.append(_format_matrix(value))
        elif isinstance(value, dict):
            lines.append(f"{key}: <document>" if "schema_version" in value else f"{key}: {value}")
        elif isinstance(value, float):
            lines.append(f"{key}: {_format_number(value)}")
        else:
            lines.append(f"{key}: {value}")
    for c in report.get("checks", []):
        mark = "PASS" if c["passed"] else "FAIL"
        lines.append(f"check {c['name']}: {mark} ({_format_number(c['value'])} <= "
                     f"{_format_number(c['threshold'])})")
    return "\n".join(lines) + "\n"


def run(argv=None, stdout=None):
    """Run a command; return ``(exit_code, report)`` and write the report to ``stdout``."""
    stdout = sys.stdout if stdout is None else stdout
    args = build_parser().parse_args(argv)
    kw = {}
    if args.tol is not None:
        kw.update(relative_eps=args.tol, sign_eps=args.tol)
    if args.cond_cap is not None:
        kw["condition_cap"] = args.cond_cap
    report = {"command": args.command, "argv": list(argv if argv is not None else sys.argv[1:]),
              "seed": args.seed}
    t0 = time.perf_counter()
    code = 0
    try:
        tol = Tolerance(**kw)
        report["tolerance"] = tol.as_dict()
        try:
            with open(args.input, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise SchemaError(f"cannot read {args.input}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{args.input}: invalid JSON ({exc})") from exc
        report["input_digest"] = digest(doc)
        R = load_realization(args.input, tol)
        outputs, checks = COMMANDS[args.command][0](R, args, tol)
        report["outputs"] = outputs
        report["checks"] = checks
        if any(not c["passed"] for c in checks):
            code = NumericalError.exit_code
            report["status"] = "check_failed"
        else:
            report["status"] = "ok"
    except NkappaError as exc:
        code = exc.exit_code
        report["status"] = "error"
        report["error"] = {"type": type(exc).__name__, "invariant": exc.invariant,
                           "message": str(exc)}
    report["exit_code"] = code
    if args.timing:
        report["timing_seconds"] = time.perf_counter() - t0
    stdout.write(dumps(report) + "\n" if args.format == "json" else format_text(report))
    return code, report


def main(argv=None):
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
