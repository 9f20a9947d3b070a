"""Command-line front end; every subcommand prints one JSON document.

Exit status 0 on success, 2 on usage errors (bad flags, malformed JSON) and
1 on domain errors. Errors go to standard error as
``{"error": {"kind": ..., "message": ...}}``.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import cavity, decomp, lens_optics, little_group, mat_core, multilayer, polarization
from .jsonio import decode_jones, decode_matrix, dumps, encode, encode_complex, num
from .mat_core import DomainError

ENV_TOL = "LOROPT_TOL"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_payload(text):
    """'-' reads standard input, '@path' reads a file, anything else is inline JSON."""
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from exc


def _matrix(text, shape=(2, 2)):
    try:
        return decode_matrix(_read_payload(text), shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _jones(text):
    try:
        return decode_jones(_read_payload(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ------------------------------------------------------------ subcommands


def cmd_generators(a, tol):
    gens = mat_core.generators(a.rep)
    tables = mat_core.commutator_table_errors(gens)
    extra = {}
    if a.rep == "vector":
        J3, N1, N2 = little_group.massless_generators()
        extra["e2"] = max(
            float(np.max(np.abs(mat_core.commutator(N1, N2)))),
            float(np.max(np.abs(mat_core.commutator(J3, N1) - 1j * N2))),
            float(np.max(np.abs(mat_core.commutator(J3, N2) + 1j * N1))),
        )
    if a.check:
        return {"commutators_ok": all(v <= 1e-15 for v in {**tables, **extra}.values())}
    doc = {
        "rep": a.rep,
        "J": [encode_complex(j) for j in gens.J],
        "K": [encode_complex(k) for k in gens.K],
    }
    if gens.K_dot is not None:
        doc["K_dot"] = [encode_complex(k) for k in gens.K_dot]
    return doc


def cmd_contract(a, tol):
    return little_group.contract(a.eta).to_json()


def cmd_polarize(a, tol):
    L = _matrix(a.matrix) if a.matrix else None
    if a.stokes is not None:
        s = np.array(a.stokes, dtype=float)
        if L is None:
            raise UsageError("--stokes needs --matrix")
        out = polarization.mueller(L, tol) @ s
        m = polarization.coherence_mass(out)
        return {"stokes": encode(out), "mass": num(m.mass), "state": m.state}
    if a.jones is None:
        raise UsageError("give --jones or --stokes")
    v = _jones(a.jones)
    if not np.any(v):
        raise DomainError("Jones vector must be non-zero")
    doc = {}
    if L is not None:
        v = polarization.apply_jones(L, v)
        doc["mueller"] = encode(polarization.mueller(L, tol))
    s = polarization.stokes(v)
    m = polarization.coherence_mass(s)
    doc.update(
        jones=encode_complex(v),
        coherency=encode_complex(polarization.coherency_of(v)),
        stokes=encode(s),
        mass=num(m.mass),
        state=m.state,
    )
    return doc


def cmd_lens(a, tol):
    m = lens_optics.one_lens(a.z1, a.f, a.z2)
    return {"matrix": encode(m), "imaging": lens_optics.imaging(a.z1, a.f, a.z2)}


def cmd_core(a, tol):
    return {
        "matrix": encode(lens_optics.core(a.x)),
        "factorization": lens_optics.factor_core(a.x).to_json(),
    }


def cmd_decompose(a, tol):
    if a.kind == "iwasawa":
        if a.eta is None and a.matrix is None:
            raise UsageError("iwasawa needs --eta or a unit lower-triangular --matrix")
        if a.eta is not None:
            eta = a.eta
        else:
            m = _matrix(a.matrix)
            if m[0, 1] != 0 or m[0, 0] != 1 or m[1, 1] != 1:
                raise DomainError("iwasawa --matrix must be ((1, 0), (c, 1))")
            eta = math.asinh(0.5 * m[1, 0])
        theta = decomp.iwasawa_angle(eta)
        return {
            "eta": num(eta),
            "theta": num(theta),
            "phi": num(theta + math.pi / 4),
            "xi": num(theta - math.pi / 4),
            "matrix": encode(decomp.iwasawa_matrix(eta)),
        }
    if a.matrix is None:
        raise UsageError(f"{a.kind} needs --matrix")
    m = _matrix(a.matrix)
    if np.iscomplexobj(m):
        raise DomainError(f"{a.kind} needs a real matrix")
    if a.kind == "bargmann":
        return decomp.bargmann(m, tol).to_json()
    chain = decomp.synthesize_lenses(m, physical=a.physical, tol=tol)
    return {"chain": chain.to_json(), "lenses": chain.lens_count, "virtual": chain.virtual}


def cmd_cavity(a, tol):
    cfg = cavity.CavityConfig(a.x, a.cycles, a.half_cycles)
    return cavity.run_cavity(cfg).to_json()


def cmd_multilayer(a, tol):
    p = multilayer.LayerPair(a.eta, a.phi1, a.phi2)
    doc = multilayer.run_periods(p, a.periods).to_json()
    if a.iwasawa:
        w = multilayer.iwasawa_scan(p)
        doc["iwasawa"] = None if w is None else w.to_json()
    return doc


def cmd_power(a, tol):
    m = _matrix(a.matrix)
    if np.iscomplexobj(m):
        raise DomainError("power needs a real matrix")
    return encode(decomp.power_closed_form(m, a.n, tol))


COMMANDS = {
    "generators": cmd_generators,
    "contract": cmd_contract,
    "polarize": cmd_polarize,
    "lens": cmd_lens,
    "core": cmd_core,
    "decompose": cmd_decompose,
    "cavity": cmd_cavity,
    "multilayer": cmd_multilayer,
    "power": cmd_power,
}


def _nonneg_int(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="determinant tolerance")
    common.add_argument("--out", default=None, help="write the JSON document to this file")
    common.add_argument("--scan", default=None, metavar="PARAM=START:STOP:STEPS")

    p = _Parser(prog="loropt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("generators", parents=[common])
    s.add_argument("--rep", choices=["spinor", "vector"], default="spinor")
    s.add_argument("--check", action="store_true")

    s = sub.add_parser("contract", parents=[common])
    s.add_argument("--eta", type=float, nargs="+", default=[2.0, 4.0, 6.0, 8.0, 10.0, 12.0])

    s = sub.add_parser("polarize", parents=[common])
    s.add_argument("--jones", default=None)
    s.add_argument("--stokes", type=float, nargs=4, default=None)
    s.add_argument("--matrix", default=None)

    s = sub.add_parser("lens", parents=[common])
    s.add_argument("--z1", type=float, required=True)
    s.add_argument("--f", type=float, required=True)
    s.add_argument("--z2", type=float, required=True)

    s = sub.add_parser("core", parents=[common])
    s.add_argument("--x", type=float, required=True)

    s = sub.add_parser("decompose", parents=[common])
    s.add_argument("--kind", choices=["bargmann", "lenses", "iwasawa"], required=True)
    s.add_argument("--matrix", default=None)
    s.add_argument("--eta", type=float, default=None)
    s.add_argument("--physical", action="store_true", help="only non-negative gaps")

    s = sub.add_parser("cavity", parents=[common])
    s.add_argument("--x", type=float, required=True)
    s.add_argument("--cycles", type=_nonneg_int, default=1)
    s.add_argument("--half-cycles", action="store_true", help="count powers of C, not C^2")

    s = sub.add_parser("multilayer", parents=[common])
    s.add_argument("--eta", type=float, required=True)
    s.add_argument("--phi1", type=float, required=True)
    s.add_argument("--phi2", type=float, required=True)
    s.add_argument("--periods", type=_nonneg_int, default=1)
    s.add_argument("--iwasawa", action="store_true")

    s = sub.add_parser("power", parents=[common])
    s.add_argument("--matrix", required=True)
    s.add_argument("--n", type=_nonneg_int, required=True)
    return p


def _parse_scan(text, args):
    try:
        name, rng = text.split("=", 1)
        start, stop, steps = rng.split(":")
        start, stop, steps = float(start), float(stop), int(steps)
    except ValueError as exc:
        raise UsageError(f"bad --scan {text!r}; expected PARAM=START:STOP:STEPS") from exc
    name = name.replace("-", "_")
    if steps < 1:
        raise UsageError("--scan needs at least one step")
    current = getattr(args, name, None)
    if name in ("tol", "out", "scan", "command") or not isinstance(current, (int, float)) or isinstance(current, bool):
        raise UsageError(f"--scan parameter {name!r} is not a numeric option of {args.command}")
    values = np.linspace(start, stop, steps).tolist()
    if isinstance(current, int):
        if any(v != int(v) for v in values):
            raise UsageError(f"--scan values for {name!r} must be integers")
        values = [int(v) for v in values]
    return name, values


def _tolerance(args):
    if args.tol is not None:
        return args.tol
    env = os.environ.get(ENV_TOL)
    if env:
        try:
            return float(env)
        except ValueError as exc:
            raise UsageError(f"{ENV_TOL} is not a number: {env!r}") from exc
    return mat_core.TOL_DET


def _fail(kind, message, status):
    sys.stderr.write(dumps({"error": {"kind": kind, "message": message}}) + "\n")
    return status


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
        tol = _tolerance(args)
        fn = COMMANDS[args.command]
        if args.scan:
            name, values = _parse_scan(args.scan, args)
            results = []
            for v in values:
                setattr(args, name, v)
                results.append(fn(args, tol))
            doc = {"scan": {"param": name, "values": [num(v) for v in values]}, "results": results}
        else:
            doc = fn(args, tol)
        text = dumps(doc)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    except DomainError as exc:
        return _fail("domain", str(exc), 1)
    except OverflowError as exc:
        return _fail("range", str(exc), 1)
    except (ArithmeticError, ValueError) as exc:
        return _fail("numerical", str(exc), 1)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    sys.stdout.write(text + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
