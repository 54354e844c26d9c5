"""Command-line front end: represent, classify, tpoint, frame, verify."""
import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .classifier import classify
from .errors import (
    NotCubic,
    PfaffError,
    SearchExhausted,
    TPointStart,
    VerificationFailed,
    ZeroPolynomial,
)
from .exactfield import QQ, NumberField
from .multipoly import MultiPoly, format_poly, parse_element, parse_minpoly, parse_point, parse_poly
from .pfaffian import element_to_json, matrix_from_json, matrix_to_json, verify
from .pointfactory import SearchCaps, extend_to_frame, is_T_point
from .specialrep import represent_any

SCHEMA = "pfaffian-rep/1"
COMMANDS = ("represent", "classify", "tpoint", "frame", "verify")

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_SEARCH = 3
EXIT_UNSUPPORTED = 4


class UsageError(ValueError):
    pass


@dataclass
class JobSpec:
    command: str
    surface: Optional[str] = None
    surface_file: Optional[str] = None
    field_minpoly: Optional[str] = None
    point: Optional[str] = None
    family: Optional[str] = None
    cap: Optional[int] = None
    inject_candidates: Optional[str] = None
    matrix: Optional[str] = None
    pretty: bool = False
    verbose: bool = False
    allow_t_start: bool = False
    extra: dict = field(default_factory=dict)


def _read_file(path):
    path = path[1:] if path.startswith("@") else path
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _field_from(text):
    if text is None:
        return QQ
    coeffs = parse_minpoly(text)
    return QQ if len(coeffs) == 2 else NumberField(coeffs)


def _minpoly_json(K):
    return [str(c) for c in K.minpoly] if K.degree > 1 else None


def _surface_from_json(data, K):
    """Accepts a bare string, {"cubic": text}, or {"coefficients": {"e0,e1,e2,e3": coeff}}."""
    if isinstance(data, str):
        return parse_poly(data, K)
    if "cubic" in data:
        return parse_poly(data["cubic"], K)
    if "coefficients" in data:
        terms = {}
        for key, val in data["coefficients"].items():
            exp = tuple(int(e) for e in key.replace(" ", "").split(","))
            terms[exp] = parse_element(val, K)
        return MultiPoly(K, terms, nvars=4)
    raise UsageError("surface file needs a 'cubic' string or a 'coefficients' map")


def load_job_inputs(spec):
    """(field, surface) from the spec; the surface file may also fix the field."""
    minpoly = spec.field_minpoly
    if spec.surface_file is not None:
        text = _read_file(spec.surface_file)
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            data = text.strip()
        if isinstance(data, dict) and minpoly is None and data.get("field_minpoly"):
            minpoly = ",".join(str(c) for c in data["field_minpoly"])
        K = _field_from(minpoly)
        F = _surface_from_json(data, K)
    elif spec.surface is not None:
        K = _field_from(minpoly)
        F = parse_poly(spec.surface, K)
    else:
        raise UsageError("give the surface with --cubic or --surface-file")
    if F.is_zero():
        raise ZeroPolynomial("the zero polynomial defines no surface")
    if F.degree != 3:
        raise NotCubic(f"expected a cubic form, got degree {F.degree}")
    return K, F


def _injected(spec):
    if spec.inject_candidates is None:
        return None
    data = json.loads(_read_file(spec.inject_candidates))
    if isinstance(data, dict):
        data = data["candidates"]
    return [[Fraction(str(c)) for c in vec] for vec in data]


def _caps(spec):
    caps = SearchCaps()
    if spec.cap is not None:
        caps.per_step = spec.cap
    return caps


def _selector(spec):
    if spec.family is None:
        return None
    parts = [p for p in spec.family.split(",") if p.strip()]
    if len(parts) != 5:
        raise UsageError("--family takes five comma-separated values")
    return [Fraction(p.strip()) for p in parts]


def _point(spec, K):
    if spec.point is None:
        return None
    p = parse_point(spec.point, K)
    if len(p) != 4:
        raise UsageError("points have four coordinates")
    return p


def _emit_log(log, err):
    for entry in log:
        err.write(json.dumps(entry) + "\n")


def rep_document(rep):
    prov = rep.provenance
    return {
        "schema": SCHEMA,
        "kind": prov.get("kind"),
        "matrix": matrix_to_json(rep.matrix),
        "constant_c": element_to_json(rep.constant),
        "field_minpoly": _minpoly_json(rep.field),
        "frame_points": prov.get("frame_points"),
        "provenance": prov,
    }


def _cmd_represent(spec, err):
    K, F = load_job_inputs(spec)
    rep = represent_any(F, hint=_point(spec, K), caps=_caps(spec), injected=_injected(spec),
                        allow_t_start=spec.allow_t_start, selector=_selector(spec))
    if spec.verbose:
        _emit_log(rep.provenance.get("candidate_log", []), err)
    return rep_document(rep)


def _cmd_classify(spec, err):
    _, F = load_job_inputs(spec)
    out = {"schema": SCHEMA}
    out.update(classify(F).to_json())
    return out


def _cmd_tpoint(spec, err):
    K, F = load_job_inputs(spec)
    a = _point(spec, K)
    if a is None:
        raise UsageError("tpoint needs --point")
    return {"schema": SCHEMA, "point": a.to_strings(), "t_point": is_T_point(F, a)}


def _cmd_frame(spec, err):
    K, F = load_job_inputs(spec)
    a = _point(spec, K)
    if a is None:
        raise UsageError("frame needs --point")
    log = []
    pts = extend_to_frame(F, a, _caps(spec), injected=_injected(spec),
                          allow_t_start=spec.allow_t_start, log=log)
    if spec.verbose:
        _emit_log(log, err)
    return {"schema": SCHEMA, "frame_points": [p.to_strings() for p in pts], "candidate_log": log}


def _cmd_verify(spec, err):
    if spec.matrix is None:
        raise UsageError("verify needs --matrix")
    data = json.loads(_read_file(spec.matrix))
    if spec.field_minpoly is None and isinstance(data, dict) and data.get("field_minpoly"):
        spec.field_minpoly = ",".join(data["field_minpoly"])
    K, F = load_job_inputs(spec)
    M = matrix_from_json(data["matrix"] if isinstance(data, dict) else data, K)
    c = verify(M, F)
    return {"schema": SCHEMA, "verified": True, "constant_c": element_to_json(c)}


HANDLERS = {
    "represent": _cmd_represent,
    "classify": _cmd_classify,
    "tpoint": _cmd_tpoint,
    "frame": _cmd_frame,
    "verify": _cmd_verify,
}


def run(spec, out=None, err=None):
    """Execute one job; writes JSON to out, diagnostics to err, returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        doc = HANDLERS[spec.command](spec, err)
    except (NotCubic, ZeroPolynomial) as exc:
        err.write(f"unsupported input: {exc}\n")
        return EXIT_UNSUPPORTED
    except SearchExhausted as exc:
        err.write(f"search exhausted: {exc}\n")
        _emit_log(exc.log or [], err)
        return EXIT_SEARCH
    except TPointStart as exc:
        err.write(f"invalid start point: {exc}\n")
        return EXIT_INPUT
    except VerificationFailed as exc:
        err.write(f"verification failed: {exc}\n")
        if exc.residual is not None:
            err.write(f"residual: {format_poly(exc.residual)}\n")
        return EXIT_VERIFY
    except (PfaffError, ValueError, KeyError, OSError) as exc:
        err.write(f"invalid input: {exc}\n")
        return EXIT_INPUT
    indent = 2 if spec.pretty else None
    out.write(json.dumps(doc, indent=indent, ensure_ascii=False) + "\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="pfaffcubic", description="Linear Pfaffian representations of cubic surfaces")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--cubic", dest="surface")
    parser.add_argument("--surface-file")
    parser.add_argument("--field-minpoly", help="minimal polynomial in t, e.g. 't^2-2' or '-2,0,1'")
    parser.add_argument("--point", help="coordinates such as 1,0,0,0")
    parser.add_argument("--family", help="kernel selector k1,k2,k3,k4,k5")
    parser.add_argument("--cap", type=int, help="candidates tried per tangent-plane step")
    parser.add_argument("--inject-candidates", help="JSON list of candidate vectors (FILE or @FILE)")
    parser.add_argument("--matrix", help="matrix JSON for verify")
    out = parser.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false")
    out.add_argument("--pretty", dest="pretty", action="store_true")
    parser.set_defaults(pretty=False)
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("--allow-t-start", action="store_true", help="start the process at a T-point anyway")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    spec = JobSpec(**{k: v for k, v in vars(args).items()})
    return run(spec)


if __name__ == "__main__":
    sys.exit(main())
