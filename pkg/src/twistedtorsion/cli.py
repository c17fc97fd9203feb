"""Command-line front end.

Exit codes: 0 success (or sides equal), 1 sides differ, 2 validation
failure, 3 twisted complex not acyclic, 4 unsupported presentation shape.
"""
import argparse
import json
import sys
from dataclasses import dataclass
from math import lcm
from typing import Optional

from .covers import CoverSpec, branched_product, homology_order, verify_cover
from .errors import NotAcyclicError, TorsionError, ValidationError
from .groups.finab import EpiToG, FinAbGroup
from .groups.knots import presentation_from_braid, wirtinger_from_pd
from .groups.presentation import Presentation, abelianization
from .groups.schreier import reidemeister_schreier
from .reps import AbelMap, MatRep, characters, tensor_rep, trivial_rep
from .scalars.cyclotomic import cyclotomic_field
from .scalars.laurent import LaurentPoly
from .scalars.parsing import parse_cyclo, parse_laurent, render_laurent, required_conductor
from .torsion import wada_torsion

COMMANDS = ("compute", "verify-cover", "branched", "homology-order", "characters", "rs")


def _int(x, what):
    try:
        return int(str(x).strip())
    except ValueError:
        raise ValidationError(f"{what}: expected an integer, got {x!r}") from None


def presentation_from_json(job) -> Optional[Presentation]:
    sources = [k for k in ("presentation", "pd", "braid") if k in job]
    if len(sources) > 1:
        raise ValidationError(f"give exactly one of presentation / pd / braid, got {sources}")
    if not sources:
        return None
    if "presentation" in job:
        spec = job["presentation"]
        if not isinstance(spec, dict) or "generators" not in spec:
            raise ValidationError("presentation needs a 'generators' list")
        return Presentation.from_strings(spec["generators"], spec.get("relators", []), spec.get("meridians"))
    if "pd" in job:
        pd = [[_int(x, "pd label") for x in c] for c in job["pd"]]
        return wirtinger_from_pd(pd)
    spec = job["braid"]
    if isinstance(spec, list):
        word = [_int(x, "braid letter") for x in spec]
        strands = max([abs(x) for x in word] + [1]) + 1
    else:
        word = [_int(x, "braid letter") for x in spec.get("word", [])]
        strands = _int(spec.get("strands", 2), "strands")
    return presentation_from_braid(word, strands)


def _rho_texts(job):
    spec = job.get("rho")
    if spec is None:
        return []
    images = spec.get("images", {})
    mats = images.values() if isinstance(images, dict) else images
    return [str(x) for m in mats for row in m for x in row]


@dataclass
class Job:
    """A validated job: group, phi, rho, optional cover and options."""

    presentation: Optional[Presentation]
    phi: Optional[AbelMap]
    rho: Optional[MatRep]
    cover: Optional[CoverSpec]
    conductor: int
    q: Optional[int]
    alexander: Optional[LaurentPoly]


def build_job(job, conductor=None, check_rep=True) -> Job:
    if not isinstance(job, dict):
        raise ValidationError("a job must be a JSON object")
    p = presentation_from_json(job)

    cover = None
    if "cover" in job:
        spec = job["cover"]
        group = FinAbGroup(tuple(_int(q, "group order") for q in spec.get("group", [])))
        rows = tuple(tuple(_int(x, "pi_bar entry") for x in row) for row in spec.get("pi_bar", []))
        nvars = len(rows[0]) if rows else None
        cover = (group, rows, nvars)
    q = _int(job["q"], "q") if "q" in job else None

    # session conductor
    N = lcm(1, _int(job.get("conductor", 1), "conductor"), conductor or 1)
    bare = False
    texts = _rho_texts(job) + ([str(job["alexander"])] if "alexander" in job else [])
    for s in texts:
        n, b = required_conductor(s)
        N = lcm(N, n)
        bare = bare or b
    if bare and N == 1 and not (conductor or job.get("conductor")):
        raise ValidationError("bare 'z' needs an explicit conductor (--conductor or \"conductor\")")
    if cover is not None:
        N = lcm(N, cover[0].exponent)
    if q:
        N = lcm(N, q)
    F = cyclotomic_field(N)

    alexander = parse_laurent(job["alexander"], F, 1) if "alexander" in job else None

    phi = rho = None
    if p is not None:
        if "phi" in job:
            spec = job["phi"]
            if isinstance(spec, dict):
                missing = [g for g in p.generator_names if g not in spec]
                if missing:
                    raise ValidationError(f"phi has no image for {missing}")
                imgs = [spec[g] for g in p.generator_names]
            else:
                imgs = spec
            imgs = [[_int(x, "phi entry") for x in (v if isinstance(v, list) else [v])] for v in imgs]
            if len({len(v) for v in imgs}) > 1:
                raise ValidationError("phi images must all have the same length")
            phi = AbelMap(tuple(tuple(v) for v in imgs), len(imgs[0]) if imgs else 0)
        else:
            phi = AbelMap.from_matrix(abelianization(p).phi_matrix)
        phi.validate(p)

        if "rho" in job:
            spec = job["rho"]
            dim = _int(spec.get("dim", 1), "dim")
            images = spec.get("images", {})
            if isinstance(images, dict):
                missing = [g for g in p.generator_names if g not in images]
                if missing:
                    raise ValidationError(f"rho has no image for {missing}")
                images = [images[g] for g in p.generator_names]
            mats = tuple(tuple(tuple(parse_cyclo(x, F) for x in row) for row in m) for m in images)
            rho = MatRep(mats, dim)
        else:
            rho = trivial_rep(F, p.num_generators)
        rho.validate(p, check_relators=check_rep)

    cover_spec = None
    if cover is not None:
        group, rows, nvars = cover
        nv = phi.nvars if phi is not None else nvars
        cover_spec = CoverSpec(group, EpiToG(group, rows, nv)).validate()
    elif q is not None and phi is not None:
        cover_spec = CoverSpec.cyclic(q, [1] * phi.nvars)
    return Job(p, phi, rho, cover_spec, N, q, alexander)


# -- commands -------------------------------------------------------------------------------

def _need(job, *attrs):
    for a in attrs:
        if getattr(job, a) is None:
            raise ValidationError(f"this command needs '{a}' in the input")


def cmd_compute(job: Job):
    _need(job, "presentation")
    tv = wada_torsion(job.presentation, tensor_rep(job.phi, job.rho, cyclotomic_field(job.conductor)))
    data = tv.to_json()
    data["torsion"] = tv.render()
    return 0, data, [tv.render()]


def cmd_verify_cover(job: Job, workers=1):
    _need(job, "presentation", "cover")
    rep = verify_cover(job.presentation, job.phi, job.rho, job.cover, conductor=job.conductor, workers=workers)
    data = rep.to_json()
    lines = []
    lines.append(f"lhs: {rep.lhs.render() if rep.lhs is not None else 'unavailable (' + rep.lhs_error + ')'}")
    lines.append(f"rhs: {rep.rhs.render()}")
    for xi, tv in rep.factors:
        lines.append(f"  factor {xi}: {tv.render()}")
    if rep.equal is not None:
        lines.append(f"equal up to unit: {rep.equal}")
    if rep.witness is not None:
        lines.append(f"witness unit: {rep.witness}")
    if rep.sublattice is not None:
        lines.append(f"lhs supported on ker(pi_bar): {rep.sublattice}")
    if rep.equal is None:
        code = 4
    else:
        code = 0 if rep.equal else 1
    return code, data, lines


def _alexander(job: Job):
    if job.alexander is not None:
        return job.alexander
    _need(job, "presentation")
    if job.phi.nvars != 1 or job.rho.dim != 1:
        raise ValidationError("branched formulas need a knot (n = 1) and the trivial representation")
    F = cyclotomic_field(job.conductor)
    tv = wada_torsion(job.presentation, tensor_rep(job.phi, trivial_rep(F, job.presentation.num_generators), F))
    t_minus_1 = LaurentPoly.variable(F, 1, 0) - LaurentPoly.constant(F, 1, 1)
    num = tv.value.num * t_minus_1
    try:
        return num.divexact(tv.value.den)
    except ArithmeticError:
        raise ValidationError("torsion times (t - 1) is not a Laurent polynomial") from None


def cmd_branched(job: Job):
    _need(job, "q")
    out = branched_product(_alexander(job), job.q, conductor=job.conductor)
    s = render_laurent(out)
    return 0, {"q": str(job.q), "product": s}, [s]


def cmd_homology_order(job: Job):
    _need(job, "q")
    order = homology_order(_alexander(job), job.q, conductor=job.conductor)
    return 0, {"q": str(job.q), "order": str(order)}, [str(order)]


def cmd_characters(job: Job):
    _need(job, "cover")
    chars = characters(job.cover.group)
    data = {"group": str(job.cover.group), "characters": [[str(k) for k in xi.values] for xi in chars]}
    return 0, data, [str(xi) for xi in chars]


def cmd_rs(job: Job):
    _need(job, "presentation", "cover")
    sub = reidemeister_schreier(job.presentation, job.phi.matrix(), job.cover.pi_bar)
    parent = job.presentation.generator_names
    from .groups.words import render_word
    inclusion = {name: render_word(w, parent)
                 for name, w in zip(sub.presentation.generator_names, sub.inclusion)}
    data = {"presentation": sub.presentation.to_json(), "index": str(sub.index), "inclusion": inclusion}
    lines = [str(sub.presentation), f"index {sub.index}"]
    lines += [f"  {k} -> {v}" for k, v in inclusion.items()]
    return 0, data, lines


def run_job(raw, command, conductor=None, check_rep=True, workers=1):
    """Run one job; returns (exit_code, json_data, human_lines).  Never raises TorsionError."""
    try:
        job = build_job(raw, conductor=conductor, check_rep=check_rep)
        if command == "compute":
            return cmd_compute(job)
        if command == "verify-cover":
            return cmd_verify_cover(job, workers=workers)
        if command == "branched":
            return cmd_branched(job)
        if command == "homology-order":
            return cmd_homology_order(job)
        if command == "characters":
            return cmd_characters(job)
        if command == "rs":
            return cmd_rs(job)
        raise ValidationError(f"unknown command {command!r}")
    except TorsionError as exc:
        data = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, NotAcyclicError) and exc.character is not None:
            data["character"] = exc.character
        return exc.exit_code, data, [f"error: {exc}"]


def build_parser():
    ap = argparse.ArgumentParser(prog="twistedtorsion", description="Twisted torsion of finite abelian covers.")
    ap.add_argument("--input", required=True, help="job file (JSON object, or a list of jobs for batch mode); '-' for stdin")
    ap.add_argument("--command", choices=COMMANDS, default="compute")
    ap.add_argument("--conductor", type=int, default=None, help="cyclotomic conductor override")
    ap.add_argument("--json", action="store_true", help="machine-readable output only")
    ap.add_argument("--skip-rep-check", action="store_true", help="do not check rho on relators (testing only)")
    ap.add_argument("--workers", type=int, default=1, help="processes for the character product")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.input == "-":
            raw = json.load(sys.stdin)
        else:
            with open(args.input) as fh:
                raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return 2
    opts = dict(conductor=args.conductor, check_rep=not args.skip_rep_check, workers=args.workers)
    if isinstance(raw, list):
        worst = 0
        for i, job in enumerate(raw):
            code, data, _ = run_job(job, args.command, **opts)
            print(json.dumps({"index": i, "exit_code": code, "result": data}, sort_keys=True))
            worst = max(worst, code)
        return worst
    code, data, lines = run_job(raw, args.command, **opts)
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        out = sys.stderr if code and "error" in data else sys.stdout
        for line in lines:
            print(line, file=out)
        if "error" not in data:
            print(json.dumps(data, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
