"""Command line scenario runner.

One command per invocation, or a scenario file with one command per line
('#' comments allowed).  Output is deterministic for a fixed seed: a
'#'-prefixed header block followed by tab-separated rows; --json switches
to a machine-readable dump.  Exit codes: 0 all assertions pass, 1 an
assertion failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .algebra import kronecker_algebra, truncated_dvr
from .catalog import (dvr_chain_module, kronecker_preinjective,
                      kronecker_preprojective, kronecker_regular)
from .errors import HorizonExceeded
from .fields import field_from_spec
from .modules import hom_space, regular_module
from .ppformula import LEFT, RIGHT, PpPair, annihilator, divisibility, dual, \
    pp_type_generator_of_element
from .ppsyntax import format_formula, parse_formula
from .probes import interval_probe
from .realize import realize_in_tower, verify_bimodule_idempotents
from .suites import CRITERIA_ORDER, SUITES
from .tower import build_tower, verify_hom_bounds
from .tube import hom_dimension, parse_tube_descriptor
from .ziegler import (CLOSURE_ASSUMPTION, closure, is_closed, parse_point_set,
                      points)


def _algebra_from_spec(spec: str, field):
    parts = spec.split(":")
    if parts[0] == "dvr":
        n = int(parts[1])
        return truncated_dvr(n, field), n
    if parts[0] == "kronecker":
        return kronecker_algebra(field), None
    if parts[0] == "tower":
        tower = build_tower(int(parts[1]), int(parts[2]), field)
        return tower.top, tower.N
    raise ValueError(f"unknown algebra spec {spec!r} "
                     "(use dvr:N, kronecker, tower:N:n)")


def _module_from_literal(alg, text: str):
    text = text.strip()
    if text == "regular":
        return regular_module(alg)
    if text.startswith("V/m^"):
        return dvr_chain_module(alg, int(text[4:]))
    if text.startswith("PP(") and text.endswith(")"):
        return kronecker_preprojective(alg, int(text[3:-1]))
    if text.startswith("PI(") and text.endswith(")"):
        return kronecker_preinjective(alg, int(text[3:-1]))
    if text.startswith("R(") and "[" in text:
        lam, rest = text[2:].split(")", 1)
        n = int(rest.strip("[]"))
        lam = lam if lam == "inf" else alg.field.of(int(lam))
        return kronecker_regular(alg, lam, n)
    raise ValueError(f"unknown module literal {text!r}")


def _header(args, horizon=None) -> list[str]:
    out = [f"# ppmod {__version__}",
           f"# field {args.field}",
           f"# seed {args.seed}"]
    if horizon is not None:
        out.append(f"# horizon {horizon}")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ppmod", description=__doc__)
    p.add_argument("--field", default="2",
                   help="coefficient field: a prime p or 'rational'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--parallel", action="store_true",
                   help="run scenario lines concurrently (buffered output)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("suite", help="run acceptance suites")
    s.add_argument("name", nargs="?", default="all",
                   choices=["all"] + CRITERIA_ORDER)

    c = sub.add_parser("classify", help="label table of a tower")
    c.add_argument("--N", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--dim-cap", type=int, default=8)

    f = sub.add_parser("pp", help="pp-formula operations")
    f.add_argument("op", choices=["dual", "eval", "implies", "print"])
    f.add_argument("--algebra", default="dvr:3")
    f.add_argument("--side", default="right", choices=["right", "left"])
    f.add_argument("--formula", required=True)
    f.add_argument("--formula2")
    f.add_argument("--module")

    z = sub.add_parser("ziegler", help="symbolic spectra")
    z.add_argument("op", choices=["points", "closure", "is-closed"])
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--set", dest="point_set", default="")

    t = sub.add_parser("tube", help="translation quiver operations")
    t.add_argument("--tube", required=True,
                   help="descriptor like 'm=2 n=[1,0] horizon=6'")
    t.add_argument("--dot", action="store_true")
    t.add_argument("--hom-dim", help="source->target as 'i,k,j->i,k,l'")

    pr = sub.add_parser("probe", help="shortness interval probes")
    pr.add_argument("target", choices=["kronecker"])
    pr.add_argument("--budget", type=int, default=3)
    pr.add_argument("--max-dim", type=int, default=9)

    r = sub.add_parser("realize", help="verify a realized tube ladder")
    r.add_argument("--N", type=int, required=True)
    r.add_argument("--height", type=int, required=True)
    r.add_argument("--stages", type=int, required=True)

    run = sub.add_parser("run", help="execute a scenario file")
    run.add_argument("file")
    return p


def execute(args) -> tuple[int, list[str]]:
    """Execute one parsed command; returns (exit code, output lines)."""
    field = field_from_spec(args.field)
    cmd = args.command
    if cmd == "suite":
        names = CRITERIA_ORDER if args.name == "all" else [args.name]
        lines = _header(args)
        lines.append("# suites run over their declared fields and universes;"
                     " --field does not alter them")
        ok = True
        payload = []
        for name in names:
            res = SUITES[name](args.seed)
            ok = ok and res.passed
            payload.append({"suite": name, "passed": res.passed,
                            "detail": res.lines})
            lines.append(res.summary(with_time=False))
            lines.extend(f"\t{ln}" for ln in res.lines)
        if args.json:
            return (0 if ok else 1), [json.dumps(payload, indent=2)]
        return (0 if ok else 1), lines

    if cmd == "classify":
        tower = build_tower(args.N, args.n, field)
        ok, rows = verify_hom_bounds(tower, args.dim_cap)
        lines = _header(args, horizon=args.N)
        if args.json:
            return (0 if ok else 1), [json.dumps(
                [{"label": lab, "dim": d, "hom_from_bimodule": h}
                 for lab, d, h in rows], indent=2)]
        lines.append("label\tdim\tdim Hom(L_n, -)")
        for lab, d, h in rows:
            lines.append(f"{lab}\t{d}\t{h}")
        lines.append(f"hom_bound_ok\t{ok}")
        return (0 if ok else 1), lines

    if cmd == "pp":
        alg, horizon = _algebra_from_spec(args.algebra, field)
        side = RIGHT if args.side == "right" else LEFT
        phi = parse_formula(alg, args.formula, side)
        lines = _header(args, horizon=horizon)
        if args.op == "print":
            lines.append(f"formula\t{format_formula(phi)}")
            return 0, lines
        if args.op == "dual":
            d = dual(phi)
            lines.append(f"input\t{format_formula(phi)}")
            lines.append(f"dual\t{format_formula(d)}\t(side {d.side})")
            lines.append(f"involution\t{dual(d).equivalent(phi)}")
            if phi.n == 1:
                for i in range(alg.dim):
                    a = alg.basis_el(i)
                    if d.equivalent(divisibility(alg, a, side=d.side)):
                        lines.append(f"equivalent_to\t{alg.labels[i]} "
                                     f"divides x1")
                    if d.equivalent(annihilator(alg, a, side=d.side)):
                        lines.append(f"equivalent_to\tx1 killed by "
                                     f"{alg.labels[i]}")
            return 0, lines
        if args.op == "eval":
            if not args.module:
                raise ValueError("pp eval needs --module")
            m = _module_from_literal(alg, args.module)
            val = phi.evaluate(m)
            lines.append(f"module\t{m.label}\tdim {m.dim}")
            lines.append(f"value_dim\t{val.dim}\tambient {val.ambient}")
            for row in val.basis.data:
                lines.append("basis\t" + ",".join(str(x) for x in row))
            return 0, lines
        if args.op == "implies":
            if not args.formula2:
                raise ValueError("pp implies needs --formula2")
            psi = parse_formula(alg, args.formula2, side)
            lines.append(f"implies\t{phi.implies(psi)}")
            return 0, lines

    if cmd == "ziegler":
        lines = _header(args)
        lines.append(CLOSURE_ASSUMPTION)
        if args.op == "points":
            full = points(args.n)
            lines.append(f"points\t{full}")
            return 0, lines
        s = parse_point_set(args.n, args.point_set)
        if args.op == "closure":
            lines.append(f"closure\t{closure(s)}")
            return 0, lines
        lines.append(f"is_closed\t{is_closed(s)}")
        return 0, lines

    if cmd == "tube":
        q = parse_tube_descriptor(args.tube)
        lines = _header(args, horizon=q.horizon)
        if args.dot:
            return 0, [q.dot()]
        lines.append(f"tube\tm={q.m}\tn={list(q.ray_lengths)}\t"
                     f"horizon={q.horizon}")
        lines.append(f"vertices\t{len(q.vertices())}")
        lines.append(f"arrows\t{len(q.arrows())}")
        if args.hom_dim:
            src_txt, tgt_txt = args.hom_dim.split("->")
            src = tuple(int(x) for x in src_txt.split(","))
            tgt = tuple(int(x) for x in tgt_txt.split(","))
            lines.append(f"hom_dim\t{hom_dimension(q, src, tgt)}")
        return 0, lines

    if cmd == "probe":
        alg = kronecker_algebra(field)
        pres = []
        i = 0
        while 2 * i + 1 <= args.max_dim:
            pres.append(kronecker_preprojective(alg, i))
            i += 1
        one = field.one()
        emb = next(h for h in hom_space(pres[0], pres[1]) if h.is_injective())
        phi = pp_type_generator_of_element(pres[0], (one,))
        psi = pp_type_generator_of_element(pres[1], emb((one,)))
        rep = interval_probe(PpPair(upper=phi, lower=psi), pres,
                             budget=args.budget)
        lines = _header(args)
        lines.extend(rep.to_text().rstrip("\n").split("\n"))
        return 0, lines

    if cmd == "realize":
        tower = build_tower(args.N, args.height, field)
        rt = realize_in_tower(tower, args.stages)
        res = verify_bimodule_idempotents(rt)
        lines = _header(args, horizon=args.N)
        for name, ok in rt.checked_squares:
            lines.append(f"square\t{name}\t{'ok' if ok else 'FAILED'}")
        lines.append(f"bimodule_multiplicities\t{res['expected']}\t"
                     f"{'ok' if res['ok'] else 'MISMATCH'}")
        return (0 if res["ok"] else 1), lines

    raise ValueError(f"unhandled command {cmd!r}")


def run_scenario(path: str, parser, base_args) -> tuple[int, list[str]]:
    with open(path) as fh:
        raw = fh.readlines()
    jobs = []
    for lineno, line in enumerate(raw, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        jobs.append((lineno, stripped))

    def one(job):
        lineno, text = job
        try:
            argv = shlex.split(text)
            sub_args = parser.parse_args(
                [f"--field={base_args.field}", f"--seed={base_args.seed}"]
                + (["--json"] if base_args.json else []) + argv)
        except SystemExit:
            return 2, [f"# line {lineno}: parse error in {text!r}"]
        if sub_args.command == "run":
            return 2, [f"# line {lineno}: nested scenarios are not allowed"]
        try:
            return execute(sub_args)
        except HorizonExceeded as exc:
            return 2, [str(exc)]
        except ValueError as exc:
            return 2, [f"# line {lineno}: {exc}"]

    if base_args.parallel:
        with ThreadPoolExecutor(max_workers=4) as pool:
            results = list(pool.map(one, jobs))
    else:
        results = [one(j) for j in jobs]
    code = 0
    out = []
    for (lineno, text), (rc, lines) in zip(jobs, results):
        out.append(f"## {text}")
        out.extend(lines)
        code = max(code, rc)
    return code, out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            code, lines = run_scenario(args.file, parser, args)
        else:
            code, lines = execute(args)
    except HorizonExceeded as exc:
        print(str(exc))
        return 2
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
