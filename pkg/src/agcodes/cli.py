"""Command-line front end: build | dual | verify | export-alist | report.

Every run is deterministic: identical arguments produce byte-identical
output files, and JSON reports carry a "schema": 1 field and sorted keys.
Failures exit nonzero with a machine-parsable error record on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from . import analysis, dual as dual_mod, transforms
from .alist import export_parity_alist
from .codes import (build_affine_grassmann, theoretical_params,
                    write_generator)
from .errors import AGCError, TooLarge
from .monomials import Rectangle

DEFAULT_MAX_COORDS = 2 ** 20


def _emit(obj, stream=None):
    print(json.dumps(obj, sort_keys=True), file=stream or sys.stdout)


def _coord_cap(args):
    env = os.environ.get("AGC_MAX_COORDS")
    if env is not None:
        return int(env)
    return DEFAULT_MAX_COORDS


def _check_cap(args):
    n = args.q ** (args.l * (args.m - args.l))
    cap = _coord_cap(args)
    if n > cap:
        raise TooLarge(f"n = {n} exceeds AGC_MAX_COORDS = {cap}")


def _build(args):
    _check_cap(args)
    C = build_affine_grassmann(args.l, args.m, args.r, args.q)
    params = theoretical_params(args.l, args.m, args.r, args.q)
    record = {
        "schema": 1,
        "q": args.q, "l": args.l, "m": args.m, "r": args.r,
        "n": C.n, "k": C.k,
        "n_theory": params.n, "k_theory": params.k, "d_theory": params.d,
        "match": C.n == params.n and C.k == params.k,
    }
    if args.out:
        write_generator(C, args.out)
        with open(args.out + ".json", "w") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
    _emit(record)
    return 0 if record["match"] else 1


def _dual(args):
    _check_cap(args)
    C = build_affine_grassmann(args.l, args.m, args.r, args.q)
    D = dual_mod.build_dual_code(C)  # exact orthogonality verified inside
    record = {"schema": 1, "q": args.q, "l": args.l, "m": args.m,
              "r": args.r, "n": D.n, "k": D.k}
    if args.out:
        write_generator(D, args.out)
        export_parity_alist(D.generator, args.out + ".alist", args.q)
    _emit(record)
    return 0


def _export_alist(args):
    _check_cap(args)
    C = build_affine_grassmann(args.l, args.m, args.r, args.q)
    D = dual_mod.build_dual_code(C)
    export_parity_alist(D.generator, args.out, args.q)
    _emit({"schema": 1, "written": args.out, "n": D.n, "rows": D.k})
    return 0


def _verify(args):
    _check_cap(args)
    q, ell, m = args.q, args.l, args.m
    rng = np.random.default_rng(args.seed)
    checks = []

    def check(name, fn):
        t0 = time.perf_counter()
        try:
            ok = bool(fn())
            err = None
        except Exception as exc:  # report, do not abort the battery
            ok, err = False, f"{type(exc).__name__}: {exc}"
        entry = {"name": name, "pass": ok,
                 "seconds": round(time.perf_counter() - t0, 3)}
        if err:
            entry["error"] = err
        checks.append(entry)

    for r in range(ell + 1):
        C = build_affine_grassmann(ell, m, r, q)
        params = theoretical_params(ell, m, r, q)
        check(f"params-r{r}", lambda C=C, p=params: C.n == p.n and C.k == p.k)
        if r >= 1:
            D = dual_mod.build_dual_code(C)
            check(f"dual-dim-r{r}", lambda D=D, p=params: D.k == p.n - p.k)
        so = dual_mod.self_orthogonality_check(ell, m, r, q, code=C)
        check(f"self-orth-r{r}",
              lambda so=so: so["selfOrthogonal"] == so["expectedByTheorem"])
        if args.deep and r >= 1:
            rep = analysis.low_weight_dual_search(C, w_max=4)
            expected_d = 3 if q > 2 else (4 if m - ell > 1 else None)
            if expected_d is not None and r <= ell:
                check(f"dual-min-weight-r{r}",
                      lambda rep=rep, e=expected_d: rep.min_distance == e)

    # a random affine map must induce an automorphism of the top-level code
    Ctop = build_affine_grassmann(ell, m, ell, q)
    from .codes import PointEnumeration
    pe = PointEnumeration(Rectangle(ell, m - ell), Ctop.field)
    T = transforms.random_transform(Ctop.rect, Ctop.field, rng)
    perm = transforms.induced_permutation(T, pe)
    check("automorphism-sample",
          lambda: transforms.is_automorphism(Ctop, perm))

    ok = all(c["pass"] for c in checks)
    _emit({"schema": 1, "q": q, "l": ell, "m": m,
           "ok": ok, "checks": checks})
    return 0 if ok else 1


def _report(args):
    _check_cap(args)
    params = theoretical_params(args.l, args.m, args.r, args.q)
    forb, nonforb, bino = dual_mod.is_forbidden_counts(args.l, args.m,
                                                      args.r, args.q)
    record = {
        "schema": 1,
        "q": args.q, "l": args.l, "m": args.m, "r": args.r,
        "n": params.n, "k": params.k, "d": params.d,
        "min_weight_count": params.min_weight_count,
        "forbidden": forb, "non_forbidden": nonforb, "binomials": bino,
        "automorphism_subgroup_order":
            transforms.subgroup_order_bound(args.l, args.m, args.q),
    }
    if args.deep and args.r >= 1:
        C = build_affine_grassmann(args.l, args.m, args.r, args.q)
        rep = analysis.low_weight_dual_search(C, w_max=4)
        record["dual_weight_report"] = json.loads(rep.to_json())
        record["dual_weight_counts"] = {str(w): c
                                        for w, c in rep.weight_counts.items()}
    _emit(record)
    return 0


def _add_common(sp, need_r=True, need_out=False):
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int)
    group.add_argument("--lp", type=int, help="ell'; m = l + lp")
    if need_r:
        sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--out", required=need_out,
                    help="output path" + ("" if need_out else " (optional)"))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--deep", action="store_true",
                    help="enable checks above ~1 second")
    sp.add_argument("--threads", type=int, default=1,
                    help="worker cap (kernels are single-threaded)")


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="agcodes",
        description="Affine Grassmann codes: construction, duals, verification")
    sub = parser.add_subparsers(dest="command", required=True)
    handlers = {}
    for name, fn, need_r, need_out in [
        ("build", _build, True, False),
        ("dual", _dual, True, False),
        ("verify", _verify, False, False),
        ("export-alist", _export_alist, True, True),
        ("report", _report, True, False),
    ]:
        sp = sub.add_parser(name)
        _add_common(sp, need_r=need_r, need_out=need_out)
        handlers[name] = fn
    args = parser.parse_args(argv)
    if args.m is None:
        args.m = args.l + args.lp
    if not hasattr(args, "r"):
        args.r = None
    try:
        return handlers[args.command](args)
    except AGCError as exc:
        _emit({"schema": 1, "error": type(exc).__name__, "message": str(exc)},
              stream=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
