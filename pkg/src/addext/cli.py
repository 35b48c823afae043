"""Command-line front end.

Exit codes: 0 success or a true decision, 1 a verified false decision
(map is not an isometry, does not extend, campaign failed), 2 usage or
malformed input, 3 refusal to compute (budget or size guard).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .additive_code import AdditiveCode, code_from_json, column_tuple, is_l_linear, is_mds
from .constructions import example1, rs_code, unextendible_pair
from .errors import AddExtError, BudgetExceeded, EmptyCode, MalformedInput, TooLarge
from .field_tower import FieldTower, default_tower, tower_from_json
from .harness import MODES, THEOREMS, Campaign, threshold_n_scan, verify_theorem
from .isometry import (
    brute_force_extension,
    covering_witness,
    criterion_holds,
    decide_extendible,
    identity_map,
    is_isometry_direct,
    map_from_json,
)
from .partitions import beutelspacher_bound, min_partition


class _Out:
    def __init__(self, path: str | None):
        self.path = path
        self.chunks: list[str] = []

    def write(self, text: str = ""):
        self.chunks.append(text)

    def json(self, obj):
        self.chunks.append(json.dumps(obj, indent=2))

    def flush(self):
        text = "\n".join(self.chunks) + "\n"
        if self.path:
            Path(self.path).write_text(text)
        else:
            sys.stdout.write(text)


def _load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as e:
        raise MalformedInput(f"{path}: {e.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None


def _tower(args) -> FieldTower:
    if getattr(args, "field", None):
        return tower_from_json(_load_json(args.field))
    return default_tower(args.p, args.s, args.m)


def _spaces(spaces) -> list:
    return [S.encode() for S in spaces]


def _dims(spaces) -> list[int]:
    return [S.dim for S in spaces]


def _field_args(sp, m_default=2):
    sp.add_argument("--p", type=int, default=2, help="characteristic")
    sp.add_argument("--s", type=int, default=1, help="degree of K over GF(p)")
    sp.add_argument("--m", type=int, default=m_default, help="degree of L over K")
    sp.add_argument("--field", help="field description JSON file (overrides --p/--s/--m)")


def cmd_make(args, out: _Out) -> int:
    if args.what == "example1":
        _, f = example1()
        out.json(f.to_json())
    elif args.what == "counterexample":
        _, f = unextendible_pair(_tower(args))
        out.json(f.to_json())
    elif args.what == "rs":
        if args.n is None or args.kl is None:
            raise MalformedInput("make rs needs --n and --kl")
        out.json(rs_code(_tower(args), args.n, args.kl).to_json())
    elif args.what == "identity":
        if not args.code:
            raise MalformedInput("make identity needs --code")
        out.json(identity_map(_read_code(args.code)).to_json())
    return 0


def _read_code(path: str) -> AdditiveCode:
    d = _load_json(path)
    if isinstance(d, dict) and "images" in d and "code" in d:
        d = d["code"]
    return code_from_json(d)


def cmd_check_code(args, out: _Out) -> int:
    C = _read_code(args.code)
    V = column_tuple(C)
    info = {"n": C.n, "k": C.k, "q": C.tower.q, "m": C.tower.m,
            "column_dims": _dims(V), "column_spaces": _spaces(V)}
    try:
        prof = is_mds(C)
        info.update(d=prof.d, k_L=prof.k_L, mds=prof.is_mds)
        if prof.note:
            info["mds_note"] = prof.note
    except EmptyCode:
        info.update(d=None, mds=False)
    info["l_linear"] = is_l_linear(C)
    if args.json:
        out.json(info)
    else:
        out.write(f"code: n={C.n} k={C.k} over K of order {C.tower.q}, [L:K]={C.tower.m}")
        out.write(f"minimum distance: {info['d']}  MDS: {info['mds']}  L-linear: {info['l_linear']}")
        out.write(f"column space dims: {info['column_dims']}")
        for i, S in enumerate(V):
            out.write(f"  V_{i}: {S.encode()}")
    return 0


def cmd_check_map(args, out: _Out) -> int:
    f = map_from_json(_load_json(args.map))
    direct = is_isometry_direct(f)
    V, U = column_tuple(f.domain), f.image_tuple()
    crit = criterion_holds(f.tower.K, V, U)
    info = {"isometry": direct, "criterion": crit, "V_dims": _dims(V), "U_dims": _dims(U)}
    if args.json:
        out.json(info)
    else:
        out.write(f"isometry (weight check): {direct}")
        out.write(f"counting criterion: {crit}")
        out.write(f"V dims: {info['V_dims']}  U dims: {info['U_dims']}")
    return 0 if direct else 1


def cmd_extend(args, out: _Out) -> int:
    f = map_from_json(_load_json(args.map))
    if not is_isometry_direct(f):
        info = {"isometry": False, "extends": None}
        out.json(info) if args.json else out.write("the map is not an isometry; extension is undefined")
        return 1
    dec = decide_extendible(f)
    info = {"isometry": True, "extends": dec.extends,
            "V": _spaces(dec.V), "U": _spaces(dec.U),
            "V_dims": _dims(dec.V), "U_dims": _dims(dec.U)}
    try:
        M = brute_force_extension(f, args.budget)
        info["brute_force"] = "found" if M else "none"
        info["monomial"] = M.to_json() if M else None
    except BudgetExceeded as e:
        info["brute_force"] = f"skipped: {e}"
    if not dec.extends:
        w = covering_witness(f.tower.K, dec.V, dec.U)
        info["covering"] = w._asdict() if w else None
    if args.json:
        out.json(info)
    else:
        out.write(f"extends={str(dec.extends).lower()}")
        out.write(f"V dims: {info['V_dims']}")
        for i, S in enumerate(dec.V):
            out.write(f"  V_{i}: {S.encode()}")
        out.write(f"U dims: {info['U_dims']}")
        for i, S in enumerate(dec.U):
            out.write(f"  U_{i}: {S.encode()}")
        out.write(f"brute force: {info['brute_force']}")
        if info.get("monomial"):
            out.write(f"monomial map: {json.dumps(info['monomial'])}")
        if info.get("covering"):
            out.write(f"covering: {json.dumps(info['covering'])}")
    return 0 if dec.extends else 1


def cmd_sigma(args, out: _Out) -> int:
    t = default_tower(args.p, args.s, 1)
    P = min_partition(t.K, args.m, args.budget)
    bound = beutelspacher_bound(t.q, args.m)
    if args.json:
        out.json({"q": t.q, "m": args.m, "sigma": len(P), "partition": _spaces(P), "bound": bound})
    else:
        out.write(str(len(P)))
        for S in P:
            out.write(f"  {S.encode()}")
        out.write(f"bound: {bound}")
    return 0


def cmd_verify(args, out: _Out) -> int:
    c = Campaign(
        theorem=args.theorem, p=args.p, s=args.s, m=args.m, n=args.n, k_L=args.kl,
        k_max=args.k_max, n_max=args.n_max, budget=args.budget, mode=args.mode,
        seed=args.seed, allow_sampling=args.allow_sampling, maps=not args.no_maps,
        catalog=args.catalog,
    )
    report = verify_theorem(c)
    return _emit_report(report, args, out)


def _emit_report(report, args, out: _Out) -> int:
    data = report.to_json(timing=args.timing)
    if args.json:
        out.json(data)
    else:
        out.write(f"{report.theorem}: {report.verdict} ({report.cases_checked} cases, mode {report.mode})")
        for f in report.failures:
            out.write(f"  failure: {json.dumps(f)}")
    return 0 if report.verdict == "pass" else 1


def cmd_scan(args, out: _Out) -> int:
    report = threshold_n_scan(args.p**args.s, args.k, args.n_max, args.dim_bound, args.budget)
    if not args.json:
        for row in report.details["scan"]:
            out.write(f"n={row['n']}: {row['nontrivial']} nontrivial solution(s)")
    return _emit_report(report, args, out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="addext", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--out", help="write output to this file")

    sp = sub.add_parser("make", help="emit code or map JSON")
    sp.add_argument("what", choices=["example1", "counterexample", "rs", "identity"])
    _field_args(sp)
    sp.add_argument("--n", type=int)
    sp.add_argument("--kl", type=int)
    sp.add_argument("--code", help="code or map JSON (for identity)")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_make, json=True)

    sp = sub.add_parser("check-code", help="parameters and column spaces of a code")
    sp.add_argument("--code", default="-", help="code or map JSON file, '-' for stdin")
    common(sp)
    sp.set_defaults(func=cmd_check_code)

    sp = sub.add_parser("check-map", help="is the map an isometry")
    sp.add_argument("--map", default="-")
    common(sp)
    sp.set_defaults(func=cmd_check_map)

    sp = sub.add_parser("extend", help="does the isometry extend to a monomial map")
    sp.add_argument("--map", default="-")
    sp.add_argument("--budget", type=int, default=2**26)
    common(sp)
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("sigma", help="fewest parts in a partition of K^m")
    _field_args(sp, m_default=2)
    sp.add_argument("--budget", type=int, default=10**7)
    common(sp)
    sp.set_defaults(func=cmd_sigma)

    sp = sub.add_parser("verify", help="run a verification campaign")
    sp.add_argument("--theorem", required=True, choices=THEOREMS)
    _field_args(sp)
    sp.add_argument("--n", type=int)
    sp.add_argument("--kl", type=int)
    sp.add_argument("--k-max", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--budget", type=int, default=2**24)
    sp.add_argument("--mode", choices=MODES, default="exhaustive")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--allow-sampling", action="store_true")
    sp.add_argument("--no-maps", action="store_true", help="structural checks only")
    sp.add_argument("--catalog", action="store_true", help="prop5: all L-linear codes of the given shape")
    sp.add_argument("--timing", action="store_true", help="include elapsed seconds")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan-threshold", help="nontrivial solutions by length")
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--s", type=int, default=1)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--dim-bound", type=int)
    sp.add_argument("--budget", type=int, default=2**22)
    sp.add_argument("--timing", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_scan)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    out = _Out(getattr(args, "out", None))
    try:
        code = args.func(args, out)
    except (BudgetExceeded, TooLarge) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (AddExtError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    out.flush()
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
