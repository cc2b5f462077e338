"""Command-line front end: ``lchain <subcommand> ...``.

Exit status is 0 on success, 1 when a mathematical check fails and 2 on
bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Any

from .chain import ChainComplex, ChainMap, dual, mapping_cone, random_split_system, splitting_check
from .fixtures import fixture_dir
from .lgroups import UnsupportedInvariant, lgroups_table
from .poincare import PoincareComplex, l_class, product, verify_poincare
from .qstruct import q_group
from .spherecalc import (
    SElem,
    TElem,
    add,
    compose_structures,
    nonadditivity_demo,
    pairing,
    reconcile_check,
    whitney,
)
from .zxmod import (
    NotSimplyConnected,
    SimplicialComplex,
    ZXChainComplex,
    ZXMorphism,
    assemble,
    check_cycle_conditions,
    check_support,
    dual_cells,
)


class InputError(Exception):
    """Bad user input; reported with exit status 2."""


class CheckFailed(Exception):
    """A mathematical check failed; reported with exit status 1."""

    def __init__(self, message: str, payload: Any = None):
        super().__init__(message)
        self.payload = payload


# -- input ------------------------------------------------------------------


def resolve_path(name: str) -> Path:
    """A path as given, or a shipped fixture of that name."""
    p = Path(name)
    if p.exists():
        return p
    for cand in (fixture_dir() / p.name, fixture_dir() / f"{p.name}.json"):
        if cand.exists():
            return cand
    raise InputError(f"{name}: no such file or fixture")


def read_json(name: str) -> dict:
    path = resolve_path(name)
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def load(name: str, kind):
    obj = read_json(name)
    try:
        return kind.from_json_obj(obj)
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"{name}: {exc}") from exc


def load_complex(name: str) -> ChainComplex:
    """A chain complex file, or the underlying complex of a Poincaré complex file."""
    obj = read_json(name)
    try:
        if "structure" in obj:
            return PoincareComplex.from_json_obj(obj).complex
        return ChainComplex.from_json_obj(obj)
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"{name}: {exc}") from exc


def parse_ints(text: str, count: int, what: str) -> list[int]:
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError as exc:
        raise InputError(f"{what}: expected {count} comma-separated integers, got {text!r}") from exc
    if len(vals) != count:
        raise InputError(f"{what}: expected {count} comma-separated integers, got {text!r}")
    return vals


# -- output -------------------------------------------------------------------


def emit(args, data: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def homology_dict(c: ChainComplex) -> dict[str, str]:
    return {str(r): str(g) for r, g in c.homology_all().items()}


def homology_text(c: ChainComplex) -> str:
    lines = [f"H_{r} = {g}" for r, g in c.homology_all().items()]
    return "\n".join(lines) if lines else "zero complex"


def render_lgroups(max_n: int, fmt: str = "text") -> str:
    rows = lgroups_table(max_n)
    if fmt == "json":
        return json.dumps([{"n": n, "quadratic": a, "symmetric": b} for n, a, b in rows], indent=2)
    width = 8
    lines = ["n".ljust(4) + "L_n(Z)".ljust(width) + "L^n(Z)"]
    lines += [str(n).ljust(4) + a.ljust(width) + b for n, a, b in rows]
    return "\n".join(lines)


# -- subcommands ----------------------------------------------------------------


def cmd_lgroups(args) -> int:
    if args.max < 0:
        raise InputError("--max must be nonnegative")
    print(render_lgroups(args.max, args.format))
    return 0


def cmd_homology(args) -> int:
    c = load_complex(args.file)
    emit(args, {"homology": homology_dict(c)}, homology_text(c))
    return 0


def cmd_qgroup(args) -> int:
    c = load_complex(args.file)
    g = q_group(c, args.n, args.flavor, args.s_max)
    name = f"Q_{args.n}" if args.flavor == "quadratic" else f"Q^{args.n}"
    emit(args, {"flavor": args.flavor, "n": args.n, "group": str(g)}, f"{name}(C) = {g}")
    return 0


def _poincare_or_fail(p: PoincareComplex, name: str) -> None:
    if not verify_poincare(p):
        raise CheckFailed(f"{name}: duality map is not a homology isomorphism", p.to_json_obj())


def cmd_lclass(args) -> int:
    p = load(args.file, PoincareComplex)
    _poincare_or_fail(p, args.file)
    try:
        cls = l_class(p)
    except UnsupportedInvariant as exc:
        raise InputError(str(exc)) from exc
    emit(args, cls.to_json_obj(), str(cls))
    return 0


def cmd_product(args) -> int:
    p = load(args.left, PoincareComplex)
    q = load(args.right, PoincareComplex)
    for x, name in ((p, args.left), (q, args.right)):
        _poincare_or_fail(x, name)
    try:
        out = product(p, q)
        cls = l_class(out)
    except UnsupportedInvariant as exc:
        raise InputError(str(exc)) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.out:
        Path(args.out).write_text(out.to_json() + "\n")
    emit(args, {"class": cls.to_json_obj(), "rank": out.complex.total_rank()}, str(cls))
    return 0


def cmd_cone(args) -> int:
    f = load(args.file, ChainMap)
    c = mapping_cone(f)
    emit(args, {"cone": c.to_json_obj(), "homology": homology_dict(c)}, homology_text(c))
    return 0


def cmd_dual(args) -> int:
    c = load_complex(args.file)
    d = dual(c, args.n)
    emit(args, {"dual": d.to_json_obj(), "homology": homology_dict(d)}, homology_text(d))
    return 0


def cmd_splitting(args) -> int:
    if args.f and args.g:
        systems = [(load(args.f, ChainMap), load(args.g, ChainMap))]
    elif args.f or args.g:
        raise InputError("give both chain maps or neither")
    else:
        rng = random.Random(args.seed)
        systems = [random_split_system(rng) for _ in range(args.trials)]
    reports = []
    for i, (f, g) in enumerate(systems):
        try:
            rep = splitting_check(f, g)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        reports.append(rep)
        if not rep.holds:
            raise CheckFailed(
                f"splitting fails for system {i}:\n{rep.summary()}",
                {"f": f.to_json_obj(), "g": g.to_json_obj()},
            )
    data = {
        "systems": len(reports),
        "holds": True,
        "reports": [
            {k: {str(r): str(x) for r, x in getattr(rep, k).items()} for k in ("cone_f", "cone_g", "cone_gf")}
            for rep in reports
        ],
    }
    text = reports[0].summary() if len(reports) == 1 else f"splitting holds for {len(reports)} systems"
    emit(args, data, text)
    return 0


def _telem(args, text: str, what: str) -> TElem:
    x, y, z = parse_ints(text, 3, what)
    return TElem.of(args.p, args.q, x, y, z)


def _selem(args, text: str, what: str) -> SElem:
    x, y = parse_ints(text, 2, what)
    return SElem.of(args.p, args.q, x, y)


def cmd_spheres(args) -> int:
    verb = args.verb
    if verb in ("add", "whitney", "pairing"):
        t, u = _telem(args, args.t, "--t"), _telem(args, args.u, "--u")
        fn = {"add": add, "whitney": whitney, "pairing": pairing}[verb]
        r = fn(t, u)
        emit(args, {"result": list(r.as_ints())}, str(r))
        return 0
    if verb in ("compose", "reconcile"):
        sf, sg = _selem(args, args.sf, "--sf"), _selem(args, args.sg, "--sg")
        if verb == "compose":
            r = compose_structures(sf, sg)
            emit(args, {"result": list(r.as_ints())}, str(r))
            return 0
        rep = reconcile_check(sf, sg)
        data = {"lhs": list(rep.lhs.as_ints()), "rhs": list(rep.rhs.as_ints()), "holds": rep.holds}
        if not rep.holds:
            raise CheckFailed("reconciliation fails", data)
        emit(args, data, f"lhs {rep.lhs}\nrhs {rep.rhs}\nholds {rep.holds}")
        return 0
    if verb == "demo-nonadditivity":
        d = nonadditivity_demo(args.x, args.y, args.p, args.q)
        data = {"lhs": d.lhs, "rhs": d.rhs, "terms": list(d.terms)}
        text = f"lhs {d.lhs}\nrhs {d.rhs}\ndecomposition {d.terms[0]} + {d.terms[1]} + {d.terms[2]} = {d.decomposition_total}"
        emit(args, data, text)
        return 0
    raise InputError(f"unknown verb {verb}")


def cmd_zx(args) -> int:
    verb = args.verb
    if verb == "support":
        obj = read_json(args.file)
        try:
            f = ZXMorphism.from_json_obj(obj, check=False)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        ok = check_support(f)
        if not ok:
            bad = [[list(t), list(s)] for (t, s) in f.blocks if not set(s) <= set(t)]
            raise CheckFailed("support condition violated", {"violations": bad})
        emit(args, {"support": True}, "support condition holds")
        return 0
    if verb == "assemble":
        c = load(args.file, ZXChainComplex)
        try:
            a = assemble(c)
        except NotSimplyConnected as exc:
            raise InputError(str(exc)) from exc
        emit(
            args,
            {"complex": a.to_json_obj(), "homology": homology_dict(a), "contractible": a.is_acyclic()},
            homology_text(a) + f"\ncontractible: {a.is_acyclic()}",
        )
        return 0
    if verb == "dual-cells":
        x = load(args.file, SimplicialComplex)
        n = x.dimension if args.n is None else args.n
        dc = dual_cells(x, n)
        counts = ", ".join(f"{k}-cells {c}" for k, c in enumerate(dc.counts()))
        text = f"{counts}\ntop flags {dc.top_flag_total()}\nEuler characteristic {dc.euler_characteristic()}"
        emit(args, dc.to_json_obj(), text)
        return 0
    if verb == "cycle-check":
        c = load(args.file, ZXChainComplex)
        rep = check_cycle_conditions(c)
        data = rep.to_json_obj()
        if not rep.ok:
            raise CheckFailed("cycle conditions fail", data)
        emit(args, data, "\n".join(f"{k}: {v}" for k, v in data.items()))
        return 0
    raise InputError(f"unknown verb {verb}")


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    results = run_all(args.seed, args.trials if args.trials_given else None)
    if args.format == "json":
        print(json.dumps([{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--trials", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="lchain", parents=[common], description="Exact chain-level L-theory workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lgroups", parents=[common], help="print the L-groups of Z")
    p.add_argument("--max", type=int, default=7)
    p.set_defaults(func=cmd_lgroups)

    p = sub.add_parser("homology", parents=[common], help="homology of a chain complex file")
    p.add_argument("file")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("qgroup", parents=[common], help="Q_n or Q^n of a chain complex")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--flavor", choices=("quadratic", "symmetric"), default="quadratic")
    p.add_argument("--s-max", type=int, default=None)
    p.set_defaults(func=cmd_qgroup)

    p = sub.add_parser("lclass", parents=[common], help="L-theory class of a Poincaré complex")
    p.add_argument("file")
    p.set_defaults(func=cmd_lclass)

    p = sub.add_parser("product", parents=[common], help="product of two Poincaré complexes")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out", help="write the product complex here")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("cone", parents=[common], help="mapping cone of a chain map")
    p.add_argument("file")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("dual", parents=[common], help="the dual complex C^{n-*}")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("splitting-check", parents=[common], help="cone splitting for split injections")
    p.add_argument("f", nargs="?")
    p.add_argument("g", nargs="?")
    p.set_defaults(func=cmd_splitting)

    p = sub.add_parser("spheres", parents=[common], help="normal invariants of S^p x S^q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    verbs = p.add_subparsers(dest="verb", required=True)
    for name in ("add", "whitney", "pairing"):
        v = verbs.add_parser(name, parents=[common])
        v.add_argument("--t", required=True, help="x,y,z")
        v.add_argument("--u", required=True, help="x,y,z")
    for name in ("compose", "reconcile"):
        v = verbs.add_parser(name, parents=[common])
        v.add_argument("--sf", required=True, help="x,y of s(f)")
        v.add_argument("--sg", required=True, help="x,y of f_* s(g)")
    v = verbs.add_parser("demo-nonadditivity", parents=[common])
    v.add_argument("--x", type=int, required=True)
    v.add_argument("--y", type=int, required=True)
    p.set_defaults(func=cmd_spheres)

    p = sub.add_parser("zx", parents=[common], help="(Z,X)-module tools")
    verbs = p.add_subparsers(dest="verb", required=True)
    for name in ("support", "assemble", "cycle-check"):
        v = verbs.add_parser(name, parents=[common])
        v.add_argument("file")
    v = verbs.add_parser("dual-cells", parents=[common])
    v.add_argument("file")
    v.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_zx)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    args.trials_given = hasattr(args, "trials")
    for name, default in (("format", "text"), ("seed", 0), ("trials", 100)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        if exc.payload is not None:
            print(json.dumps(exc.payload, indent=2, sort_keys=True), file=sys.stderr)
        return 1
    except (InputError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
