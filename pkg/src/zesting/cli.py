"""Command line front end.

Every verb prints a JSON document (``--format doc``, the default) or a plain
text rendering (``--format table``).  Exit codes: 0 success, 1 validation
failure, 2 obstruction, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import gallery
from .category import (CategoryData, central_charge, global_dimension, is_modular, mueger_center,
                       validate)
from .cohomology import FinAbGroup
from .cyclic import (CyclicContext, _spectrum_hash, _turn_str, enumerate_assoc, summary)
from .cyclotomic import cyc, root_of_unity
from .engine import (AssocZesting, BraidedZesting, ObstructionError, RibbonZesting, ZestingError,
                     associative_zestings, partial_obstructions, solve_braided, solve_ribbon,
                     zested_category, zested_modular_data, zested_mueger_center, zesting_from_json,
                     zesting_to_json)

EXIT_OK, EXIT_INVALID, EXIT_OBSTRUCTED, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- input helpers ---------------------------------------------------------------------

def _load_category(src: str) -> CategoryData:
    """A builtin name or a path to a category document."""
    if src in gallery.names():
        return gallery.builtin(src).category
    path = Path(src)
    if not path.exists():
        raise UsageError(f"no builtin or file named {src!r}")
    obj = gallery.load(path)
    if not isinstance(obj, CategoryData):
        raise UsageError(f"{src} is a zesting document, expected a category")
    return obj


def _load_zesting(path: str, base: CategoryData | None):
    p = Path(path)
    if not p.exists():
        raise UsageError(f"no such file: {path}")
    doc = json.loads(p.read_text())
    if base is None:
        ref = doc.get("base")
        if ref not in gallery.names():
            raise UsageError("give the base category explicitly")
        base = gallery.builtin(ref).category
    return zesting_from_json(doc, base)


def _turns(text: str | None) -> Fraction | None:
    """Accepts a fraction of a turn ('2/3') or a cyclotomic root ('zeta(3)^2')."""
    if text is None:
        return None
    try:
        return Fraction(text) % 1
    except ValueError:
        return cyc(text).turns()


def _generator(base: CategoryData, generator: str, group: int | None) -> str:
    """Label generating the cyclic subgroup of order ``group`` inside <generator>."""
    if group is None:
        return generator
    powers = [0]
    while True:
        x = base.tensor_invertible(generator, powers[-1])
        if x == 0:
            break
        powers.append(x)
    if len(powers) % group:
        raise UsageError(f"{generator} has order {len(powers)}, not divisible by {group}")
    return base.label(powers[len(powers) // group])


def _quotient(base: CategoryData, n: int):
    """Cyclic A = Z/n with the reduction map from a cyclic grading group."""
    U = base.grading.group
    A = FinAbGroup.cyclic(n)
    if U.cyclic_orders == A.cyclic_orders:
        return A, None
    if len(U.cyclic_orders) != 1 or U.cyclic_orders[0] % n:
        raise UsageError(f"Z/{n} is not a quotient of the grading group")
    return A, [(u[0] % n,) for u in U.elements]


def _parse_lambda2(base: CategoryData, text: str):
    """lambda2 from a JSON file or inline 'a,b=label;...' entries (unlisted pairs map to the unit)."""
    p = Path(text)
    if p.exists():
        doc = json.loads(p.read_text())
        entries = doc["lambda2"] if isinstance(doc, dict) else doc
        if isinstance(entries, dict):
            entries = [[*map(int, k.split(",")), v] for k, v in entries.items()]
    else:
        entries = []
        for item in filter(None, text.split(";")):
            key, _, lab = item.partition("=")
            entries.append([*map(int, key.split(",")), lab.strip()])
    table = {}
    for a, b, lab in entries:
        if lab not in base.labels:
            raise UsageError(f"unknown label {lab!r} in lambda2")
        table[(a, b)] = table[(b, a)] = lab
    unit = base.label(0)
    return lambda x, y: table.get((x[0], y[0]), unit)


# -- output helpers --------------------------------------------------------------------

def _dump(doc) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def _emit(args, doc, text: str | None = None) -> None:
    out = _dump(doc) if args.format == "doc" or text is None else text.rstrip("\n") + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [["-" if v is None else str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _cc(cat: CategoryData):
    try:
        return str(central_charge(cat))
    except (ZeroDivisionError, ValueError):
        return None


# -- verbs ---------------------------------------------------------------------------

def cmd_validate(args) -> int:
    try:
        cat = _load_category(args.source)
    except ValueError as exc:
        _emit(args, {"ok": False, "error": str(exc)}, f"FAIL {exc}")
        return EXIT_INVALID
    rep = validate(cat)
    _emit(args, rep.to_json(), rep.render())
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_info(args) -> int:
    cat = _load_category(args.source)
    doc = {
        "name": cat.name,
        "rank": cat.rank,
        "capabilities": list(cat.capabilities),
        "global_dimension": str(global_dimension(cat)),
    }
    if cat.grading is not None:
        doc["grading_group"] = cat.grading.group.to_json()
        doc["component_sizes"] = cat.grading.component_sizes()
    if cat.invertibles is not None:
        doc["invertibles"] = [cat.label(x) for x in cat.invertibles.labels]
    if cat.has("smatrix"):
        doc["modular"] = is_modular(cat)
        doc["mueger_center"] = [cat.label(x) for x in mueger_center(cat)]
    doc["central_charge"] = _cc(cat)
    text = "\n".join(f"{k}: {v}" for k, v in doc.items())
    _emit(args, doc, text)
    return EXIT_OK


def _context(args, base: CategoryData) -> CyclicContext:
    gen = _generator(base, args.generator, args.group)
    q, zeta = _turns(args.q), _turns(args.zeta)
    qv = None if q is None else root_of_unity(q.denominator, q.numerator)
    zv = None if zeta is None else root_of_unity(zeta.denominator, zeta.numerator)
    return CyclicContext.build(base, gen, q=qv, zeta=zv)


def _general_rows(ctx: CyclicContext, expand: bool) -> list[dict]:
    """Same table as the closed form, computed by the general solvers."""
    rows = []
    for a, b, az in enumerate_assoc(ctx):
        try:
            bzs = solve_braided(az)
        except ObstructionError:
            rows.append({"a": a, "b": b, "admissible": False, "s": None, "f_branch": None,
                         "modular": None, "central_charge": None, "t_spectrum": None, "members": 0})
            continue
        group = []
        for bz in bzs:
            s = -bz.t.turns(ctx.A.elem(1), ctx.A.elem(1)) % 1
            for k, rz in enumerate(solve_ribbon(bz)):
                zc = zested_category(rz)
                try:
                    modular = zested_mueger_center(rz).modular
                except ZestingError:
                    modular = None
                group.append({"a": a, "b": b, "admissible": True, "s": _turn_str(s), "f_branch": k,
                              "modular": modular, "central_charge": _cc(zc),
                              "t_spectrum": _spectrum_hash(zc.twists), "members": 1})
        group.sort(key=lambda r: (_turns(r["s"]) if r["s"] != "1" else 0, r["f_branch"]))
        if expand:
            rows.extend(group)
        elif group:
            mods = [r["modular"] for r in group]
            ccs = {r["central_charge"] for r in group}
            rows.append(dict(group[0], members=len(group),
                             modular=None if None in mods else all(mods),
                             central_charge=ccs.pop() if len(ccs) == 1 else None,
                             t_spectrum="|".join(sorted({r["t_spectrum"] for r in group}))))
    return rows


_ROW_KEYS = ["a", "b", "s", "f_branch", "admissible", "modular", "central_charge", "t_spectrum", "members"]


def cmd_zest_enum(args) -> int:
    base = _load_category(args.source)
    ctx = _context(args, base)
    if args.closed_form:
        rows = [r.to_json() for r in summary(ctx, expand=args.expand)]
        if args.export_dir:
            d = Path(args.export_dir)
            d.mkdir(parents=True, exist_ok=True)
            for r in summary(ctx, expand=True):
                if r.ribbon is not None:
                    name = f"zesting_a{r.a}_b{r.b}_s{r.s.numerator}-{r.s.denominator}_f{r.branch}.json"
                    (d / name).write_text(_dump(zesting_to_json(r.ribbon)))
    else:
        rows = _general_rows(ctx, args.expand)
    doc = {"base": base.name, "generator": base.label(ctx.g), "N": ctx.N, "q": _turn_str(ctx.q),
           "zeta": _turn_str(ctx.zeta), "method": "closed-form" if args.closed_form else "general",
           "rows": rows}
    text = _table(_ROW_KEYS, [[r[k] for k in _ROW_KEYS] for r in rows])
    _emit(args, doc, text)
    return EXIT_OK


def _zested_document(rz: RibbonZesting) -> dict:
    zc = zested_category(rz)
    try:
        center = zested_mueger_center(rz)
        modular = center.modular
        transparent = center.names(zc)
    except ZestingError:
        modular, transparent = None, None
    return {
        "category": zc.to_json(),
        "modular": modular,
        "degenerate": None if modular is None else not modular,
        "mueger_center": transparent,
        "central_charge": _cc(zc),
    }


def _as_ribbon(z) -> RibbonZesting:
    if isinstance(z, RibbonZesting):
        return z
    raise UsageError("zest-apply needs a ribbon zesting document (with t and f)")


def cmd_zest_apply(args) -> int:
    base = _load_category(args.source) if args.source else None
    if args.trivial:
        if base is None:
            raise UsageError("--trivial needs a base category")
        az = AssocZesting.trivial(base)
        rz = solve_ribbon(BraidedZesting(az, _zero_t(az)))[0]
    elif args.zesting:
        rz = _as_ribbon(_load_zesting(args.zesting, base))
    else:
        raise UsageError("give --zesting FILE or --trivial")
    doc = _zested_document(rz)
    cat = doc["category"]
    text = f"{cat['name']}: rank {len(cat['labels'])}, modular {doc['modular']}, central charge {doc['central_charge']}"
    _emit(args, doc, text)
    return EXIT_OK


def _zero_t(az: AssocZesting):
    from .cohomology import Cochain, CoeffModule
    return Cochain.identity(az.A, CoeffModule.roots_of_unity(1), 2)


def cmd_modular_data(args) -> int:
    base = _load_category(args.source) if args.source else None
    if args.zesting:
        S, T = zested_modular_data(_as_ribbon(_load_zesting(args.zesting, base)))
        labels = list(base.labels) if base else None
    else:
        if base is None:
            raise UsageError("give a category")
        base.require("smatrix")
        S, T = base.smatrix, base.twists
        labels = list(base.labels)
    doc = {"labels": labels, "S": [[str(v) for v in row] for row in S], "T": [str(v) for v in T]}
    text = "T: " + " ".join(doc["T"]) + "\nS:\n" + "\n".join(" ".join(row) for row in doc["S"])
    _emit(args, doc, text)
    return EXIT_OK


def cmd_obstructions(args) -> int:
    base = _load_category(args.source)
    if args.lambda2 is None:
        raise UsageError("--lambda2 is required")
    n = args.group or base.grading.group.order
    A, proj = _quotient(base, n)
    lam = _parse_lambda2(base, args.lambda2)
    checks = []
    try:
        azs = associative_zestings(base, A, lam, proj)
        checks.append({"check": "O4 vanishes", "ok": True, "detail": f"{len(azs)} associative zestings"})
    except ObstructionError as exc:
        azs = []
        checks.append({"check": "O4 vanishes", "ok": False, "detail": str(exc)})
    rep = partial_obstructions(base, A, lam, proj)
    checks.extend(c.to_json() for c in rep.checks)
    if azs and rep.ok:
        found, detail = 0, ""
        for az in azs:
            try:
                found += len(solve_braided(az, j=None))
            except ObstructionError as exc:
                detail = str(exc)
        checks.append({"check": "O1 and O2 vanish for some lambda3 and j", "ok": found > 0,
                       "detail": f"{found} braided zestings" if found else detail})
    ok = all(c["ok"] for c in checks)
    doc = {"base": base.name, "group": A.to_json(), "ok": ok, "checks": checks}
    lines = [f"{'ok  ' if c['ok'] else 'FAIL'} {c['check']}" + (f": {c['detail']}" if c.get("detail") else "")
             for c in checks]
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK if ok else EXIT_OBSTRUCTED


def cmd_gallery(args) -> int:
    if args.action == "list":
        doc = {"names": gallery.names()}
        _emit(args, doc, "\n".join(gallery.names()))
        return EXIT_OK
    if not args.name:
        raise UsageError("gallery export needs a NAME")
    if args.name not in gallery.names():
        raise UsageError(f"unknown builtin {args.name!r}")
    cat = gallery.builtin(args.name).category
    doc = cat.to_json()
    _emit(args, doc, _dump(doc))
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["doc", "table"], default="doc")
    common.add_argument("--out", metavar="PATH")

    p = _Parser(prog="zesting", description="Zesting of braided fusion categories.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", parents=[common], help="check a category document")
    s.add_argument("source", help="builtin name or JSON path")
    s.set_defaults(fn=cmd_validate)

    s = sub.add_parser("info", parents=[common], help="summary invariants")
    s.add_argument("source")
    s.set_defaults(fn=cmd_info)

    s = sub.add_parser("zest-enum", parents=[common], help="enumerate cyclic zestings")
    s.add_argument("source")
    s.add_argument("--group", type=int, help="order of the cyclic zesting group")
    s.add_argument("--generator", default="g")
    s.add_argument("--q", help="q as a turn fraction or zeta(n)^k")
    s.add_argument("--zeta", help="square root of q, same syntax")
    s.add_argument("--closed-form", action="store_true")
    s.add_argument("--expand", action="store_true", help="one row per (a, b, s, f-branch)")
    s.add_argument("--export-dir", metavar="DIR", help="write each ribbon zesting (closed form only)")
    s.set_defaults(fn=cmd_zest_enum)

    s = sub.add_parser("zest-apply", parents=[common], help="zested category document")
    s.add_argument("source", nargs="?")
    s.add_argument("--zesting", metavar="FILE")
    s.add_argument("--trivial", action="store_true")
    s.set_defaults(fn=cmd_zest_apply)

    s = sub.add_parser("modular-data", parents=[common], help="S and T")
    s.add_argument("source", nargs="?")
    s.add_argument("--zesting", metavar="FILE")
    s.set_defaults(fn=cmd_modular_data)

    s = sub.add_parser("obstructions", parents=[common], help="obstruction report for lambda2")
    s.add_argument("source")
    s.add_argument("--group", "--grading", dest="group", type=int, help="order of the cyclic quotient A")
    s.add_argument("--lambda2", help="JSON file or inline 'a,b=label;...'")
    s.set_defaults(fn=cmd_obstructions)

    s = sub.add_parser("gallery", parents=[common], help="builtin datasets")
    s.add_argument("action", choices=["list", "export"])
    s.add_argument("name", nargs="?")
    s.set_defaults(fn=cmd_gallery)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except ObstructionError as exc:
        sys.stderr.write(f"obstruction: {exc}\n")
        return EXIT_OBSTRUCTED
    except (ZestingError, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
