"""Command-line surface: table generation, class listings, Q-function
inspection, invariant verification, and brute-force oracle checks.

Exit codes: 0 all checks pass / output written; 1 an invariant failed;
2 usage or input error.  Identical arguments (and seed) produce
byte-identical output.
"""

import argparse
import json
import os
import random
import sys

from .exactnum import Cyclo
from .partitions import PVF
from .qfunctions import q_general, char_value
from .classdata import (
    GroupDataError,
    builtin_group,
    enumerate_classes,
    group_from_spec,
    is_split,
    split_centralizer_order,
)
from .spintable import (
    DEFAULT_BOUNDS,
    TableInvariantError,
    table_from_json,
    table_spin_hyperoctahedral,
    table_spin_symmetric,
    table_spin_wreath,
    table_to_json,
)
from . import oracle as oracle_mod

USAGE_ERROR = 2
INVARIANT_ERROR = 1

_FAMILY_KEYS = {
    "symmetric": "spin_symmetric",
    "hyperoctahedral": "spin_hyperoctahedral",
    "wreath": "spin_wreath",
}


def _bound_for(family_key, override):
    if override is not None:
        return override
    env = os.environ.get("SPINCHARS_BOUND_" +
                         family_key.removeprefix("spin_").upper())
    return int(env) if env else None


def _build_table(family, n, group_spec, bound):
    key = _FAMILY_KEYS[family]
    bound = _bound_for(key, bound)
    if family == "symmetric":
        return table_spin_symmetric(n, bound=bound, validate=True)
    if family == "hyperoctahedral":
        return table_spin_hyperoctahedral(n, bound=bound, validate=True)
    gamma = group_from_spec(group_spec)
    return table_spin_wreath(n, gamma, bound=bound, validate=True)


def _column_text(col):
    pvf = col.pvf
    tag = "E" if col.family == "even" else "O"
    if isinstance(pvf, PVF):
        body = "|".join(f"{c}:{','.join(str(x) for x in p)}"
                        for c, p in pvf.items)
    else:
        body = ",".join(str(x) for x in pvf)
    return f"{tag}[{body}]"


def _render_csv(table, out):
    header = ["index", "kind", "degree"] + \
        [_column_text(c) for c in table.columns]
    out.write(";".join(header) + "\n")
    for row in table.rows:
        cells = [row.label(), row.kind, str(row.degree)]
        cells += [str(row.values[c]).replace(" ", "")
                  for c in table.columns]
        out.write(";".join(cells) + "\n")


def _render_pretty(table, out):
    g = f" over {table.group.name}" if table.group else ""
    out.write(f"{table.family} table, n={table.n}{g}: "
              f"{len(table.rows)} rows x {len(table.columns)} columns\n")
    for k, v in sorted(table.conventions.items()):
        out.write(f"  convention {k}: {v}\n")
    heads = [_column_text(c) for c in table.columns]
    grid = [["row", "deg"] + heads]
    for row in table.rows:
        grid.append([row.label(), str(row.degree)]
                    + [str(row.values[c]) for c in table.columns])
    widths = [max(len(r[i]) for r in grid) for i in range(len(grid[0]))]
    for r in grid:
        out.write("  ".join(cell.ljust(w) for cell, w in zip(r, widths))
                  .rstrip() + "\n")


def _emit_table(table, fmt, out):
    if fmt == "json":
        json.dump(table_to_json(table), out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        _render_csv(table, out)
    else:
        _render_pretty(table, out)


def cmd_table(args, out):
    table = _build_table(args.family, args.n, args.group, args.bound)
    _emit_table(table, args.format, out)
    return 0


def cmd_classes(args, out):
    gamma = group_from_spec(args.group)
    labels = enumerate_classes(args.n, gamma)
    rows = []
    for label in labels:
        family = is_split(label)
        if family is not None:
            pvf = label.positive if family == "even" else label.negative
            zc = str(split_centralizer_order(pvf, gamma))
        else:
            zc = "-"
        rows.append({
            "positive": label.positive.to_dict(),
            "negative": label.negative.to_dict(),
            "split": family or "fused",
            "cover_centralizer": zc,
        })
    if args.format == "json":
        json.dump({"n": args.n, "group": gamma.name, "classes": rows},
                  out, indent=2)
        out.write("\n")
    else:
        out.write(f"{len(labels)} classes of rank {args.n} over "
                  f"{gamma.name}\n")
        for r in rows:
            out.write(f"  +{r['positive']} -{r['negative']}"
                      f"  {r['split']:5s}  Z~={r['cover_centralizer']}\n")
    return 0


def _parse_partition(text):
    if not text:
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition {text!r}")
    if any(p <= 0 for p in parts) or \
            any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"bad partition {text!r}")
    return parts


def cmd_qfun(args, out):
    nu = _parse_partition(args.nu)
    if any(nu[i] <= nu[i + 1] for i in range(len(nu) - 1)):
        raise ValueError(f"partition {nu} is not strict")
    q = q_general(nu)
    out.write(f"Q[{','.join(str(x) for x in nu)}] = {q}\n")
    if args.chars:
        name = "zeta" if args.chars == "A" else "xi"
        for lam, _ in q.terms():
            value = char_value(nu, lam, args.chars)
            out.write(f"{name}[{','.join(str(x) for x in lam)}] = {value}\n")
    return 0


def _check(out, name, passed, witness=""):
    if passed:
        out.write(f"ok   {name}\n")
    else:
        out.write(f"FAIL {name}" + (f": {witness}" if witness else "") + "\n")
    return bool(passed)


def _verify_built_table(table, args, out):
    from fractions import Fraction
    ok = True
    bad = table.check_invariants()
    ok &= _check(out, "counting identity (rows = columns)",
                 len(table.rows) == len(table.columns))
    ok &= _check(out, "orthonormality, degrees, pair law",
                 not bad, "; ".join(bad[:3]))
    halves = all(
        table.inner(row, row, restrict="even") == Fraction(1, 2)
        and table.inner(row, row, restrict="odd") == Fraction(1, 2)
        for row in table.rows if row.kind == "plus")
    ok &= _check(out, "associate norm splits 1/2 + 1/2", halves)
    if table.family == "spin_wreath" and table.group.name == "trivial":
        other = table_spin_hyperoctahedral(table.n, bound=table.n)
        same = all(
            rw.values[cw] == rh.values[ch]
            for rw, rh in zip(table.rows, other.rows)
            for cw, ch in zip(table.columns, other.columns))
        ok &= _check(out, "trivial-group reduction", same)
    if args.oracle:
        gamma = table.group if table.group else builtin_group("trivial")
        if table.family == "spin_symmetric":
            ok &= _check(out, "oracle", False,
                         "no cover for the symmetric family")
        else:
            cover = oracle_mod.build_cover(table.n, gamma)
            emp = sorted(str(t) for t in cover.empirical_split_types())
            pred = sorted(str(t) for t in cover.predicted_split_types())
            ok &= _check(out, "empirical split classes", emp == pred,
                         f"{emp} vs {pred}")
            out.write("  empirical splits: " + ", ".join(emp) + "\n")
            for item in oracle_mod.verify_table(table, cover):
                ok &= _check(out, "oracle " + item["check"],
                             item["passed"], item["witness"])
    return 0 if ok else INVARIANT_ERROR


def cmd_verify(args, out):
    if args.file is None and args.n is None:
        raise ValueError("verify needs --n (to rebuild) or --file")
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        table = table_from_json(doc)
        bad = table.check_invariants()
        ok = _check(out, "stored table invariants", not bad,
                    "; ".join(bad[:3]))
        return 0 if ok else INVARIANT_ERROR
    table = _build_table(args.family, args.n, args.group, args.bound)
    rng = random.Random(args.seed)
    _ = rng  # seeded hook for randomized checks; current suite is exhaustive
    return _verify_built_table(table, args, out)


def cmd_oracle_check(args, out):
    gamma = group_from_spec(args.group)
    report = {"n": args.n, "group": gamma.name,
              "presentation": args.presentation, "checks": []}
    cover = oracle_mod.build_cover(args.n, gamma, args.presentation)
    report["order"] = cover.expected_order
    checks = report["checks"]
    checks.append({"check": "group order", "passed": True,
                   "witness": str(cover.expected_order)})
    classes = cover.conjugacy_classes()
    want = len(enumerate_classes(args.n, gamma))
    base_types = {str(c["type"]) for c in classes}
    checks.append({"check": "class types realized",
                   "passed": len(base_types) == want,
                   "witness": f"{len(base_types)} of {want}"})
    emp = sorted(str(t) for t in cover.empirical_split_types())
    pred = sorted(str(t) for t in cover.predicted_split_types())
    checks.append({"check": "split predicate", "passed": emp == pred,
                   "witness": json.dumps({"empirical": emp,
                                          "predicted": pred})})
    rng = random.Random(args.seed)
    elements = cover.elements()
    trials = min(200, len(elements) ** 3)
    assoc = True
    for _ in range(trials):
        x, y, w = (rng.choice(elements) for _ in range(3))
        if cover.multiply(cover.multiply(x, y), w) != \
                cover.multiply(x, cover.multiply(y, w)):
            assoc = False
            break
    checks.append({"check": "associativity (sampled)", "passed": assoc,
                   "witness": f"{trials} triples, seed {args.seed}"})
    if args.compare_presentations:
        other = "b_form" if args.presentation == "a_form" else "a_form"
        same = oracle_mod.class_statistics(cover) == \
            oracle_mod.class_statistics(
                oracle_mod.build_cover(args.n, gamma, other))
        checks.append({"check": "presentation class statistics",
                       "passed": same, "witness": other})
    if args.family:
        table = _build_table(args.family, args.n, args.group, args.bound)
        checks.extend(oracle_mod.verify_table(table, cover))
    passed = all(c["passed"] for c in checks)
    if args.format == "json":
        json.dump(report, out, indent=2)
        out.write("\n")
    else:
        out.write(f"oracle check: rank {args.n} over {gamma.name} "
                  f"({args.presentation}), order {report['order']}\n")
        for c in checks:
            _check(out, c["check"], c["passed"], c.get("witness", ""))
    return 0 if passed else INVARIANT_ERROR


def _parser():
    p = argparse.ArgumentParser(
        prog="spinchars",
        description="Exact spin character tables of double covers of "
                    "symmetric, hyperoctahedral, and wreath product groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, family=True, group_default="builtin:trivial",
                   n_required=True):
        sp.add_argument("--n", type=int, required=n_required, help="rank")
        if family:
            sp.add_argument("--family",
                            choices=["symmetric", "hyperoctahedral", "wreath"],
                            default="hyperoctahedral")
        sp.add_argument("--group", default=group_default,
                        help="builtin:<id> or a path to a group file")
        sp.add_argument("--bound", type=int, default=None,
                        help="override the rank bound")

    t = sub.add_parser("table", help="generate a spin character table")
    add_common(t)
    t.add_argument("--format", choices=["pretty", "csv", "json"],
                   default="pretty")
    t.add_argument("--out", default=None, help="write to a file")

    c = sub.add_parser("classes", help="list wreath conjugacy classes")
    add_common(c, family=False)
    c.add_argument("--format", choices=["pretty", "json"], default="pretty")

    q = sub.add_parser("qfun", help="print a Q-function expansion")
    q.add_argument("--nu", required=True, help="strict partition, e.g. 3,1")
    q.add_argument("--chars", choices=["A", "B"], default=None,
                   help="also print the inverted character column")

    v = sub.add_parser("verify", help="run the invariant suite")
    add_common(v, n_required=False)
    v.add_argument("--oracle", action="store_true",
                   help="also run the brute-force cover checks")
    v.add_argument("--file", default=None,
                   help="verify a previously emitted JSON table")
    v.add_argument("--seed", type=int, default=0)

    o = sub.add_parser("oracle-check", help="brute-force cover report")
    add_common(o, family=False)
    o.add_argument("--family",
                   choices=["hyperoctahedral", "wreath"], default=None,
                   help="also verify this table elementwise")
    o.add_argument("--presentation", choices=["a_form", "b_form"],
                   default="a_form")
    o.add_argument("--compare-presentations", action="store_true")
    o.add_argument("--format", choices=["pretty", "json"], default="pretty")
    o.add_argument("--seed", type=int, default=0)

    return p


_COMMANDS = {
    "table": cmd_table,
    "classes": cmd_classes,
    "qfun": cmd_qfun,
    "verify": cmd_verify,
    "oracle-check": cmd_oracle_check,
}


def main(argv=None):
    parser = _parser()
    args = parser.parse_args(argv)
    sink = None
    out = sys.stdout
    if getattr(args, "out", None):
        sink = open(args.out, "w", encoding="utf-8")
        out = sink
    try:
        return _COMMANDS[args.command](args, out)
    except (ValueError, GroupDataError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except TableInvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return INVARIANT_ERROR
    finally:
        if sink:
            sink.close()


if __name__ == "__main__":
    sys.exit(main())
