"""weylcat command line: enumerate, verify, count, svg."""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from math import gcd
from typing import Optional

from weylcat import affine, bijection, poset, signtypes
from weylcat.bijection import DEFAULT_BUDGET, BudgetExceeded
from weylcat.rootsys import RootSystemError, build

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    type_letter: str
    rank: int
    command: str
    output_format: str = "json"
    budget: int = DEFAULT_BUDGET
    svg_path: Optional[str] = None

    def __post_init__(self):
        build(self.type_letter, self.rank)
        if self.budget <= 0:
            raise UsageError("budget must be positive")


# -- formatting -------------------------------------------------------------


def word_string(word):
    return " ".join(f"s{i}" for i in word)


def combination(coords, symbol):
    """3α1+2α2 style rendering of an integer vector."""
    terms = []
    for i, c in enumerate(coords, start=1):
        if not c:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{mag}{symbol}{i}"))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return head + "".join(s + t for s, t in terms[1:])


def system_header(rs):
    return {
        "type": rs.type_letter,
        "rank": rs.rank,
        "h": rs.coxeter_number,
        "exponents": list(rs.exponents),
        "marks": list(rs.marks),
        "positive_roots": [list(r) for r in rs.positive_roots],
    }


BASIS = {
    "roots": "simple roots alpha_1..alpha_n (antichain, phi, sign_type order)",
    "lattice": "simple coroots alpha_1^vee..alpha_n^vee (tau, f_image, representative)",
    "v_matrix": "action of v on simple-root coordinates, columns are v(alpha_i)",
}


def ideal_record(index, ideal):
    w = bijection.ideal_to_w(ideal)
    return {
        "index": index,
        "antichain": [list(r) for r in ideal.antichain],
        "phi": [list(r) for r in ideal.sorted_phi],
        "word": word_string(w.word),
        "tau": list(w.tau),
        "v_word": word_string(w.v.word),
        "v_matrix": [list(row) for row in w.v.matrix],
        "f_image": list(bijection.f_map(w)),
        "representative": list(bijection.normalizer(ideal.rs).act_coroot_point(bijection.f_map(w))),
        "sign_type": signtypes.ideal_to_signtype(ideal).symbols(),
    }


def enumerate_cost(rs):
    return bijection.count_formula(rs) * len(rs.positive_roots) ** 2


def enumerate_payload(rs, budget=DEFAULT_BUDGET):
    cost = enumerate_cost(rs)
    if cost > budget:
        raise BudgetExceeded(cost, budget)
    ideals = poset.enumerate_antichains(rs)
    return {
        "system": system_header(rs),
        "basis": BASIS,
        "records": [ideal_record(i, ideal) for i, ideal in enumerate(ideals, start=1)],
    }


def _table(header, rows):
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip() for r in [header, *rows]]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render_enumerate(payload, fmt):
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    records = payload["records"]
    if fmt == "csv":
        buf = io.StringIO()
        fields = list(records[0].keys())
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for r in records:
            writer.writerow({k: json.dumps(v, separators=(",", ":")) if isinstance(v, list) else v for k, v in r.items()})
        return buf.getvalue()
    sysinfo = payload["system"]
    head = (
        f"{sysinfo['type']}{sysinfo['rank']}: h={sysinfo['h']}, exponents={sysinfo['exponents']}, "
        f"{len(records)} ideals; lattice vectors on the simple coroots\n\n"
    )
    rows = []
    for r in records:
        parts = [f"t({combination(r['tau'], 'α̌')})"] if any(r["tau"]) else []
        parts += [r["v_word"]] if r["v_word"] else []
        tv = " ".join(parts)
        rows.append(
            (
                f"i{r['index']}",
                "{" + ", ".join(combination(a, "α") for a in r["antichain"]) + "}",
                r["word"] or "1",
                tv or "1",
                combination(r["f_image"], "α̌"),
                combination(r["representative"], "α̌"),
                r["sign_type"],
            )
        )
    header = ("ideal", "antichain", "w_i", "t_τ v", "v⁻¹(τ)", "in C(h+1)", "sign type")
    return head + _table(header, rows)


# -- verify -------------------------------------------------------------------


def run_checks(rs, budget=DEFAULT_BUDGET):
    """List of (name, status, detail) with status in pass/fail/skipped."""
    checks = []

    def check(name, ok, detail=""):
        checks.append((name, "pass" if ok else "fail", detail))

    k = rs.coxeter_number + 1
    ideals = poset.enumerate_antichains(rs)
    formula = bijection.count_formula(rs)
    lattice = bijection.enumerate_alcove_lattice(rs, k)
    counts = {"antichains": len(ideals), "formula": formula, "alcove_points": len(lattice)}
    try:
        counts["orbits"] = bijection.count_orbits_direct(rs, k, budget)
    except BudgetExceeded as exc:
        counts["orbits"] = None
        checks.append(("orbit count", "skipped", str(exc)))
    values = {v for v in counts.values() if v is not None}
    check("four-way count", len(values) == 1, " / ".join(f"{k}={v}" for k, v in counts.items()))

    abelian = sum(1 for i in ideals if i.is_abelian)
    check("abelian ideals = 2^n", abelian == 2**rs.rank, f"{abelian}")

    check(
        "antichain <-> ideal roundtrip",
        all(poset.Ideal.from_antichain(rs, i.antichain).phi == i.phi for i in ideals),
    )

    ws = [bijection.ideal_to_w(i) for i in ideals]
    check("w_i pass both ideal-element tests", all(affine.is_ideal_element(w) and affine.is_ideal_element_geometric(w) for w in ws))
    check("N(w_i) = L_i", all(affine.inversion_set(w) == poset.l_set(i) for w, i in zip(ws, ideals)))
    images = [bijection.f_map(w) for w in ws]
    check("F injective", len(set(images)) == len(images))
    check("f_inverse . f_map = id", all(bijection.f_inverse(rs, s) == w for s, w in zip(images, ws)))
    d_points = bijection.enumerate_d(rs)
    check("f_map . f_inverse = id on D", all(bijection.f_map(bijection.f_inverse(rs, s)) == s for s in d_points))
    check("F onto D", sorted(images) == d_points)

    g = bijection.normalizer(rs)
    reps = [g.act_coroot_point(s) for s in images]
    check("representatives biject onto Q^ ∩ C(h+1)", sorted(reps) == lattice and len(set(reps)) == len(reps))
    simplex = {g.act_coroot_point(x) for x in bijection.d_simplex_vertices(rs)}
    check("normalizer maps X onto C(h+1)", simplex == set(bijection.alcove_vertices(rs, k)))
    check("gcd(h+1, f) = 1", gcd(k, rs.index) == 1, f"f={rs.index}")

    signs = {signtypes.ideal_to_signtype(i).plus for i in ideals}
    check("sign types injective", len(signs) == len(ideals))
    check("every region has an exact witness", all(signtypes.region_witness(i).holds() for i in ideals))
    return checks, counts


def render_verify(rs, checks, counts, fmt):
    if fmt == "json":
        payload = {
            "system": system_header(rs),
            "counts": counts,
            "checks": [{"name": n, "status": s, "detail": d} for n, s, d in checks],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "status", "detail"])
        writer.writerows(checks)
        return buf.getvalue()
    lines = [f"{rs.name}: " + ", ".join(f"{k}={v}" for k, v in counts.items())]
    lines += [f"[{s.upper():7}] {n}" + (f"  ({d})" if d else "") for n, s, d in checks]
    return "\n".join(lines) + "\n"


# -- count ----------------------------------------------------------------------


def parse_ranks(text):
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise UsageError(f"empty rank range {text}")
        return list(range(lo, hi + 1))
    return [int(text)]


def count_rows(letter, ranks, budget=DEFAULT_BUDGET):
    rows = []
    for n in ranks:
        rs = build(letter, n)
        formula = bijection.count_formula(rs)
        enumerated = None
        if formula * len(rs.positive_roots) <= budget:
            enumerated = poset.count_antichains(rs)
        rows.append(
            {
                "type": rs.type_letter,
                "rank": n,
                "h": rs.coxeter_number,
                "exponents": list(rs.exponents),
                "formula": formula,
                "antichains": enumerated,
                "abelian": 2**n,
            }
        )
    return rows


def render_count(rows, fmt):
    if fmt == "json":
        return json.dumps({"rows": rows}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({**r, "exponents": " ".join(map(str, r["exponents"]))})
        return buf.getvalue()
    table = [
        (
            f"{r['type']}{r['rank']}",
            r["h"],
            " ".join(map(str, r["exponents"])),
            r["formula"],
            "-" if r["antichains"] is None else r["antichains"],
            r["abelian"],
        )
        for r in rows
    ]
    return _table(("type", "h", "exponents", "ideals (formula)", "antichains", "abelian 2^n"), table)


# -- driver ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser():
    p = _Parser(prog="weylcat", description="ad-nilpotent ideals, affine Weyl groups and W-orbits on Q^/(h+1)Q^")
    p.add_argument("command", choices=["enumerate", "verify", "count", "svg"])
    p.add_argument("type", help="Cartan type letter A-G")
    p.add_argument("rank", help="rank n (count also accepts a range such as 1..4)")
    p.add_argument("--format", choices=["json", "csv", "text"], default=None, dest="output_format")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", default=None, help="write output to PATH instead of stdout")
    return p


def _emit(text, path, stdout):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = make_parser().parse_args(argv)
        fmt = args.output_format or ("text" if args.command == "count" else "json")
        if args.command == "count":
            ranks = parse_ranks(args.rank)
            if args.budget <= 0:
                raise UsageError("budget must be positive")
            rows = count_rows(args.type, ranks, args.budget)
            _emit(render_count(rows, fmt), args.out, stdout)
            return EXIT_OK
        try:
            rank = int(args.rank)
        except ValueError:
            raise UsageError(f"rank must be an integer, got {args.rank!r}") from None
        cfg = RunConfig(args.type, rank, args.command, fmt, args.budget, args.out if args.command == "svg" else None)
        rs = build(cfg.type_letter, cfg.rank)
        if cfg.command == "enumerate":
            _emit(render_enumerate(enumerate_payload(rs, cfg.budget), fmt), args.out, stdout)
            return EXIT_OK
        if cfg.command == "verify":
            checks, counts = run_checks(rs, cfg.budget)
            _emit(render_verify(rs, checks, counts, fmt), args.out, stdout)
            return EXIT_FAILED if any(s == "fail" for _, s, _ in checks) else EXIT_OK
        from weylcat.svg import render

        if rs.rank != 2:
            raise UsageError(f"svg needs a rank-2 system, got {rs.name}")
        _emit(render(rs), cfg.svg_path, stdout)
        return EXIT_OK
    except (UsageError, RootSystemError, ValueError) as exc:
        print(f"weylcat: error: {exc}", file=stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"weylcat: budget exceeded: {exc}", file=stderr)
        return EXIT_BUDGET


def entry():
    sys.exit(main())
