"""Command-line front end.

Exit codes: 0 when a verdict or report was produced (whatever it says),
2 for usage, parse and precondition errors, 3 when the computation is
not possible exactly (e.g. irrational spectra).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from fractions import Fraction

from . import catalog
from .catalog import CatalogEntry
from .core import Element, LieAlgebra, StructureError, format_element, lie_closure
from .essential import (
    CapabilityError,
    compactness_obstruction,
    invariance_closure,
    is_essential,
    killing_report,
)
from .thermal import (
    PreconditionError,
    find_sl2_triples,
    kms_temperature,
    modular_commutation_table,
    rotation_compactness_check,
    rotation_conjugation_identity,
)


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<label>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*−]))")


def parse_element(a: LieAlgebra, expr: str) -> Element:
    """Parse ``term (('+'|'-') term)*`` with ``term := [rational '*'] label``."""
    if not expr or not expr.strip():
        raise ParseError("empty element expression")
    tokens = []
    pos = 0
    while pos < len(expr):
        if expr[pos:].strip() == "":
            break
        m = _TOKEN.match(expr, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {expr[pos:].lstrip()[:1]!r} at position {pos}")
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "op" and val == "−":
            val = "-"
        tokens.append((kind, val, m.start(kind)))
        pos = m.end()

    coords = [Fraction(0)] * a.dim
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i][0] == "op" and tokens[i][1] in "+-":
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' at position {tokens[i][2]}")
        first = False
        if i >= len(tokens):
            raise ParseError("expression ends after an operator")
        coeff = Fraction(1)
        kind, val, at = tokens[i]
        if kind == "num":
            num, _, den = val.partition("/")
            if den and int(den) == 0:
                raise ParseError(f"zero denominator in {val!r} at position {at}")
            coeff = Fraction(int(num), int(den) if den else 1)
            i += 1
            if i >= len(tokens) or tokens[i][1] != "*":
                raise ParseError(f"expected '*' after coefficient at position {at}")
            i += 1
            if i >= len(tokens):
                raise ParseError("expression ends after '*'")
            kind, val, at = tokens[i]
        if kind != "label":
            raise ParseError(f"expected a basis label at position {at}, got {val!r}")
        if val not in a.basis:
            raise ParseError(f"unknown basis label {val!r} at position {at}")
        coords[a.index(val)] += sign * coeff
        i += 1
    return a.element(coords)


def load_algebra(source: str) -> CatalogEntry:
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            a = LieAlgebra.loads(fh.read())
        return CatalogEntry(a, "custom", ())
    return catalog.build(source)


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------------------
# commands; each returns (json-able dict, text lines)


def cmd_catalog(args):
    specs = [args.algebra] if args.algebra else list(catalog.GOLDEN_SPECS + catalog.COMPACT_SPECS)
    entries = []
    for s in specs:
        e = catalog.build(s)
        entries.append({
            "name": e.spec,
            "family": e.family,
            "dim": e.algebra.dim,
            "basis": list(e.algebra.basis),
            "known_essential": [[format_element(x), ok] for x, ok in e.known_essential],
            "no_essential_elements": e.no_essential_elements,
            "notes": e.notes,
        })
    lines = []
    for d in entries:
        gold = ", ".join(f"{x}:{'yes' if ok else 'no'}" for x, ok in d["known_essential"])
        flag = "  [no essential elements]" if d["no_essential_elements"] else ""
        lines.append(f"{d['name']:<12} dim={d['dim']:<3} golden: {gold}{flag}")
    return {"entries": entries}, lines


def cmd_export(args):
    entry = load_algebra(args.algebra)
    text = entry.algebra.dumps()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return None, text


def cmd_essential(args):
    entry = load_algebra(args.algebra)
    a = entry.algebra
    m = parse_element(a, _one(args.element))
    rep = is_essential(a, m, crosscheck=args.crosscheck)
    out = rep.to_json()
    notes = list(rep.notes)
    obs = compactness_obstruction(a, m)
    if obs.obstructed:
        notes.append(f"Killing form is negative definite (K(m,m) = {obs.K_mm}); "
                     "a compact semisimple algebra has no essential elements")
    out["element"] = format_element(m)
    out["notes"] = notes
    lines = [f"element: {format_element(m)}",
             f"verdict: {rep.verdict}",
             f"diagonalizable over R: {rep.diagonalizable.value} ({rep.diagonalizable.reason})",
             "eigenvalues: " + ", ".join(f"{e['eigenvalue']} (alg {e['alg_mult']}, geo {e['geo_mult']})"
                                         for e in out["eigenvalues"]),
             f"dim [m,g] = {rep.gstar.dim}, dim(Rm + [m,g] + [[m,g],[m,g]]) = {rep.span_sum_dim} of {a.dim}"]
    if rep.criterion_a_dim is not None:
        lines.append(f"generated by m and eigenvectors: dim {rep.criterion_a_dim}")
    if rep.failure_reason:
        lines.append(f"reason: {rep.failure_reason}")
    lines += [f"note: {n}" for n in notes]
    return out, lines


def cmd_closure(args):
    entry = load_algebra(args.algebra)
    a = entry.algebra
    seeds = [parse_element(a, e) for e in args.element]
    if args.invariance:
        res = invariance_closure(a, seeds)
        space, extra = res.subspace, {"is_full": res.is_full,
                                     "under_approximation": res.under_approximation}
    else:
        space = lie_closure(a, seeds)
        extra = {"is_full": space.is_full()}
    basis = [format_element(x) for x in space.basis()]
    out = {"dim": space.dim, "algebra_dim": a.dim, "basis": basis,
           "mode": "invariance" if args.invariance else "lie", **extra}
    lines = [f"{out['mode']} closure: dim {space.dim} of {a.dim}"] + [f"  {b}" for b in basis]
    return out, lines


def cmd_temperature(args):
    entry = load_algebra(args.algebra)
    a = entry.algebra
    m = parse_element(a, _one(args.element))
    rep = kms_temperature(a, m)
    out = rep.to_json()
    out["element"] = format_element(m)
    lines = [f"element: {format_element(m)}",
             "moduli: {" + ", ".join(map(str, rep.moduli)) + "}",
             f"uniform: {rep.uniform}",
             f"beta = {rep.beta}" if rep.beta else "beta: none",
             f"note: {rep.notes}"]
    if rep.uniform:
        table = modular_commutation_table(a, m)
        out["commutation"] = [{"element": format_element(r.element), "eigenvalue": str(r.eigenvalue),
                               "relation": r.relation} for r in table]
        lines += [f"  {format_element(r.element)}  [{r.eigenvalue}]  {r.relation}" for r in table]
    return out, lines


def cmd_sl2(args):
    entry = load_algebra(args.algebra)
    a = entry.algebra
    m = parse_element(a, _one(args.element))
    if args.lam is not None:
        lam = Fraction(args.lam)
    else:
        rep = kms_temperature(a, m)
        if not rep.moduli:
            raise PreconditionError("ad(m) has no nonzero eigenvalue to build a triple from")
        lam = rep.moduli[0]
    triples = find_sl2_triples(a, m, lam, seed=args.seed)
    checks = []
    for t in triples:
        chk = rotation_compactness_check(entry, t).to_json()
        chk["conjugation_residuals"] = [
            rotation_conjugation_identity(a, t, x)
            for x in (0.0, math.pi / (2 * float(lam)), math.pi / float(lam))]
        checks.append(chk)
    out = {"element": format_element(m), "lambda": str(lam),
           "triples": [t.to_json() for t in triples], "rotation_checks": checks}
    lines = [f"lambda = {lam}: {len(triples)} triple(s)"]
    for t, c in zip(triples, checks):
        lines.append(f"  N+ = {t.N_plus};  N- = {t.N_minus};  R = {t.rotation}")
        lines.append(f"    ad(R) spectrum imaginary: {c['ad_spectrum_imaginary']}, "
                     f"periodic in rep: {c['rep_periodic']}")
    return out, lines


def cmd_killing(args):
    entry = load_algebra(args.algebra)
    rep = killing_report(entry.algebra)
    pos, neg, zero = rep.signature
    lines = [f"signature (+, -, 0) = ({pos}, {neg}, {zero})",
             f"negative definite: {rep.negative_definite}",
             f"nondegenerate: {rep.nondegenerate}"]
    return rep.to_json(), lines


def cmd_modular_demo(args):
    from .modular_toy import modular_demo

    out = modular_demo(n=args.n, beta=args.beta, seed=args.seed, trials=args.trials)
    lines = [f"{k}: {v}" for k, v in sorted(out.items())]
    return out, lines


def _one(elements):
    if not elements or len(elements) != 1:
        raise ParseError("exactly one --element is required")
    return elements[0]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--crosscheck", action="store_true", default=argparse.SUPPRESS,
                        help="also evaluate the generation criterion and compare")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="liessence", parents=[common],
                                description="Essential elements, adjoint spectra and KMS temperatures.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, algebra=True, element=False):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if algebra:
            sp.add_argument("--algebra", required=name != "catalog",
                            help="catalog name (gl:n, sl:n, sp:n, so:p,q, su:n, poincare:n) or JSON file")
        if element:
            sp.add_argument("--element", action="append",
                            help="linear combination of basis labels, e.g. 'm01 + 1/2*m02'")
        sp.set_defaults(func=fn)
        return sp

    add("catalog", cmd_catalog, "list catalog algebras and golden data")
    ex = add("export", cmd_export, "write structure constants as JSON")
    ex.add_argument("--out", help="file to write instead of standard output")
    add("essential", cmd_essential, "decide essentiality", element=True)
    cl = add("closure", cmd_closure, "Lie or invariance closure of seeds", element=True)
    cl.add_argument("--invariance", action="store_true",
                    help="also absorb nonzero-eigenvalue eigenvectors until stable")
    add("temperature", cmd_temperature, "beta = 2π/|λ| from the ad spectrum", element=True)
    s2 = add("sl2", cmd_sl2, "search sl(2,R) triples and check the rotation", element=True)
    s2.add_argument("--lam", help="positive rational eigenvalue (default: the uniform modulus)")
    add("killing", cmd_killing, "Killing form and its signature")
    md = add("modular-demo", cmd_modular_demo, "finite-dimensional modular checks", algebra=False)
    md.add_argument("--n", type=int, default=3)
    md.add_argument("--beta", type=float, default=1.0)
    md.add_argument("--trials", type=int, default=1000)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.output = getattr(args, "output", "text")
    args.crosscheck = getattr(args, "crosscheck", False)
    args.seed = getattr(args, "seed", 42 if args.command == "modular-demo" else 0)
    try:
        out, text = args.func(args)
    except (ParseError, StructureError, PreconditionError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return 3
    if out is None:
        sys.stdout.write(text)
    elif args.output == "json":
        sys.stdout.write(_dumps(out) + "\n")
    else:
        sys.stdout.write("\n".join(text) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
