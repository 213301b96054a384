"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 size guard.
JSON output carries no timing so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import borel, hilbert, marked, pluecker, samples
from .errors import DomainError, SizeGuardExceeded
from .terms import compare_degrevlex, is_borel_set, monomial_basis, parse_term

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class JobReport:
    command: str
    inputs: dict
    outputs: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    ok: bool = True
    elapsed: float = 0.0

    def to_json(self):
        return {"command": self.command, "inputs": self.inputs, "outputs": self.outputs,
                "verdicts": self.verdicts, "ok": self.ok}

    def render(self):
        lines = [f"{self.command}: {'ok' if self.ok else 'FAILED'}"]
        for key, value in self.outputs.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            lines.append(f"  {key}: {value}")
        for key, value in self.verdicts.items():
            lines.append(f"  {key}: {value}")
        lines.append(f"  ({self.elapsed:.2f} s)")
        return "\n".join(lines)


# ------------------------------------------------------------------ parsing


def _poly(text):
    return hilbert.parse_polynomial(text)


def _terms(text, n):
    return [parse_term(t, n) for t in text.split(",") if t.strip()]


def _ideal(args):
    if getattr(args, "ideal", None):
        with open(args.ideal, encoding="utf-8") as fh:
            return borel.BorelIdeal.from_json(json.load(fh))
    if args.generators is None:
        raise UsageError("give --generators or --ideal")
    return borel.BorelIdeal(args.n, tuple(_terms(args.generators, args.n)))


def _indices(text):
    return tuple(int(x) for x in text.split(",") if x.strip())


def _load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _sample(args, n):
    if args.no_sample:
        return []
    return samples.default_group_sample(n, seed=args.seed, count=args.sample_count)


# ------------------------------------------------------------------ commands


def cmd_gotzmann(args):
    p = _poly(args.p)
    seq = hilbert.gotzmann_decomposition(p)
    return JobReport("gotzmann", {"p": str(p)}, {"gotzmann_number": len(seq), "exponents": seq})


def cmd_admissible(args):
    p = _poly(args.p)
    return JobReport("admissible", {"p": str(p)}, {"admissible": hilbert.is_admissible(p)})


def cmd_hilb_poly(args):
    J = _ideal(args)
    out = {"hilbert_polynomial": str(hilbert.hilbert_polynomial(J)), "regularity": borel.regularity(J)}
    if args.t_max is not None:
        out["hilbert_function"] = {str(t): hilbert.hilbert_function(J, t) for t in range(args.t_max + 1)}
    return JobReport("hilb-poly", {"ideal": J.to_json()}, out)


def cmd_enum_borel(args):
    p = _poly(args.p)
    ideals = borel.enumerate_borel(args.n, p, args.rprime)
    r = hilbert.gotzmann_number(p)
    listing = []
    for J in ideals:
        listing.append({
            "ideal": J.to_json(),
            "multiindices": {str(s): list(borel.multiindex_of(J, s).indices) for s in range(args.rprime, r + 1)},
        })
    return JobReport("enum-borel", {"n": args.n, "p": str(p), "rprime": args.rprime},
                     {"count": len(ideals), "ideals": listing})


def cmd_classify_index(args):
    p = _poly(args.p)
    I = borel.MultiIndex(args.n, args.s, _indices(args.indices))
    J = borel.ideal_from_multiindex(I)
    level = borel.classify_multiindex(I, p, args.rprime)
    return JobReport("classify-index", {"multiindex": I.to_json(), "p": str(p), "rprime": args.rprime},
                     {"ideal": J.to_json(), "borel": J.is_borel, "class": level})


def cmd_marked_check(args):
    F = marked.MarkedSet.from_json(_load_json(args.file))
    t_max = args.t_max if args.t_max is not None else F.s + 3
    basis = marked.is_marked_basis(F)
    profile = marked.rank_profile(F, t_max)
    out = {"is_marked_basis": basis, "rank_profile": [list(x) for x in profile]}
    if args.p:
        ctx_q = {t: monomial_count(F.n, t) - _poly(args.p).value(t) for t, _ in profile}
        out["rank_matches_q"] = all(rk == ctx_q[t] for t, rk in profile)
    return JobReport("marked-check", {"file": args.file}, out)


def monomial_count(n, t):
    return len(monomial_basis(n, t))


def cmd_marked_scheme_eqs(args):
    J = _ideal(args)
    eqs = marked.marked_scheme_equations(J, args.s)
    F = marked.make_marked_set(J, args.s, parametric=True)
    out = {"parameters": len(F.parameters()), "equations": [str(e) for e in eqs],
           "max_degree": max((e.degree for e in eqs), default=0)}
    return JobReport("marked-scheme-eqs", {"ideal": J.to_json(), "s": args.s}, out)


def cmd_pluecker(args):
    L = pluecker.GrassmannPoint.from_json(_load_json(args.point))
    coords = pluecker.pluecker_coordinates(L)
    nonzero = {"D[" + ",".join(map(str, I)) + "]": pluecker._frac_str(v) for I, v in coords.items() if v}
    return JobReport("pluecker", {"point": args.point}, {"nonzero": nonzero, "total": len(coords)})


def _context(args):
    return hilbert.context(args.n, _poly(args.p), args.rprime, args.s)


def cmd_equations(args):
    ctx = _context(args)
    eqs = pluecker.equations(ctx, max_terms=args.max_terms)
    st = eqs.structure
    out = {"context": ctx.summary(), "structure": st.to_json(),
           "max_degree": max(st.degree.values(), default=0), "degree_bound": ctx.d + 2}
    if args.out:
        fams = tuple(args.families)
        with open(args.out, "w", encoding="utf-8") as fh:
            out["written"] = eqs.write_json(fh, fams)
        out["file"] = args.out
    report = JobReport("equations", {"n": args.n, "p": args.p, "rprime": args.rprime, "s": args.s}, out)
    report.ok = out["max_degree"] <= ctx.d + 2
    return report


def cmd_membership(args):
    ctx = _context(args)
    if args.point:
        L = pluecker.GrassmannPoint.from_json(_load_json(args.point))
    elif args.monomials:
        terms = _terms(args.monomials, args.n)
        L = pluecker.GrassmannPoint(args.n, args.s, tuple(map(tuple, samples.monomial_subspace(terms, args.n, args.s))))
    else:
        raise UsageError("give --point or --monomials")
    rep = pluecker.membership_test(L, ctx, _sample(args, args.n))
    return JobReport("membership", {"context": ctx.summary(), "seed": args.seed},
                     rep.to_json(), {"verdict": rep.verdict})


# ------------------------------------------------------------------ verify-paper


def paper_checks(gotzmann=None):
    """Named (check, expected, callable) triples reproducing the worked examples."""
    if gotzmann is None:
        gotzmann = hilbert.gotzmann_number
    P = _poly
    n3 = 3

    def B(*gens, n=n3):
        return borel.BorelIdeal(n, tuple(parse_term(g, n) for g in gens))

    J = B("x3^2", "x3*x2", "x2^2", "x3*x1")
    Y = B("x3")
    J2 = B("x3^2", "x3*x2", "x2^2", "x3*x1", "x2*x1")
    ctx22 = hilbert.context(3, P("2t+2"), 2, 2)

    def point(ideal, s=2):
        return pluecker.GrassmannPoint(3, s, tuple(map(tuple, samples.monomial_subspace(borel.truncation(ideal, s), 3, s))))

    def verdict(ideal):
        return pluecker.membership_test(point(ideal), ctx22, samples.default_group_sample(3, 0)).verdict

    checks = [
        ("gotzmann 2t+2", 3, lambda: gotzmann(P("2t+2"))),
        ("gotzmann 2t+1", 2, lambda: gotzmann(P("2t+1"))),
        ("gotzmann constants 1..10", list(range(1, 11)), lambda: [gotzmann(P(str(c))) for c in range(1, 11)]),
        ("gotzmann at+b = a(a-1)/2+b", [3, 2, 4, 6],
         lambda: [gotzmann(P(f"{a}t+{b}")) for a, b in [(2, 2), (2, 1), (3, 1), (3, 3)]]),
        ("3t-1 not admissible", False, lambda: hilbert.is_admissible(P("3t-1"))),
        ("x2^2 > x3*x1", "GT", lambda: compare_degrevlex(parse_term("x2^2", 3), parse_term("x3*x1", 3)).name),
        ("first five degree-2 terms", ["x3^2", "x3*x2", "x2^2", "x3*x1", "x2*x1"],
         lambda: [str(u) for u in monomial_basis(3, 2).terms[:5]]),
        ("Borel set of the t+3 ideal", True, lambda: is_borel_set(J2.generators)),
        ("Borel set (x3)_2", True, lambda: is_borel_set(borel.truncation(Y, 2).terms)),
        ("rk of (x3)_3", 10, lambda: len(Y.degree_part(3))),
        ("Hilbert polynomial of (x3)", "(t^2+3*t+2)/2", lambda: str(hilbert.hilbert_polynomial(Y))),
        ("Hilbert polynomial of the t+3 ideal", "t+3", lambda: str(hilbert.hilbert_polynomial(J2))),
        ("regularity of the 2t+2 ideal", 2, lambda: borel.regularity(J)),
        ("truncation (x3)_2", ["x3^2", "x3*x2", "x3*x1", "x3*x0"], lambda: [str(u) for u in borel.truncation(Y, 2)]),
        ("J({6..10})", [str(g) for g in J2.generators],
         lambda: [str(g) for g in borel.ideal_from_multiindex(borel.MultiIndex(3, 2, (6, 7, 8, 9, 10))).generators]),
        ("2t+2 ideal enumerated", True, lambda: J in borel.enumerate_borel(3, P("2t+2"), 2)),
        ("classify {6..10} for 2t+1", "InS",
         lambda: borel.classify_multiindex(borel.MultiIndex(3, 2, (6, 7, 8, 9, 10)), P("2t+1"), 2)),
        ("classify the 2t+2 chart", "InS_rprime_p",
         lambda: borel.classify_multiindex(borel.multiindex_of(J, 2), P("2t+2"), 2)),
        ("classify the (x3) chart", "InS",
         lambda: borel.classify_multiindex(borel.MultiIndex(3, 2, (3, 5, 6, 8, 9, 10)), P("2t+2"), 2)),
        ("Grassmannian for 2t+2", [6, 10], lambda: list(ctx22.grassmannian)),
        ("Grassmannian for 2t+1", [5, 10], lambda: list(hilbert.context(3, P("2t+1"), 2, 2).grassmannian)),
        ("q(2), q(3) for 2t+2", [4, 12], lambda: [ctx22.q, ctx22.q_at(3)]),
        ("rk I_3 of (x3)_2", 10,
         lambda: marked.rank_profile(marked.make_marked_set(Y, 2), 3)[-1][1]),
        ("E' and E for 2t+2", [210, 125970], lambda: [ctx22.E_prime, ctx22.E]),
        ("2t+2 point is a member", "Member", lambda: verdict(J)),
        ("(x3)_2 lies in the complement", "InComplement", lambda: verdict(Y)),
        ("equation degree <= 3 for 2t+1", True,
         lambda: max(pluecker.equations(hilbert.context(3, P("2t+1"), 2, 2)).structure.degree.values()) <= 3),
        ("multiplier variables for G1 and G2/G3", [[0, 1], [2, 3]], lambda: _multipliers(ctx22)),
    ]
    return checks


def _multipliers(ctx):
    fam = pluecker.generator_families(ctx)
    g1 = sorted({g.parts[0][1] for g in fam["G1"]})
    g23 = sorted({part[1] for g in fam["G2"] + fam["G3"] for part in g.parts})
    return [g1, g23]


def run_paper_checks(gotzmann=None):
    results = []
    for name, expected, fn in paper_checks(gotzmann):
        try:
            got = fn()
        except Exception as exc:  # a crash is a failed check, reported by name
            got = f"error: {exc}"
        results.append({"name": name, "expected": expected, "got": got, "pass": got == expected})
    return results


def cmd_verify_paper(args):
    results = run_paper_checks()
    failed = [r["name"] for r in results if not r["pass"]]
    report = JobReport("verify-paper", {}, {"checks": results, "passed": len(results) - len(failed),
                                            "total": len(results)})
    report.ok = not failed
    if failed:
        report.verdicts["first_failure"] = failed[0]
    return report


# ------------------------------------------------------------------ wiring


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="output file")

    parser = _Parser(prog="hilbreg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=fn)
        return sp

    sp = add("gotzmann", cmd_gotzmann, "Gotzmann number of p(t)")
    sp.add_argument("--p", required=True)
    sp = add("admissible", cmd_admissible, "admissibility of p(t)")
    sp.add_argument("--p", required=True)
    sp = add("hilb-poly", cmd_hilb_poly, "Hilbert polynomial of a strongly stable ideal")
    sp.add_argument("--n", type=int)
    sp.add_argument("--generators")
    sp.add_argument("--ideal")
    sp.add_argument("--t-max", type=int)
    sp = add("enum-borel", cmd_enum_borel, "saturated Borel ideals with given p and regularity")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--rprime", type=int, required=True)
    sp = add("classify-index", cmd_classify_index, "classify a multi-index")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--indices", required=True)
    sp.add_argument("--p", required=True)
    sp.add_argument("--rprime", type=int, required=True)
    sp = add("marked-check", cmd_marked_check, "marked-basis criterion and rank profile")
    sp.add_argument("--file", required=True)
    sp.add_argument("--t-max", type=int)
    sp.add_argument("--p")
    sp = add("marked-scheme-eqs", cmd_marked_scheme_eqs, "parametric marked-scheme equations")
    sp.add_argument("--n", type=int)
    sp.add_argument("--generators")
    sp.add_argument("--ideal")
    sp.add_argument("--s", type=int, required=True)
    sp = add("pluecker", cmd_pluecker, "Plücker coordinates of a point")
    sp.add_argument("--point", required=True)
    for name, fn, help_text in [("equations", cmd_equations, "global Plücker equations"),
                                ("membership", cmd_membership, "membership test")]:
        sp = add(name, fn, help_text)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--p", required=True)
        sp.add_argument("--rprime", type=int, required=True)
        sp.add_argument("--s", type=int, required=True)
        if name == "equations":
            sp.add_argument("--families", default="ABC")
            sp.add_argument("--max-terms", type=int, default=pluecker.MAX_EXPANSION_TERMS)
        else:
            sp.add_argument("--point")
            sp.add_argument("--monomials")
            sp.add_argument("--sample-count", type=int, default=5)
            sp.add_argument("--no-sample", action="store_true")
    add("verify-paper", cmd_verify_paper, "reproduce the worked examples")
    return parser


def _emit(text, args, to_file):
    if to_file:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeGuardExceeded as exc:
        print(f"size guard: {exc} {json.dumps(exc.counts, sort_keys=True)}", file=sys.stderr)
        return EXIT_GUARD
    except DomainError as exc:
        print(f"domain error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.elapsed = time.perf_counter() - start
    to_file = bool(args.out) and args.command != "equations"
    text = json.dumps(report.to_json(), sort_keys=True, indent=2, default=_json_default) if args.json else report.render()
    _emit(text, args, to_file)
    return EXIT_OK if report.ok else EXIT_DOMAIN


def _json_default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")
