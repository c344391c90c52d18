"""Command-line front end.

Exit codes: 0 success, 1 a mathematical verdict of fail/false, 2 usage or
parse errors.  --json switches output to the versioned JSON schemas.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from . import report as report_mod
from .corpus import CorpusError, load_corpus, run_entry
from .cover import (
    CoverDatum,
    TameElement,
    cocycle_identity_check,
    distinguished_char_eval,
    dual_root_datum,
    lattice_Y_Qn,
    sigma_D,
    tame_hilbert,
)
from .dsl import DslError, parse_character, parse_root, parse_root_set
from .exchange import ExchangeTriple, check_exchange_quadruple, check_exchange_triple
from .fields import QQ, SquareClassField
from .filtration import (
    character_from_data,
    grade_orbit,
    heisenberg_quotient,
    is_generic_character,
    split_form_check,
    stabilizer_dimension,
)
from .orbits import (
    SymplecticPartition,
    dimension_equation_solve,
    enumerate_symplectic_partitions,
    gk_dimension,
    h_of_orbit,
    orbit_dimension,
    orbit_poset,
    orbits_not_below,
)
from .params import (
    ParamSet,
    arthur_compose,
    cap_triple,
    chi_GL,
    chi_theta,
    is_exceptional,
    is_tempered,
    nearly_equivalent,
    shimura_square,
    theta_lift_params,
)

SCHEMA = "sympcap/1"


def _partition(text: str) -> SymplecticPartition:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition {text!r}; expected e.g. 2,2,1,1") from None
    return SymplecticPartition(parts)


def _fractions(text: str) -> list[Fraction]:
    out = []
    for token in text.split(","):
        try:
            out.append(Fraction(token.strip()))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad rational {token.strip()!r}") from None
    return out


_TAME = re.compile(r"^(?:p\^(-?\d+)\*)?(\d+)$")


def _tame(text: str, q: int) -> TameElement:
    m = _TAME.match(text.strip())
    if not m:
        raise ValueError(f"bad tame element {text!r}; expected p^v*u or a unit")
    return TameElement(int(m.group(1) or 0), int(m.group(2)), q)


def _tame_vector(text: str, q: int) -> list[TameElement]:
    return [_tame(tok, q) for tok in text.split(",")]


def _params(text: str) -> ParamSet:
    try:
        return ParamSet.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise ValueError(f"bad parameter set JSON: {exc}") from None


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, indent=None, sort_keys=True))
    else:
        print(human)


# ---------------------------------------------------------------- orbit


def cmd_orbit_list(args) -> int:
    parts = enumerate_symplectic_partitions(args.two_r)
    _emit(args, {"partitions": [p.to_json() for p in parts]}, "\n".join(str(p) for p in parts))
    return 0


def cmd_orbit_dim(args) -> int:
    lam = _partition(args.partition)
    _emit(args, {"partition": lam.to_json(), "dim": orbit_dimension(lam)}, str(orbit_dimension(lam)))
    return 0


def cmd_orbit_gk(args) -> int:
    lam = _partition(args.partition)
    val = gk_dimension(lam)
    _emit(args, {"partition": lam.to_json(), "gk": str(val)}, str(val))
    return 0


def cmd_orbit_h(args) -> int:
    lam = _partition(args.partition)
    h = h_of_orbit(lam.parts)
    _emit(args, {"partition": lam.to_json(), "h": list(h)}, ",".join(map(str, h)))
    return 0


def cmd_orbit_not_below(args) -> int:
    lam = _partition(args.partition)
    out = orbits_not_below(lam)
    _emit(
        args,
        {"partition": lam.to_json(), "not_below": [p.to_json() for p in out]},
        "\n".join(str(p) for p in out) if out else "(none)",
    )
    return 0


def cmd_poset(args) -> int:
    poset = orbit_poset(args.two_r, args.cache_dir)
    human = "\n".join(
        f"{str(poset.nodes[i])} > {str(poset.nodes[j])}" for i, j in poset.covers
    )
    _emit(args, poset.to_json(), human or "(single node)")
    return 0


# ------------------------------------------------------------ filtration


def cmd_filtration_grade(args) -> int:
    lam = _partition(args.partition)
    data = grade_orbit(lam)
    human_lines = [f"h = {','.join(map(str, data.h))}"]
    for l, roots in data.levels:
        if l >= 1:
            human_lines.append(f"V_{l}: " + " ".join(str(a) for a in sorted(roots, key=lambda x: x.coords)))
    human_lines.append("levi: " + " ".join(str(a) for a in sorted(data.levi_roots, key=lambda x: x.coords)))
    _emit(args, data.to_json(), "\n".join(human_lines))
    return 0


def cmd_filtration_heisenberg(args) -> int:
    dim, center = heisenberg_quotient(args.m, args.r)
    _emit(
        args,
        {"symplectic_dim": dim, "center": list(center.coords)},
        f"symplectic dimension {dim}, center root {center}",
    )
    return 0


# ------------------------------------------------------------- character


def cmd_character_make(args) -> int:
    lam = _partition(args.partition)
    psi = character_from_data(lam, _fractions(args.data))
    _emit(args, psi.to_json(), "\n".join(f"{a}: {c}" for a, c in psi.support))
    return 0


def cmd_character_stabilizer(args) -> int:
    lam = _partition(args.partition)
    psi = character_from_data(lam, _fractions(args.data), allow_degenerate=True)
    dim = stabilizer_dimension(lam, psi)
    _emit(args, {"partition": lam.to_json(), "stabilizer_dim": dim}, str(dim))
    return 0


def cmd_character_generic(args) -> int:
    lam = _partition(args.partition)
    psi = character_from_data(lam, _fractions(args.data), allow_degenerate=True)
    verdict = is_generic_character(lam, psi)
    _emit(args, {"generic": verdict}, "generic" if verdict else "not generic")
    return 0 if verdict else 1


def cmd_character_split(args) -> int:
    field = SquareClassField(neg_one_is_square=True) if args.neg_one_square else QQ
    eps = _fractions(args.eps)
    if args.neg_one_square:
        eps = [field.element(f"e{i}") for i in range(len(eps))]  # abstract entries
    verdict = split_form_check(eps, field)
    _emit(args, {"verdict": verdict}, verdict)
    return 0 if verdict == "split" else 1


# -------------------------------------------------------------- exchange


def cmd_exchange_triple(args) -> int:
    c = parse_root_set(args.c, args.rank)
    psi = parse_character(args.psi, args.rank, carrier=c)
    triple = ExchangeTriple(
        parse_root(args.alpha, args.rank),
        parse_root(args.gamma, args.rank),
        parse_root(args.beta, args.rank),
    )
    report = check_exchange_triple(c, psi, triple)
    human = "pass" if report.passed else "fail"
    human += " " + " ".join(f"{k}={'T' if v else 'F'}" for k, v in report.conditions)
    _emit(args, report.to_json(), human)
    return 0 if report.passed else 1


def cmd_exchange_quadruple(args) -> int:
    c = parse_root_set(args.c, args.rank)
    psi = parse_character(args.psi, args.rank, carrier=c)
    x = parse_root_set(args.x, args.rank)
    y = parse_root_set(args.y, args.rank)
    report = check_exchange_quadruple(c, psi, x, y)
    human = "pass" if report.passed else "fail"
    human += " " + " ".join(f"{k}={'T' if v else 'F'}" for k, v in report.properties)
    _emit(args, report.to_json(), human)
    return 0 if report.passed else 1


def cmd_corpus(args) -> int:
    entries = load_corpus()
    if getattr(args, "name", None):
        entries = [e for e in entries if e.name == args.name]
        if not entries:
            raise ValueError(f"no corpus entry named {args.name!r}")
    results = []
    all_pass = True
    for entry in entries:
        rep = run_entry(entry)
        ok = rep.passed == (entry.expect == "pass")
        all_pass = all_pass and ok
        results.append((entry, rep, ok))
    payload = {
        "results": [
            {"name": e.name, "rank": e.rank, "kind": e.kind, "passed": r.passed, "as_expected": ok}
            for e, r, ok in results
        ]
    }
    human = "\n".join(
        f"{'PASS' if ok else 'FAIL'} {e.name} (rank {e.rank}, {e.kind})" for e, r, ok in results
    )
    _emit(args, payload, human)
    return 0 if all_pass else 1


# ----------------------------------------------------------------- cover


def cmd_cover_lattice(args) -> int:
    d = CoverDatum.standard(args.rank, args.n, args.scale)
    big, small = lattice_Y_Qn(d)
    from .linalg import lattice_index

    idx = lattice_index(big, small)
    payload = {"Y_Qn": big, "Y_Qn_sc": small, "index": idx}
    human = (
        "Y_{Q,n} basis rows: " + "; ".join(str(r) for r in big) + "\n"
        "Y_{Q,n}^sc basis rows: " + "; ".join(str(r) for r in small) + f"\nindex: {idx}"
    )
    _emit(args, payload, human)
    return 0


def cmd_cover_dual(args) -> int:
    d = CoverDatum.standard(args.rank, args.n, args.scale)
    datum = dual_root_datum(d)
    payload = {
        "n_alpha": list(datum.n_alpha),
        "modified_coroots": [list(c) for c in datum.modified_simple_coroots],
        "modified_roots": [[str(x) for x in c] for c in datum.modified_simple_roots],
        "cartan_type": datum.cartan_type,
    }
    _emit(args, payload, datum.cartan_type)
    return 0


def cmd_cover_hilbert(args) -> int:
    x = _tame(args.x, args.q)
    y = _tame(args.y, args.q)
    e = tame_hilbert(x, y, args.n)
    _emit(args, {"exponent": e, "n": args.n, "q": args.q}, str(e))
    return 0


def cmd_cover_sigma(args) -> int:
    t = _tame_vector(args.t, args.q)
    s = _tame_vector(args.s, args.q)
    e = sigma_D(t, s)
    _emit(args, {"exponent": e, "q": args.q}, str(e))
    return 0


def cmd_cover_cocycle(args) -> int:
    rng = random.Random(args.seed)
    ok = True
    for _ in range(args.trials):
        vecs = []
        for _ in range(3):
            vecs.append(
                [
                    TameElement(rng.randint(-2, 2), rng.randint(1, args.q - 1), args.q)
                    for _ in range(args.rank)
                ]
            )
        if not cocycle_identity_check(*vecs):
            ok = False
    _emit(args, {"holds": ok, "trials": args.trials}, "holds" if ok else "violated")
    return 0 if ok else 1


def cmd_cover_distinguished(args) -> int:
    a = _tame(args.a, args.q)
    e = distinguished_char_eval(args.sign, args.index, a, args.rank)
    _emit(args, {"exponent": e}, str(e))
    return 0


# ------------------------------------------------------------------ lift


def cmd_lift_theta(args) -> int:
    out = theta_lift_params(args.m, args.n, _params(args.params))
    _emit(args, out.to_json(), " ".join(f"({e.s},{e.u})" for e in out.entries))
    return 0


def cmd_lift_shimura(args) -> int:
    out = shimura_square(_params(args.params))
    _emit(args, out.to_json(), " ".join(f"({e.s},{e.u})" for e in out.entries))
    return 0


def cmd_lift_arthur(args) -> int:
    out = arthur_compose(_params(args.params), args.k)
    _emit(args, out.to_json(), " ".join(f"({e.s},{e.u})" for e in out.entries))
    return 0


def cmd_lift_tempered(args) -> int:
    verdict = is_tempered(_params(args.params))
    _emit(args, {"tempered": verdict}, "tempered" if verdict else "non-tempered")
    return 0 if verdict else 1


def cmd_lift_chi_theta(args) -> int:
    chi = chi_theta(args.rank)
    _emit(args, {"exponents": [str(x) for x in chi.exponents]}, ",".join(str(x) for x in chi.exponents))
    return 0


def cmd_lift_chi_gl(args) -> int:
    chi = chi_GL(args.k, args.rank)
    _emit(args, {"exponents": [str(x) for x in chi.exponents]}, ",".join(str(x) for x in chi.exponents))
    return 0


def cmd_lift_exceptional(args) -> int:
    if args.exponents:
        from .params import ExceptionalCharacter

        chi = ExceptionalCharacter(tuple(_fractions(args.exponents)))
    else:
        chi = chi_theta(args.rank)
    datum = CoverDatum.standard(args.rank, args.n)
    ok, rows = is_exceptional(chi, datum)
    payload = {
        "exceptional": ok,
        "report": [{"root": lbl, "n_alpha": na, "q_exponent": str(e)} for lbl, na, e in rows],
    }
    human = ("exceptional" if ok else "not exceptional") + "\n" + "\n".join(
        f"  {lbl}: n_alpha={na} exponent={e}" for lbl, na, e in rows
    )
    _emit(args, payload, human)
    return 0 if ok else 1


def cmd_lift_cap(args) -> int:
    datum = cap_triple(args.m, args.n_pi, args.n)
    _emit(
        args,
        datum.to_json(),
        f"{datum.parabolic_label} exponents ({','.join(str(x) for x in datum.exponents)})"
        + (" [roles swapped]" if datum.swapped else ""),
    )
    return 0


def cmd_lift_near(args) -> int:
    verdict = nearly_equivalent(_params(args.a), _params(args.b))
    _emit(args, {"nearly_equivalent": verdict}, "nearly equivalent" if verdict else "different")
    return 0 if verdict else 1


def cmd_dimeq(args) -> int:
    n_range = range(0, args.n_max + 1) if args.n_max is not None else None
    solutions, required = dimension_equation_solve(args.m, Fraction(args.dim_pi), n_range)
    payload = {
        "solutions": solutions,
        "required": {str(n): str(v) for n, v in required.items()},
    }
    human = "solutions: " + (",".join(map(str, solutions)) or "(none)") + "\n" + "\n".join(
        f"  n={n}: required dim {v}" for n, v in sorted(required.items())
    )
    _emit(args, payload, human)
    return 0


def cmd_report(args) -> int:
    if args.what == "poset":
        files = report_mod.report_poset(args.two_r, args.out)
    elif args.what == "gk":
        files = report_mod.report_gk(args.max_r, args.out)
    else:
        files = report_mod.report_corpus(args.out)
    _emit(args, {"files": files}, "\n".join(files))
    return 0


# ------------------------------------------------------------------ wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sympcap")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit versioned JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    orbit = sub.add_parser("orbit", help="symplectic partitions and orbit dimensions")
    osub = orbit.add_subparsers(dest="action", required=True)
    p = osub.add_parser("list", parents=[common])
    p.add_argument("--two-r", type=int, required=True)
    p.set_defaults(func=cmd_orbit_list)
    for name, fn in (
        ("dim", cmd_orbit_dim),
        ("gk", cmd_orbit_gk),
        ("h", cmd_orbit_h),
        ("not-below", cmd_orbit_not_below),
    ):
        p = osub.add_parser(name, parents=[common])
        p.add_argument("--partition", required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("poset", parents=[common], help="orbit poset with covers")
    p.add_argument("--two-r", type=int, required=True)
    p.add_argument("--cache-dir")
    p.set_defaults(func=cmd_poset)

    filt = sub.add_parser("filtration", help="graded filtration data")
    fsub = filt.add_subparsers(dest="action", required=True)
    p = fsub.add_parser("grade", parents=[common])
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_filtration_grade)
    p = fsub.add_parser("heisenberg", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_filtration_heisenberg)

    char = sub.add_parser("character", help="characters, stabilizers, split forms")
    csub = char.add_subparsers(dest="action", required=True)
    for name, fn in (
        ("make", cmd_character_make),
        ("stabilizer", cmd_character_stabilizer),
        ("generic", cmd_character_generic),
    ):
        p = csub.add_parser(name, parents=[common])
        p.add_argument("--partition", required=True)
        p.add_argument("--data", required=True)
        p.set_defaults(func=fn)
    p = csub.add_parser("split", parents=[common])
    p.add_argument("--eps", required=True)
    p.add_argument("--neg-one-square", action="store_true", help="abstract field with -1 a square")
    p.set_defaults(func=cmd_character_split)

    exch = sub.add_parser("exchange", help="exchange triples and quadruples")
    esub = exch.add_subparsers(dest="action", required=True)
    p = esub.add_parser("triple", parents=[common])
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(func=cmd_exchange_triple)
    p = esub.add_parser("quadruple", parents=[common])
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--psi", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_exchange_quadruple)
    p = esub.add_parser("corpus", parents=[common])
    p.add_argument("--run-all", action="store_true", default=True)
    p.add_argument("--name")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("corpus", parents=[common], help="replay the exchange corpus")
    p.add_argument("--run-all", action="store_true", default=True)
    p.add_argument("--name")
    p.set_defaults(func=cmd_corpus)

    cov = sub.add_parser("cover", help="lattice and cocycle data")
    vsub = cov.add_subparsers(dest="action", required=True)
    p = vsub.add_parser("lattice", parents=[common])
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--scale", type=int, default=-1)
    p.set_defaults(func=cmd_cover_lattice)
    p = vsub.add_parser("dual", parents=[common])
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--scale", type=int, default=-1)
    p.set_defaults(func=cmd_cover_dual)
    p = vsub.add_parser("hilbert", parents=[common])
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=cmd_cover_hilbert)
    p = vsub.add_parser("sigma", parents=[common])
    p.add_argument("--t", required=True)
    p.add_argument("--s", required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_cover_sigma)
    p = vsub.add_parser("cocycle", parents=[common])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_cover_cocycle)
    p = vsub.add_parser("distinguished", parents=[common])
    p.add_argument("--sign", choices=["+", "-"], required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_cover_distinguished)

    lift = sub.add_parser("lift", help="parameter transfer pipeline")
    lsub = lift.add_subparsers(dest="action", required=True)
    p = lsub.add_parser("theta", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--params", required=True)
    p.set_defaults(func=cmd_lift_theta)
    p = lsub.add_parser("shimura", parents=[common])
    p.add_argument("--params", required=True)
    p.set_defaults(func=cmd_lift_shimura)
    p = lsub.add_parser("arthur", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--params", required=True)
    p.set_defaults(func=cmd_lift_arthur)
    p = lsub.add_parser("tempered", parents=[common])
    p.add_argument("--params", required=True)
    p.set_defaults(func=cmd_lift_tempered)
    p = lsub.add_parser("chi-theta", parents=[common])
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(func=cmd_lift_chi_theta)
    p = lsub.add_parser("chi-gl", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(func=cmd_lift_chi_gl)
    p = lsub.add_parser("exceptional", parents=[common])
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--exponents")
    p.set_defaults(func=cmd_lift_exceptional)
    p = lsub.add_parser("cap", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n-pi", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_lift_cap)
    p = lsub.add_parser("near", parents=[common])
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_lift_near)

    p = sub.add_parser("dimeq", parents=[common], help="dimension-equation solver")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dim-pi", required=True)
    p.add_argument("--n-max", type=int)
    p.set_defaults(func=cmd_dimeq)

    rep = sub.add_parser("report", parents=[common], help="CSV + figure reports")
    rep.add_argument("what", choices=["poset", "gk", "corpus"])
    rep.add_argument("--out", required=True)
    rep.add_argument("--two-r", type=int, default=8)
    rep.add_argument("--max-r", type=int, default=12)
    rep.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except DslError as exc:
        print(f"parse error at {exc.render()}", file=sys.stderr)
        return 2
    except (CorpusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
