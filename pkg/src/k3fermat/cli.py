"""Command-line surface for the catalog and its verification pipeline.

Every command prints a human-readable report by default and a JSON
document with --json. JSON output is stable: fixed key insertion order,
exact integers, rationals as "num/den" strings, no floats, and no
timing data (elapsed time is shown only in the human format, as integer
milliseconds). Exit codes: 0 success, 1 verification failure, 2 usage
or input error.
"""

import argparse
import json
import sys
import time

from .catalog import (
    ORDERS,
    catalog_as_dicts,
    catalog_entry,
    entry_as_dict,
    load_catalog,
    verify_entry,
)
from .characters import CharacterVector
from .delsarte import (
    SurfaceSyntaxError,
    derive_cover,
    parse_surface,
    transcendental_characters,
)
from .field import make_field
from .jacobi_zeta import default_primes, jacobi_sum, zeta_report
from .lattice import discriminant_form, mirror_split, nikulin_complement_check
from .pointcount import count_affine_double_sextic, count_elliptic_smooth, count_fermat


class UsageError(Exception):
    """Bad input that is not a verification failure; mapped to exit 2."""


def _emit(doc, as_json, human_lines):
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        for line in human_lines:
            print(line)


def _entry_or_usage(k):
    try:
        return catalog_entry(k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _require_prime(q):
    try:
        make_field(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_zeta_prime(entry, q):
    _require_prime(q)
    if entry.k == 3:
        if q in (2, 3):
            raise UsageError(
                f"q = {q} has bad reduction at order 3; admissible primes: 5, 7, 11, 13")
        return
    if (q - 1) % entry.m != 0:
        good = ", ".join(str(p) for p in default_primes(entry.m))
        raise UsageError(
            f"q = {q} is not 1 mod {entry.m}; smallest admissible primes: {good}")


def _ms(t0):
    return int((time.time() - t0) * 1000)


# ---------------------------------------------------------------------------
# commands

def cmd_catalog(args):
    if args.k is None:
        if args.json:
            print(json.dumps(catalog_as_dicts(), indent=2))
            return 0
        lines = [f"{'k':>3}  {'class':<14} {'m':>4}  {'equation':<34} mirror"]
        for e in load_catalog():
            mirror = (",".join(str(p) for p in e.mirror_partner)
                      if isinstance(e.mirror_partner, tuple) else e.mirror_partner)
            lines.append(f"{e.k:>3}  {e.lattice_class:<14} {e.m or '-':>4}  "
                         f"{e.equation:<34} {mirror}")
        _emit(None, False, lines)
        return 0
    entry = _entry_or_usage(args.k)
    doc = entry_as_dict(entry)
    lines = [
        f"k = {entry.k} ({entry.lattice_class}), Fermat degree m = {entry.m}",
        f"equation: {entry.equation}",
        f"action on {', '.join(entry.action_vars)}: exponents {list(entry.action)}",
        f"S: rank {entry.s_gram.rank}, signature {entry.s_gram.signature}, "
        f"det {entry.s_gram.determinant}",
        f"T: rank {entry.t_gram.rank}, signature {entry.t_gram.signature}, "
        f"det {entry.t_gram.determinant}",
    ]
    if entry.fibers:
        lines.append("fibers: " + ", ".join(f"{kind} (deg {d})" for kind, d in entry.fibers))
    if entry.section:
        lines.append(f"section ({entry.section.x_text}, {entry.section.y_text}), "
                     f"height {doc['height']}, disc {entry.disc_s}")
    if entry.expected_characters:
        lines.append(f"characters: {len(entry.expected_characters)} "
                     f"(first {list(entry.expected_characters[0])})")
    lines.append(f"mirror partner: {doc['mirror_partner']}")
    lines.append(f"zeta primes: {list(entry.zeta_primes)}")
    _emit(doc, args.json, lines)
    return 0


def cmd_verify(args):
    t0 = time.time()
    ks = list(ORDERS) if args.all else [args.k]
    entries = [_entry_or_usage(k) for k in ks]
    primes = tuple(args.q) if args.q else None
    if primes:
        for entry in entries:
            for q in primes:
                _check_zeta_prime(entry, q)
    reports = [verify_entry(entry, primes) for entry in entries]
    ok = all(r.ok for r in reports)
    doc = {
        "command": "verify",
        "inputs": {"k": ks, "q": list(primes) if primes else None},
        "ok": ok,
        "reports": [r.as_dict() for r in reports],
    }
    lines = []
    for r in reports:
        lines.append(f"k = {r.k}:")
        for c in r.checks:
            lines.append(f"  [{c.status:<4}] {c.name}: {c.detail}")
    noun = "entry" if len(reports) == 1 else "entries"
    lines.append(f"{'PASS' if ok else 'FAIL'} ({len(reports)} {noun}, {_ms(t0)} ms)")
    _emit(doc, args.json, lines)
    return 0 if ok else 1


def cmd_zeta(args):
    entry = _entry_or_usage(args.k)
    _check_zeta_prime(entry, args.q)
    rep = zeta_report(args.k, args.q)
    doc = {
        "command": "zeta",
        "inputs": {"k": args.k, "q": args.q},
        "result": {
            "m": rep.m,
            "n_plus": rep.n_plus,
            "n_minus": rep.n_minus,
            "r_a": list(rep.r_a.coeffs),
            "r_t": list(rep.r_t.coeffs),
            "jacobi": [
                {"alpha": list(alpha.a), "value": value.format()}
                for alpha, value in rep.jacobi_values
            ],
            "trace": rep.trace,
            "predicted_count": rep.predicted_count,
            "notes": list(rep.notes),
        },
    }
    lines = [
        f"k = {args.k}, q = {args.q}, "
        + (f"m = {rep.m}" if rep.m else "no Fermat cover"),
        f"algebraic factor: (1 - {args.q}T)^{rep.n_plus} (1 + {args.q}T)^{rep.n_minus}",
        f"transcendental factor: {rep.r_t.format('T')}",
        f"trace = {rep.trace}",
        f"predicted count over F_{args.q}: {rep.predicted_count}",
    ]
    lines += [f"note: {note}" for note in rep.notes]
    _emit(doc, args.json, lines)
    return 0


def cmd_jacobi(args):
    try:
        triple = tuple(int(part) for part in args.alpha.split(","))
    except ValueError:
        raise UsageError(f"cannot parse --alpha {args.alpha!r}; expected a1,a2,a3")
    if len(triple) != 3:
        raise UsageError("--alpha takes exactly three comma-separated residues")
    _require_prime(args.q)
    if (args.q - 1) % args.m != 0:
        good = ", ".join(str(p) for p in default_primes(args.m))
        raise UsageError(
            f"q = {args.q} is not 1 mod {args.m}; smallest admissible primes: {good}")
    try:
        alpha = CharacterVector.from_triple(args.m, triple)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    value = jacobi_sum(make_field(args.q), args.m, alpha)
    norm = (value * value.conj()).as_rational_integer()
    rational = value.as_rational_integer()
    doc = {
        "command": "jacobi",
        "inputs": {"m": args.m, "q": args.q, "alpha": list(alpha.a)},
        "result": {
            "value": value.format(),
            "rational": rational,
            "norm": norm,
            "norm_ok": norm == args.q * args.q,
        },
    }
    lines = [f"j(alpha) = {rational if rational is not None else value.format()}",
             f"j * conj(j) = {norm} (q^2 = {args.q * args.q})"]
    _emit(doc, args.json, lines)
    return 0 if norm == args.q * args.q else 1


def cmd_count(args):
    if (args.fermat is None) == (args.k is None):
        raise UsageError("pass exactly one of --fermat M or --k K")
    _require_prime(args.q)
    note = None
    if args.fermat is not None:
        if args.fermat < 1:
            raise UsageError("--fermat degree must be positive")
        count = count_fermat(args.fermat, args.q)
        what = f"Fermat surface of degree {args.fermat}"
        inputs = {"fermat": args.fermat, "q": args.q}
    else:
        entry = _entry_or_usage(args.k)
        inputs = {"k": args.k, "q": args.q}
        if entry.elliptic:
            if args.q in (2, 3):
                raise UsageError("point counts need residue characteristic at least 5")
            count = count_elliptic_smooth(entry.model, args.q)
            what = f"smooth elliptic model of the order-{args.k} surface"
        else:
            if args.q == 2:
                raise UsageError("the double sextic needs odd q")
            count = count_affine_double_sextic(entry.sextic_coeffs(), args.q)
            what = f"affine double sextic chart of the order-{args.k} surface"
            note = "affine chart only; smooth count out of scope"
    doc = {
        "command": "count",
        "inputs": inputs,
        "result": {"count": count, "note": note},
    }
    lines = [f"{what} over F_{args.q}: {count} points"]
    if note:
        lines.append(f"note: {note}")
    _emit(doc, args.json, lines)
    return 0


def _form_dict(q):
    r = len(q.orders)
    unit = lambda i: [1 if j == i else 0 for j in range(r)]
    return {
        "orders": list(q.orders),
        "values": [_rat_text(q.value(unit(i))) for i in range(r)],
    }


def _rat_text(value):
    num, den = value.numerator, value.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def cmd_lattice(args):
    entry = _entry_or_usage(args.k)
    qs = discriminant_form(entry.s_gram)
    qt = discriminant_form(entry.t_gram)
    opposite = nikulin_complement_check(entry.s_gram, entry.t_gram)
    doc = {
        "command": "lattice",
        "inputs": {"k": args.k},
        "result": {
            "s": {"rank": entry.s_gram.rank,
                  "signature": list(entry.s_gram.signature),
                  "determinant": entry.s_gram.determinant,
                  "discriminant_form": _form_dict(qs)},
            "t": {"rank": entry.t_gram.rank,
                  "signature": list(entry.t_gram.signature),
                  "determinant": entry.t_gram.determinant,
                  "discriminant_form": _form_dict(qt)},
            "forms_opposite": opposite,
        },
    }
    lines = [
        f"S: rank {entry.s_gram.rank}, signature {entry.s_gram.signature}, "
        f"det {entry.s_gram.determinant}, discriminant group {qs.orders or '(trivial)'}",
        f"T: rank {entry.t_gram.rank}, signature {entry.t_gram.signature}, "
        f"det {entry.t_gram.determinant}, discriminant group {qt.orders or '(trivial)'}",
        f"discriminant forms opposite: {opposite}",
    ]
    _emit(doc, args.json, lines)
    return 0 if opposite else 1


def cmd_mirror(args):
    entry = _entry_or_usage(args.k)
    result = mirror_split(entry.t_gram)
    partner = entry.mirror_partner
    if result == "none":
        doc_result = {"split": "none", "partners": None, "complement": None}
        lines = ["none: transcendental lattice positive definite"]
        ok = partner == "none"
    else:
        matched = None
        if isinstance(partner, tuple):
            matched = [kp for kp in partner
                       if result.gram == catalog_entry(kp).s_gram.gram]
        doc_result = {
            "split": "family" if partner == "family" else "partner",
            "partners": matched if matched else None,
            "complement": {
                "rank": result.rank,
                "signature": list(result.signature),
                "determinant": result.determinant,
                "gram": result.rows(),
            },
        }
        lines = [f"complement: rank {result.rank}, signature {result.signature}, "
                 f"det {result.determinant}"]
        if matched:
            lines.append("matches the Picard lattice of order " +
                         ", ".join(str(kp) for kp in matched))
            ok = True
        elif partner == "family":
            lines.append("mirror family; no catalog member carries this Picard lattice")
            ok = True
        else:
            lines.append("complement matches no stored partner")
            ok = False
    doc = {"command": "mirror", "inputs": {"k": args.k}, "ok": ok, "result": doc_result}
    _emit(doc, args.json, lines)
    return 0 if ok else 1


def cmd_delsarte(args):
    try:
        surface = parse_surface(args.equation)
    except (SurfaceSyntaxError, ValueError) as exc:
        raise UsageError(f"cannot parse equation: {exc}") from None
    try:
        m, pi = derive_cover(surface)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    chars = transcendental_characters(surface, pi)
    rho = 22 - len(chars)
    doc = {
        "command": "delsarte",
        "inputs": {"equation": args.equation},
        "result": {
            "m": m,
            "images": [{"variable": v, "sign": s, "exponents": list(e)}
                       for v, s, e in pi.images],
            "characters": [list(c.a) for c in chars],
            "transcendental_count": len(chars),
            "picard_number": rho,
        },
    }
    lines = [
        f"Fermat cover degree m = {m}",
        "map: " + ", ".join(f"{v} -> {pi.image_text(v)}" for v, _s, _e in pi.images),
        f"{len(chars)} transcendental characters",
        f"Picard number rho = {rho}",
    ]
    _emit(doc, args.json, lines)
    return 0


# ---------------------------------------------------------------------------
# parser

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="k3fermat",
        description="Exact zeta, point-count and lattice checks for the catalog "
                    "of K3 surfaces covered by Fermat surfaces.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, fn, helptext):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        p.set_defaults(func=fn)
        return p

    p = add("catalog", cmd_catalog, "list the catalog or show one entry")
    p.add_argument("--k", type=int, help="automorphism order")

    p = add("verify", cmd_verify, "recompute and check the stored data")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, help="verify one entry")
    group.add_argument("--all", action="store_true", help="verify every entry")
    p.add_argument("--q", type=int, action="append",
                   help="override the zeta primes (repeatable)")

    p = add("zeta", cmd_zeta, "zeta factors and predicted count at one prime")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    p = add("jacobi", cmd_jacobi, "one Jacobi sum with its norm check")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", required=True, help="a1,a2,a3 residues mod m")

    p = add("count", cmd_count, "brute-force point counts")
    p.add_argument("--fermat", type=int, help="Fermat surface degree")
    p.add_argument("--k", type=int, help="catalog entry")
    p.add_argument("--q", type=int, required=True)

    p = add("lattice", cmd_lattice, "lattice invariants and discriminant forms")
    p.add_argument("--k", type=int, required=True)

    p = add("mirror", cmd_mirror, "hyperbolic splitting of the transcendental lattice")
    p.add_argument("--k", type=int, required=True)

    p = add("delsarte", cmd_delsarte, "analyze a four-monomial equation")
    p.add_argument("--equation", required=True)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
