"""Command-line front end.

Exit codes: 0 success, 1 parse/validation error, 2 precondition violation,
3 internal invariant breach.  Output is deterministic; ``--json`` switches
every subcommand to a stable machine-readable rendering.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bands as bandmod
from . import bridges as bridgemod
from . import hammocks, oracle, ranks
from .algebra import StringAlgebra
from .errors import (
    InternalInvariantError,
    NotAStringAlgebra,
    NotMetaTorsionFree,
    PresentationError,
    SignConsistencyError,
    StringAlgError,
)
from .presentation import parse_presentation, validate_string_algebra
from .words import parse_word, word_sort_key, word_to_json


def _load(path: str) -> StringAlgebra:
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    return StringAlgebra.from_presentation(parse_presentation(text))


def _emit(data, as_json: bool, text_lines):
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_validate(args) -> int:
    with open(args.presentation, encoding="utf-8") as handle:
        pres = parse_presentation(handle.read())
    report = validate_string_algebra(pres)
    data = {
        "is_string_algebra": report.is_string_algebra,
        "violations": [{"axiom": t, "locus": l} for t, l in report.violations],
    }
    lines = [f"string algebra: {'yes' if report.is_string_algebra else 'no'}"]
    lines += [f"  {t}: {l}" for t, l in report.violations]
    _emit(data, args.json, lines)
    return 0 if report.is_string_algebra else 1


def cmd_strings(args) -> int:
    alg = _load(args.presentation)
    out = alg.enumerate_strings(args.max_len, collapse_inverses=args.collapse_inverses)
    _emit({"strings": [w.literal() for w in out]}, args.json,
          [w.literal() for w in out])
    return 0


def cmd_bands(args) -> int:
    alg = _load(args.presentation)
    found = bandmod.enumerate_bands(alg, args.max_len)
    data = [{"band": b.rep.literal(), "prime": b.prime} for b in found]
    _emit({"max_len": args.max_len, "bands": data}, args.json,
          [f"{b.rep.literal()}  prime={'true' if b.prime else 'false'}" for b in found])
    return 0


def cmd_prime_bands(args) -> int:
    alg = _load(args.presentation)
    found = bandmod.enumerate_prime_bands(alg)
    _emit({"prime_bands": [b.rep.literal() for b in found]}, args.json,
          [b.rep.literal() for b in found])
    return 0


def cmd_band_free(args) -> int:
    alg = _load(args.presentation)
    catalog = bandmod.band_free_catalog(alg)
    _emit({"length_bound": catalog.length_bound,
           "strings": [w.literal() for w in catalog.strings]},
          args.json, [w.literal() for w in catalog.strings])
    return 0


def cmd_bridge_quiver(args) -> int:
    alg = _load(args.presentation)
    quiver = bridgemod.build_extended_bridge_quiver(alg, include_weak=args.weak) \
        if args.extended else None
    if quiver is None:
        arrows = [a for a in bridgemod.band_bridges(alg)
                  if args.weak or not a.weak_only]
        vertices = [b for b in bandmod.enumerate_prime_bands(alg)]
        quiver = bridgemod.ExtendedBridgeQuiver(
            tuple(vertices),
            tuple(a for a in arrows if not a.weak_only),
            tuple(a for a in arrows if a.weak_only))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(quiver.to_dot())
        print(f"wrote {args.dot}")
        return 0
    data = []
    for a in sorted(quiver.arrows + quiver.weak_arrows, key=lambda a: a.key()):
        data.append({
            "source": bridgemod.vertex_literal(a.source),
            "target": bridgemod.vertex_literal(a.target),
            "label": a.label.literal(),
            "kind": a.kind,
            "weak_only": bool(a.weak_only),
            "sigma_ba": a.sigma_ba,
        })
    lines = [f"{d['source']} -> {d['target']}  label={d['label']} kind={d['kind']}"
             + ("  (weak)" if d["weak_only"] else "") for d in data]
    _emit({"vertices": [bridgemod.vertex_literal(v) for v in quiver.vertices],
           "arrows": data}, args.json, lines)
    return 0


def cmd_classify(args) -> int:
    alg = _load(args.presentation)
    cls = bridgemod.classify_algebra(alg)
    data = cls.to_json()
    lines = [f"{k}: {v}" for k, v in data.items() if k != "witnesses"]
    lines += [f"  witness {k}: {v}" for k, v in data["witnesses"].items()]
    _emit(data, args.json, lines)
    return 0


def cmd_hammock(args) -> int:
    alg = _load(args.presentation)
    u = parse_word(args.word)
    fn = hammocks.successor if args.direction == "succ" else hammocks.predecessor
    out = fn(alg, u, args.side)
    _emit({"result": None if out is None else out.literal()}, args.json,
          ["undefined" if out is None else out.literal()])
    return 0


def cmd_expand(args) -> int:
    alg = _load(args.presentation)
    u = parse_word(args.word)
    res = hammocks.one_sided_expansion(alg, u, args.op)
    side = "l" if args.op in ("l", "lbar") else "r"
    data = {"status": res.status}
    if res.defined:
        data |= {
            "period": res.period_rotation.literal(),
            "period_band": res.period_band.rep.literal(),
            "period_prime": res.period_band.prime,
            "preperiod": None if res.preperiod is None else res.preperiod.literal(),
        }
    else:
        data["failed_at_step"] = res.failed_at_step
    _emit(data, args.json, [res.literal(side)])
    return 0


def cmd_generate_path(args) -> int:
    alg = _load(args.presentation)
    u = parse_word(args.word)
    spec = bridgemod.find_generating_path(alg, u)
    regenerated = bridgemod.generate_string(alg, spec)
    if regenerated != u:
        raise InternalInvariantError("generation round-trip failed")
    data = {
        "word": u.literal(),
        "arrows": [{
            "source": bridgemod.vertex_literal(a.source),
            "target": bridgemod.vertex_literal(a.target),
            "label": a.label.literal(),
            "kind": a.kind,
        } for a in spec.arrows],
        "exponents": list(spec.exponents),
    }
    lines = [f"{d['source']} -> {d['target']}  label={d['label']} ({d['kind']})"
             for d in data["arrows"]]
    lines.append(f"exponents: {list(spec.exponents)}")
    _emit(data, args.json, lines)
    return 0


def _band_from_literal(alg, literal: str):
    return bandmod.canonical_band(alg, parse_word(literal))


def cmd_rank(args) -> int:
    alg = _load(args.presentation)
    if args.kind == "ss":
        cls = ranks.rank_ss(alg, ranks.SSMap(
            w=parse_word(args.w), v=parse_word(args.v), u=parse_word(args.u)))
    elif args.kind == "sb":
        cls = ranks.rank_sb(alg, _band_from_literal(alg, args.band), parse_word(args.v))
    elif args.kind == "bs":
        cls = ranks.rank_bs(alg, _band_from_literal(alg, args.band), parse_word(args.v))
    else:
        cls = ranks.rank_bb(alg, ranks.BBMap(
            source_band=_band_from_literal(alg, args.source_band),
            target_band=_band_from_literal(alg, args.target_band),
            v=None if args.v is None else parse_word(args.v),
            hom_label=args.hom))
    _emit({"rank": cls.label}, args.json, [cls.label])
    return 0


def cmd_stable_rank(args) -> int:
    alg = _load(args.presentation)
    estimate = ranks.stable_rank_estimate(alg)
    data = estimate.to_json()
    _emit(data, args.json, [f"stable rank: {data['value']}"])
    return 0


def cmd_oracle(args) -> int:
    alg = _load(args.presentation)
    reports = oracle.run_all_checks(alg, budget=args.budget)
    data = [{
        "check": r.check_id,
        "population": r.population,
        "mismatches": [list(map(str, m)) for m in r.mismatches],
    } for r in reports]
    _emit({"reports": data}, args.json, [r.line() for r in reports])
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stringalg",
        description="combinatorial invariants of string algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("presentation", help="path to a .sqa presentation file")
        p.add_argument("--json", action="store_true")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, help="check the string-algebra axioms")

    p = add("strings", cmd_strings, help="enumerate strings up to a length")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--collapse-inverses", action="store_true")

    p = add("bands", cmd_bands, help="enumerate bands up to a length")
    p.add_argument("--max-len", type=int, default=12)

    add("prime-bands", cmd_prime_bands, help="the complete set of prime bands")
    add("band-free", cmd_band_free, help="the band-free string catalog")

    p = add("bridge-quiver", cmd_bridge_quiver, help="bridges between prime bands")
    p.add_argument("--extended", action="store_true",
                   help="include lazy vertices with half and zero bridges")
    p.add_argument("--weak", action="store_true", help="include weak-only arrows")
    p.add_argument("--dot", metavar="FILE", help="write DOT output")

    add("classify", cmd_classify, help="domesticity and the meta properties")

    p = add("hammock", cmd_hammock, help="order neighbours of a string")
    p.add_argument("direction", choices=("succ", "pred"))
    p.add_argument("--side", choices=("l", "r"), required=True)
    p.add_argument("word")

    p = add("expand", cmd_expand, help="one-sided expansion of a string")
    p.add_argument("--op", choices=hammocks.OPS, required=True)
    p.add_argument("word")

    p = add("generate-path", cmd_generate_path,
            help="a bridge-quiver path generating a string")
    p.add_argument("word")

    p = add("rank", cmd_rank, help="rank class of a graph map")
    p.add_argument("kind", choices=("ss", "sb", "bs", "bb"))
    p.add_argument("--w")
    p.add_argument("--v")
    p.add_argument("--u")
    p.add_argument("--band")
    p.add_argument("--source-band")
    p.add_argument("--target-band")
    p.add_argument("--hom", help="hom-basis label for bb maps")

    add("stable-rank", cmd_stable_rank, help="stable-rank estimate")

    p = add("oracle", cmd_oracle, help="run the brute-force cross-checks")
    p.add_argument("--budget", type=int, default=8)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (PresentationError, NotAStringAlgebra, SignConsistencyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (NotMetaTorsionFree, StringAlgError, ValueError) as exc:
        print(f"precondition: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
