"""``nilclean`` command line.

Exit status: 0 when the result is true or every check passed, 1 when it is
false or a check failed, 2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .cleanness import (
    Flavor,
    as_flavor,
    classify_ideal,
    decompose,
    ideal_profile,
    is_uniquely_wnc,
    verify_certificate,
)
from .ideals import all_ideals, ideal_generated_by, whole_ring
from .ring import DEFAULT_SIZE_CAP, Elem, RingError, split_top
from .specs import build_ring, load_config
from .theorems import CATALOG, CorpusConfig, build_corpus, run_statement

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _table(rows: list[Sequence], header: Optional[Sequence] = None) -> str:
    rows = [[str(c) for c in r] for r in rows]
    if header:
        rows.insert(0, [str(h) for h in header])
    if not rows:
        return ""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _ring(args):
    if not args.ring:
        raise _UsageError("--ring is required")
    return build_ring(args.ring, args.cap, load_config(args.config))


def _ideal(ring, args):
    if args.gens is None:
        return whole_ring(ring)
    return ideal_generated_by(ring, [g.strip() for g in split_top(args.gens) if g.strip()])


def _classification(ideal, flavor, restricted):
    c = classify_ideal(ideal, flavor, restricted)
    return {
        "ring": str(ideal.ring.spec),
        "ideal": "<" + ",".join(ideal.ring.display(g) for g in ideal.generators) + ">",
        "size": len(ideal),
        "flavor": flavor.value,
        "restricted": restricted,
        "holds": c.holds,
        "failure": c.failure_display,
    }


def cmd_classify(args, whole: bool):
    ring = _ring(args)
    ideal = whole_ring(ring) if whole else _ideal(ring, args)
    if args.flavor == "all":
        results = [_classification(ideal, f, args.restricted) for f in Flavor]
        status = EXIT_TRUE
    else:
        results = [_classification(ideal, as_flavor(args.flavor), args.restricted)]
        status = EXIT_TRUE if results[0]["holds"] else EXIT_FALSE
    if args.format == "json":
        return status, _dump(results if args.flavor == "all" else results[0])
    rows = [(r["flavor"], str(r["holds"]).lower(), r["failure"] or "-") for r in results]
    head = f"{results[0]['ring']}  ideal {results[0]['ideal']}  size {results[0]['size']}"
    return status, head + "\n" + _table(rows, ("flavor", "holds", "failure witness"))


def cmd_ideals(args):
    ring = _ring(args)
    out = []
    for I in all_ideals(ring, args.lattice_cap):
        profile = ideal_profile(I, args.restricted)
        out.append({
            "generators": [ring.display(g) for g in I.generators],
            "size": len(I),
            "elements": [ring.display(x) for x in I.elements],
            "uniquely_weak_nil_clean": is_uniquely_wnc(I),
            **{f.value: v for f, v in profile.items()},
        })
    if args.format == "json":
        return EXIT_TRUE, _dump({"ring": str(ring.spec), "ideals": out})
    short = [Flavor.CLEAN, Flavor.WEAKLY_CLEAN, Flavor.NIL_CLEAN, Flavor.WEAK_NIL_CLEAN]
    rows = [("<" + ",".join(d["generators"]) + ">", d["size"],
             *("y" if d[f.value] else "n" for f in short),
             "y" if d["uniquely_weak_nil_clean"] else "n") for d in out]
    return EXIT_TRUE, _table(rows, ("ideal", "size", "clean", "weakly", "nil", "weak nil", "unique"))


def cmd_certify(args):
    ring = _ring(args)
    if args.element is None:
        raise _UsageError("--element is required")
    flavor = as_flavor(args.flavor)
    restrict = _ideal(ring, args) if args.restricted else None
    cert = decompose(Elem(ring, ring.parse(args.element)), flavor, restrict_to=restrict)
    if cert is None:
        msg = {"ring": str(ring.spec), "x": ring.display(ring.parse(args.element)),
               "flavor": flavor.value, "certificate": None}
        return EXIT_FALSE, _dump(msg) if args.format == "json" else f"no {flavor.value} decomposition"
    if args.format == "json":
        return EXIT_TRUE, _dump(cert.to_dict())
    d = cert.to_dict()
    sign = "+" if d["sign"] == 1 else "-"
    return EXIT_TRUE, f"{d['x']} = {sign}{d['e']} + {d['w']}  ({d['flavor']}, commuting={d['commuting']})"


def cmd_verify(args):
    source = args.file
    text = sys.stdin.read() if source in (None, "-") else open(source).read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RingError(f"malformed certificate: {exc}") from None
    if not isinstance(data, dict):
        raise RingError("malformed certificate: expected a JSON object")
    ok = verify_certificate(data, args.cap, load_config(args.config))
    if args.format == "json":
        return (EXIT_TRUE if ok else EXIT_FALSE), _dump({"valid": ok})
    return (EXIT_TRUE if ok else EXIT_FALSE), "valid" if ok else "invalid"


def _corpus_config(args) -> CorpusConfig:
    config = CorpusConfig.load(args.corpus)
    if args.cap != DEFAULT_SIZE_CAP:
        config.ring_cap = args.cap
    return config


def cmd_theorems(args):
    ids = args.statement or sorted(CATALOG)
    for i in ids:
        if i not in CATALOG:
            raise _UsageError(f"unknown statement {i!r}; known: {', '.join(sorted(CATALOG))}")
    corpus = build_corpus(_corpus_config(args))
    if args.jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(lambda i: run_statement(i, corpus), ids))
    else:
        reports = [run_statement(i, corpus) for i in ids]
    status = EXIT_TRUE if all(r.passed for r in reports) else EXIT_FALSE
    if args.format == "json":
        payload = {"corpus_size": len(corpus), "reports": [r.to_dict() for r in reports]}
        return status, _dump(payload)
    rows = [(r.statement, r.verdict, r.instances, r.vacuous, r.counterexample_count, f"{r.wall_time:.2f}s")
            for r in reports]
    text = _table(rows, ("statement", "verdict", "instances", "vacuous", "counterexamples", "time"))
    for r in reports:
        for c in r.counterexamples[:3]:
            text += f"\n{r.statement}: {json.dumps(c, sort_keys=True)}"
    return status, text


def cmd_corpus_info(args):
    corpus = build_corpus(_corpus_config(args))
    rows = [{"ring": e.label, "size": e.ring.size, "ideals": len(e.ideals)} for e in corpus]
    if args.format == "json":
        return EXIT_TRUE, _dump({"rings": rows, "count": len(rows)})
    body = _table([(r["ring"], r["size"], r["ideals"]) for r in rows], ("ring", "size", "ideals"))
    return EXIT_TRUE, f"{body}\n{len(rows)} rings"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP, help="maximum ring size")
    common.add_argument("--config", help="JSON file with named modules and pairings")

    ring_flags = argparse.ArgumentParser(add_help=False)
    ring_flags.add_argument("--ring", help='ring expression, e.g. "Z6" or "T2(Z4)"')
    ring_flags.add_argument("--gens", help="comma separated ideal generators")
    ring_flags.add_argument("--restricted", action="store_true",
                            help="require the idempotent and nilpotent parts to lie in the ideal")
    flavors = [f.value for f in Flavor]

    p = argparse.ArgumentParser(prog="nilclean", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify-ring", parents=[common, ring_flags], help="classify a whole ring")
    s.add_argument("--flavor", choices=flavors + ["all"], default="weak_nil_clean")
    s = sub.add_parser("classify-ideal", parents=[common, ring_flags], help="classify an ideal")
    s.add_argument("--flavor", choices=flavors + ["all"], default="weak_nil_clean")
    s = sub.add_parser("ideals", parents=[common, ring_flags], help="list all ideals with their profile")
    s.add_argument("--lattice-cap", type=int, default=256)
    s = sub.add_parser("certify", parents=[common, ring_flags], help="emit a decomposition certificate")
    s.add_argument("--element", help="element to decompose")
    s.add_argument("--flavor", choices=flavors, default="weak_nil_clean")
    s = sub.add_parser("verify-cert", parents=[common], help="re-check a certificate (file or stdin)")
    s.add_argument("file", nargs="?", default="-")
    s = sub.add_parser("theorems", parents=[common], help="check catalog statements over a corpus")
    s.add_argument("--statement", action="append", help="statement id (repeatable); default all")
    s.add_argument("--corpus", default="default", help="'default' or a JSON corpus config")
    s.add_argument("--jobs", type=int, default=1)
    s = sub.add_parser("corpus-info", parents=[common], help="list the rings of a corpus")
    s.add_argument("--corpus", default="default")
    return p


def dispatch(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "classify-ring": lambda a: cmd_classify(a, whole=True),
        "classify-ideal": lambda a: cmd_classify(a, whole=False),
        "ideals": cmd_ideals,
        "certify": cmd_certify,
        "verify-cert": cmd_verify,
        "theorems": cmd_theorems,
        "corpus-info": cmd_corpus_info,
    }
    try:
        status, text = handlers[args.command](args)
    except (_UsageError, RingError, OSError, KeyError, TypeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"nilclean {args.command}: error: {msg}", file=stderr)
        return EXIT_USAGE
    stdout.write(text + "\n")
    stdout.flush()
    return status


def main() -> None:
    sys.exit(dispatch())
