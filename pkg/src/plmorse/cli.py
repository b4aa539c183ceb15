"""Command-line entry point: ``plmorse <command> <input> ...``.

Exit codes: 0 on success, 1 when a certificate fails (classifier
disagreement, invalid or cyclic field, non-RP field, inexact
correspondence), 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
import time
from pathlib import Path

from . import io
from .correspond import correspondence, verify_correspondence
from .errors import PLMorseError
from .gvf import check_relative_perfectness, check_weak_morse, is_acyclic, morse_profile, validate_matching
from .homology import Field
from .plcrit import classify_all
from .rpbuild import build_rp_gradient
from .simplicial import VertexScalarField, is_combinatorial_manifold

log = logging.getLogger("plmorse")


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=["gf2", "rational"], default="gf2", help="coefficient field (default gf2)")
    common.add_argument("--format", choices=["json", "off"], help="input format (default: by extension)")
    common.add_argument("--values", help="values sidecar for OFF input (default: <input>.vals)")
    common.add_argument("--check-manifold", action="store_true", help="fail fast when the input is not a combinatorial manifold")
    common.add_argument("--seed", type=int, help="replace the values by a random injective function drawn with this seed")
    common.add_argument("--timings", action="store_true", help="add wall-clock timings to the report")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")
    common.add_argument("-q", "--quiet", action="store_true", help="print nothing on stdout except the requested output file")

    p = argparse.ArgumentParser(prog="plmorse", description="PL critical points and relatively perfect gradient fields.")
    sub = p.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("classify", parents=[common], help="classify vertices with every applicable definition")
    sp.add_argument("input")
    sp = sub.add_parser("build", parents=[common], help="build a relatively perfect gradient field")
    sp.add_argument("input")
    sp = sub.add_parser("verify", parents=[common], help="check a gradient field against the input")
    sp.add_argument("input")
    sp.add_argument("gradient")
    sp = sub.add_parser("correspond", parents=[common], help="match PL critical vertices with critical simplices")
    sp.add_argument("input")
    sp.add_argument("gradient", nargs="?")
    sp = sub.add_parser("export", parents=[common], help="export a mesh coloured by critical type")
    sp.add_argument("input")
    sp.add_argument("gradient", nargs="?")
    return p


def _load(args):
    doc = io.load_complex(args.input, args.format, args.values)
    if args.seed is not None:
        rng = random.Random(args.seed)
        vals = [float(i) for i in range(len(doc.values))]
        rng.shuffle(vals)
        doc.values = vals
    K, f = doc.complex(), doc.field()
    if args.check_manifold:
        res = is_combinatorial_manifold(K)
        if not res:
            raise PLMorseError(f"not a combinatorial manifold at vertex {res.vertex}: {res.reason}")
    return doc, K, f


def _emit(args, payload: bytes) -> None:
    if args.output:
        Path(args.output).write_bytes(payload)
    elif not args.quiet:
        sys.stdout.write(payload.decode("utf-8"))


def _run(args) -> int:
    timings: dict[str, float] = {}
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        timings[name] = round(now - clock, 6)
        clock = now

    doc, K, f = _load(args)
    field = Field.coerce(args.field)
    lap("load")
    report: dict = {"input": doc.name, "field": field.value}
    status = 0

    if args.command == "classify":
        rep = classify_all(K, f, field, check_manifold=args.check_manifold)
        report["classification"] = io.classification_json(rep)
        status = 0 if rep.agree else 1
        lap("classify")
    elif args.command == "build":
        V = build_rp_gradient(K, f)
        lap("build")
        _emit(args, io.dump_field(V))
        log.info("built %d pairs, m = %s", len(V), morse_profile(K, f, V).m)
        return 0
    elif args.command == "verify":
        V = io.parse_field(Path(args.gradient).read_bytes())
        violations = validate_matching(K, V)
        report["violations"] = [v.message for v in violations]
        if violations:
            status = 1
        else:
            acyc = is_acyclic(K, V)
            report["acyclic"] = acyc.acyclic
            if acyc.witness:
                report["closed_path"] = [[list(a), list(b)] for a, b in acyc.witness]
            report["field"] = io.field_json(V, morse_profile(K, f, V), K)
            report["weak_morse"] = io.weak_morse_json(check_weak_morse(K, V, field))
            cert = check_relative_perfectness(K, f, V, field)
            report["certificate"] = io.certificate_json(cert)
            for x in cert.mismatches:
                log.warning("not RP: %s", x.describe())
            status = 0 if acyc.acyclic and cert.is_rp else 1
        lap("verify")
    elif args.command == "correspond":
        V = io.parse_field(Path(args.gradient).read_bytes()) if args.gradient else build_rp_gradient(K, f)
        bad = validate_matching(K, V)
        if bad or not is_acyclic(K, V):
            report["violations"] = [v.message for v in bad] or ["field has a closed V-path"]
            status = 1
        else:
            cmap = correspondence(K, f, V, field)
            rep = classify_all(K, f, field)
            problems = verify_correspondence(cmap, rep.is_pl_morse())
            report["correspondence"] = io.correspondence_json(cmap)
            report["problems"] = problems
            status = 0 if not problems else 1
        lap("correspond")
    elif args.command == "export":
        rep = classify_all(K, f, field, check_manifold=args.check_manifold)
        if args.gradient:
            V = io.parse_field(Path(args.gradient).read_bytes())
        else:
            V = None if rep.skipped else build_rp_gradient(K, f)
        _emit(args, io.export_colored_mesh(doc, rep, V))
        return 0

    if args.timings:
        report["timings"] = timings
    _emit(args, io.emit_report(report))
    return status


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING, format="%(message)s")
    try:
        return _run(args)
    except (PLMorseError, OSError) as exc:
        print(f"plmorse: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
