"""Command-line front end: ``delsarte <subcommand> ...``.

Exit status is 0 on success, 1 when the input fails validation and 2 on
usage errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import catalog
from .characters import DEFAULT_CAP, enumerate_aset, find_alpha0
from .core import DelsarteThreefold, WeightSystem, from_fermat, from_quasidiagonal, validate
from .errors import DelsarteError
from .height import format_height, height, reduce_alpha0, spectrum

FORMATS = ("table", "json", "csv")
FAMILIES = ("fermat", "quasidiagonal")


class ValidationFailure(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_input(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--fermat", type=_ints, metavar="Q", help="weights of a Fermat-type threefold")
    g.add_argument("--quasidiagonal", type=_ints, metavar="Q", help="weights of a quasi-diagonal threefold")
    g.add_argument("--input", type=Path, metavar="FILE", help="threefold document (JSON)")
    p.add_argument("--degree", type=int, help="degree m (default: sum of the weights)")
    p.add_argument("--exponents", type=_ints, metavar="M", help="exponents m_0..m_4 for --quasidiagonal")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="table")


def _threefold(args) -> DelsarteThreefold:
    if args.input is not None:
        try:
            text = args.input.read_text()
        except OSError as exc:
            raise ValidationFailure(f"cannot read {args.input}: {exc.strerror}") from None
        return DelsarteThreefold.from_json(text)
    q = args.fermat or args.quasidiagonal
    ws = WeightSystem(q, args.degree if args.degree is not None else sum(q))
    if args.fermat is not None:
        return from_fermat(ws)
    return from_quasidiagonal(ws, args.exponents)


def _checked(args, p: Optional[int] = None) -> DelsarteThreefold:
    x = _threefold(args)
    report = validate(x, p)
    if not report.ok:
        raise ValidationFailure("; ".join(report.violations))
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    return x


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(payload) -> str:
    return json.dumps(payload, indent=1, sort_keys=True) + "\n"


def cmd_height(args) -> str:
    x = _checked(args, args.p)
    res = height(x, args.p, cap=args.cap)
    doc = dict(res.to_dict(), p=args.p)
    if x.reference_hodge or catalog.REFERENCE_HODGE.get((x.family, x.weights.weights)):
        h11, h12 = x.reference_hodge or catalog.REFERENCE_HODGE[(x.family, x.weights.weights)]
        doc["mirror_obstruction"] = catalog.mirror_obstruction_flag(res.height, h11, h12)
    if args.format == "json":
        return _json(doc)
    wit = (" ".join(map(str, res.norms)) if res.finite
           else f"index {res.failing_index} norm {res.failing_norm}")
    if args.format == "csv":
        return _csv(["p", "residue", "d_A", "f_A", "height", "witness"],
                    [[args.p, res.residue, res.d_A, res.order, format_height(res.height), wit]])
    lines = [f"p = {args.p}, residue {res.residue} mod d_A = {res.d_A}, f_A = {res.order}",
             f"height: {format_height(res.height)}"]
    lines.append(f"orbit norms: {wit}" if res.finite else f"first failing orbit {wit}")
    if "mirror_obstruction" in doc:
        lines.append(f"mirror obstruction: {'yes' if doc['mirror_obstruction'] else 'no'}")
    return "\n".join(lines) + "\n"


def cmd_spectrum(args) -> str:
    x = _checked(args)
    sp = spectrum(reduce_alpha0(find_alpha0(x, args.cap)))
    doc = sp.to_dict(full=args.full)
    if args.format == "json":
        return _json(doc)
    if args.format == "csv":
        return _csv(["residue", "height"], [[t, format_height(h)] for t, h in sp.heights.items()])
    lines = [f"d_A = {sp.d_A}, alpha_A = {sp.alpha_A}, phi = {sp.phi}",
             f"{'height':>8}  {'classes':>7}  residues"]
    for g in doc["groups"]:
        shown = g["residues"] if args.full else g["representatives"]
        more = "" if args.full or g["count"] <= len(shown) else ", ..."
        lines.append(f"{g['height']!s:>8}  {g['count']:>7}  {', '.join(map(str, shown))}{more}")
    return "\n".join(lines) + "\n"


def cmd_aset(args) -> str:
    x = _checked(args)
    cs = enumerate_aset(x, args.cap, keep=False)
    doc = cs.summary()
    if args.format == "json":
        return _json(doc)
    if args.format == "csv":
        return _csv(["modulus", "count", "norm0", "norm1", "norm2", "norm3"],
                    [[cs.modulus, cs.count, *cs.graded_counts]])
    return (f"modulus d = {cs.modulus}\nmembers: {cs.count}\n"
            f"graded counts (norm 0..3): {' '.join(map(str, cs.graded_counts))}\n")


def cmd_reduce(args) -> str:
    x = _checked(args)
    a0 = find_alpha0(x, args.cap)
    rc = reduce_alpha0(a0)
    doc = {"d": x.d, "alpha_0": list(a0.entries), "e": rc.e, "d_A": rc.d_A, "alpha_A": list(rc.alpha_A)}
    if args.format == "json":
        return _json(doc)
    if args.format == "csv":
        return _csv(["d", "alpha_0", "e", "d_A", "alpha_A"],
                    [[x.d, " ".join(map(str, a0.entries)), rc.e, rc.d_A, " ".join(map(str, rc.alpha_A))]])
    return (f"d = {x.d}\nalpha_0 = {a0.entries}\ne = {rc.e}\n"
            f"d_A = {rc.d_A}\nalpha_A = {rc.alpha_A}\n")


def _records(args) -> list[catalog.WeightRecord]:
    return catalog.catalog_records(args.family, args.normalization)


def cmd_enumerate(args) -> str:
    recs = _records(args)
    doc = {"family": args.family, "count": len(recs), "records": [r.to_dict() for r in recs]}
    if args.output:
        args.output.write_text(_json(doc))
    if args.format == "json":
        return _json(doc)
    rows = [[r.family, " ".join(map(str, r.weights)), r.degree,
             " ".join(map(str, r.exponents)) if r.exponents else "", r.d_A] for r in recs]
    if args.format == "csv":
        return _csv(["family", "weights", "m", "exponents", "d_A"], rows)
    lines = [f"{len(recs)} weight systems ({args.family})"]
    lines += [f"{row[2]:>6}  ({row[1].replace(' ', ', ')})" + (f"  exponents {row[3]}" if row[3] else "")
              for row in rows]
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> str:
    hs = catalog.classify_finite_heights(_records(args))
    if args.format == "json":
        return _json({"family": args.family, "finite_heights": hs})
    if args.format == "csv":
        return _csv(["height"], [[h] for h in hs])
    return f"finite heights ({args.family}, {len(hs)} values): {', '.join(map(str, hs))}\n"


def cmd_atlas_build(args) -> str:
    atlas = catalog.build_atlas(_records(args), args.family)
    path = catalog.save_atlas(atlas, args.output or catalog.default_atlas_path(args.family))
    if args.csv:
        args.csv.write_text(catalog.spectra_csv(atlas))
    doc = {"path": str(path), "records": len(atlas.records), "finite_heights": atlas.finite_heights}
    if args.format == "json":
        return _json(doc)
    if args.format == "csv":
        return _csv(["path", "records", "finite_heights"],
                    [[path, len(atlas.records), " ".join(map(str, atlas.finite_heights))]])
    return f"wrote {path}: {len(atlas.records)} records, finite heights {atlas.finite_heights}\n"


def cmd_atlas_diff(args) -> str:
    diffs = catalog.diff_atlases(catalog.load_atlas(args.first), catalog.load_atlas(args.second))
    if args.format == "json":
        return _json({"identical": not diffs, "differences": diffs})
    if args.format == "csv":
        return _csv(["difference"], [[d] for d in diffs])
    return "atlases are identical\n" if not diffs else "\n".join(diffs) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="delsarte",
                                     description="Formal group heights of Delsarte Calabi-Yau threefolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, needs_input=True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if needs_input:
            _add_input(p)
            p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest character group to enumerate")
        _add_format(p)
        p.set_defaults(func=fn)
        return p

    p = add("height", cmd_height, "height in characteristic p")
    p.add_argument("-p", type=int, required=True, help="the characteristic")
    p = add("spectrum", cmd_spectrum, "height of every residue class mod d_A")
    p.add_argument("--full", action="store_true", help="list every residue, not just representatives")
    add("aset", cmd_aset, "character set summary")
    add("reduce", cmd_reduce, "norm-zero character and its reduction")

    for name, fn, help in (("enumerate", cmd_enumerate, "list a weight-system catalog"),
                           ("classify", cmd_classify, "finite heights over a catalog")):
        p = add(name, fn, help, needs_input=False)
        p.add_argument("family", choices=FAMILIES)
        p.add_argument("--normalization", choices=("sorted", "chain"), default="sorted")
        if name == "enumerate":
            p.add_argument("--output", type=Path, help="also write the catalog as JSON")

    atlas = sub.add_parser("atlas", help="build or compare persisted atlases")
    asub = atlas.add_subparsers(dest="action", required=True)
    b = asub.add_parser("build", help="classify a catalog and save the atlas")
    b.add_argument("family", choices=FAMILIES)
    b.add_argument("--normalization", choices=("sorted", "chain"), default="sorted")
    b.add_argument("--output", type=Path, help=f"atlas path (default: ${catalog.ATLAS_DIR_ENV}/atlas-FAMILY.json)")
    b.add_argument("--csv", type=Path, help="also export the spectra as CSV")
    _add_format(b)
    b.set_defaults(func=cmd_atlas_build)
    d = asub.add_parser("diff", help="compare two atlas files")
    d.add_argument("first", type=Path)
    d.add_argument("second", type=Path)
    _add_format(d)
    d.set_defaults(func=cmd_atlas_diff)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "exponents", None) and not getattr(args, "quasidiagonal", None):
            parser.error("--exponents only applies to --quasidiagonal")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out.write(args.func(args))
    except (ValidationFailure, DelsarteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
