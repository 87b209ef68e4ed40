"""Command line front end.

Subcommands: classify, h1, epis, cover, index, involutions, table, verify.
Output is text by default, JSON with --format json; both are stable across
runs.  Exit codes: 0 success, 1 invalid input, 2 verification mismatch.
verify honors NILBU_THREADS (0 = auto, default sequential).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .bu_index import (cup_cube_nonzero, index_is_one, index_one_case,
                       index_report, index_three_case, z2_index)
from .coverings import (CoveringDescriptor, double_cover,
                        expected_quotient_diagram, quotients_of, verify_cover)
from .epimorphisms import (char_for, enumerate_epis, equivalence_classes,
                           expected_epi_count, expected_partition_shape,
                           validate_char)
from .homology import (AbelianGroup, h1, h1_closed_form, h1_stated_relations,
                       mod2_rank)
from .seifert import (NilError, NilManifold, ParseError, b_min, cd_invariants,
                      euler_number, family_rows, parse_manifold, sweep,
                      _expand_pairs)


class _Parser(argparse.ArgumentParser):
    # invalid input exits 1, per the interface contract (argparse default is 2)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _group_text(g: AbelianGroup) -> str:
    parts = []
    if g.free_rank == 1:
        parts.append("Z")
    elif g.free_rank > 1:
        parts.append("Z^%d" % g.free_rank)
    parts.extend("Z_%d" % d for d in g.torsion)
    return " + ".join(parts) if parts else "0"


def _emit(args, lines, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        for line in lines:
            print(line)


def _parse_phi(m: NilManifold, text: str):
    text = text.strip()
    try:
        idx = int(text)
    except ValueError:
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as err:
            raise ParseError("--phi must be an index or a JSON object: %s" % err) from err
        if not isinstance(obj, dict):
            raise ParseError("--phi JSON must be an object with keys s, v, h")
        phi = char_for(m, tuple(obj.get("s", ())), tuple(obj.get("v", ())),
                       int(obj.get("h", 0)))
        return validate_char(m, phi)
    epis = enumerate_epis(m)
    if not 0 <= idx < len(epis):
        raise ParseError("phi index %d out of range 0..%d" % (idx, len(epis) - 1))
    return epis[idx]


def cmd_classify(args) -> int:
    m = parse_manifold(args.manifold)
    inv = m.seifert()
    c, d, _ = cd_invariants(inv)
    lines = [m.encode(),
             "  seifert: %s" % inv.encode(),
             "  e = %s" % euler_number(inv),
             "  c = %d  d = %d  b_min = %d" % (c, d, b_min(inv.pairs))]
    obj = {"manifold": m.encode(), "seifert": inv.encode(),
           "e": str(euler_number(inv)), "c": c, "d": d,
           "b_min": b_min(inv.pairs)}
    _emit(args, lines, obj)
    return 0


def cmd_h1(args) -> int:
    m = parse_manifold(args.manifold)
    g = h1(m)
    lines = ["H1(%s) = %s" % (m.encode(), _group_text(g))]
    for name, coords in g.gen_images.items():
        lines.append("  %s -> (%s)" % (name, ", ".join(map(str, coords))))
    obj = {"manifold": m.encode(), "h1": g.to_json_dict()}
    _emit(args, lines, obj)
    return 0


def cmd_epis(args) -> int:
    m = parse_manifold(args.manifold)
    epis = enumerate_epis(m)
    part = equivalence_classes(m)
    index_of = {phi.bits: i for i, phi in enumerate(epis)}
    lines = ["%s: %d epimorphisms, %d classes"
             % (m.encode(), len(epis), len(part.classes))]
    for i, phi in enumerate(epis):
        lines.append("  [%d] %s" % (i, phi.describe()))
    classes_json = []
    for k, cls in enumerate(part.classes):
        members = [index_of[c.bits] for c in cls.members]
        lines.append("  class %d (size %d): members %s"
                     % (k, cls.size, members))
        classes_json.append({"size": cls.size,
                             "representative": cls.representative.to_json_dict(),
                             "members": members})
    obj = {"manifold": m.encode(), "count": len(epis),
           "epimorphisms": [phi.to_json_dict() for phi in epis],
           "classes": classes_json}
    _emit(args, lines, obj)
    return 0


def cmd_cover(args) -> int:
    m = parse_manifold(args.manifold)
    phi = _parse_phi(m, args.phi)
    cover = double_cover(m, phi)
    desc = CoveringDescriptor(m, phi, cover, z2_index(m, phi))
    checked = verify_cover(m, phi, cover)
    lines = ["base:  %s" % m.encode(),
             "phi:   %s" % phi.describe(),
             "cover: %s" % cover.encode(),
             "index: %d" % desc.index,
             "oracle: %s" % ("ok" if checked else "MISMATCH")]
    obj = dict(desc.to_json_dict(), verified=checked)
    _emit(args, lines, obj)
    return 0 if checked else 2


def cmd_index(args) -> int:
    m = parse_manifold(args.manifold)
    phi = _parse_phi(m, args.phi)
    report = index_report(m, phi)
    lines = ["index(%s, %s) = %d" % (m.encode(), phi.describe(), report["index"]),
             "  kills torsion: %s" % ("yes" if report["kills_torsion"] else "no"),
             "  cup cube nonzero: %s" % ("yes" if report["cup_cube_nonzero"] else "no")]
    if report["catalog"]:
        lines.append("  catalog: %s" % report["catalog"])
    _emit(args, lines, report)
    return 0


def cmd_involutions(args) -> int:
    m = parse_manifold(args.manifold)
    quotients = quotients_of(m)
    obj = {"cover": m.encode(),
           "quotients": [d.to_json_dict() for d in quotients]}
    lines = ["cover: %s" % m.encode()]
    if not quotients:
        note = "none: not a double cover of any manifold in this geometry"
        lines.append("free involutions: %s" % note)
        obj["note"] = note
    else:
        lines.append("free involutions: %d" % len(quotients))
        base_w = max(len(d.base.encode()) for d in quotients)
        phi_w = max(len(d.phi.describe()) for d in quotients)
        lines.append("  %-*s  %-*s  index" % (base_w, "base", phi_w, "phi"))
        for d in quotients:
            lines.append("  %-*s  %-*s  %d"
                         % (base_w, d.base.encode(), phi_w, d.phi.describe(),
                            d.index))
    _emit(args, lines, obj)
    return 0


def _c_formula(slope: int, intercept: int) -> str:
    head = "b" if slope == 1 else "%db" % slope
    if intercept:
        return "%s%+d" % (head, intercept)
    return head


def cmd_table(args) -> int:
    rows_json = []
    lines = ["%-12s  %-8s  %s  %s" % ("family", "c", "d", "b_min")]
    rows = []
    for family, betas in family_rows():
        lo = b_min(_expand_pairs(family, betas))
        probe = NilManifold(family, lo, betas)
        c0, d, a = cd_invariants(probe.seifert())
        intercept = c0 - a * lo
        pattern = probe.encode().replace("(%d" % lo, "(b", 1)
        lines.append("%-12s  %-8s  %d  %d"
                     % (pattern, _c_formula(a, intercept), d, lo))
        rows.append((family, betas, lo))
        rows_json.append({"family": family, "betas": list(betas),
                          "c_slope": a, "c_intercept": intercept,
                          "d": d, "b_min": lo})
    entries_json = []
    lines.append("")
    lines.append("%-12s  %-5s  %s  %-6s  %s" % ("manifold", "c", "d", "e", "h1"))
    for family, betas, lo in rows:
        for b in range(lo, lo + args.b_max + 1):
            m = NilManifold(family, b, betas)
            c, d, _ = cd_invariants(m.seifert())
            e = euler_number(m.seifert())
            g = h1(m)
            lines.append("%-12s  %-5d  %d  %-6s  %s"
                         % (m.encode(), c, d, e, _group_text(g)))
            entries_json.append({"manifold": m.encode(), "c": c, "d": d,
                                 "e": str(e), "free_rank": g.free_rank,
                                 "torsion": list(g.torsion)})
    _emit(args, lines, {"rows": rows_json, "entries": entries_json})
    return 0


def _verify_manifold(m: NilManifold) -> dict:
    failures = []
    tag = m.encode()
    group = h1(m)
    if group.decomposition != h1_closed_form(m):
        failures.append("%s: h1 %r does not match closed form %r"
                        % (tag, group.decomposition, h1_closed_form(m)))
    for rel in h1_stated_relations(m):
        if not group.is_zero_combination(rel):
            failures.append("%s: stated relation %r fails in H1" % (tag, rel))
    epis = enumerate_epis(m)
    if len(epis) != expected_epi_count(m):
        failures.append("%s: %d epimorphisms, expected %d"
                        % (tag, len(epis), expected_epi_count(m)))
    if len(epis) != 2 ** mod2_rank(group) - 1:
        failures.append("%s: epi count disagrees with mod-2 rank" % tag)
    part = equivalence_classes(m)
    if part.shape != expected_partition_shape(m):
        failures.append("%s: partition shape %r, expected %r"
                        % (tag, part.shape, expected_partition_shape(m)))
    for cls in part.classes:
        covers = {double_cover(m, phi) for phi in cls.members}
        if len(covers) != 1:
            failures.append("%s: class %s has several covers %r"
                            % (tag, cls.representative.describe(), covers))
        indices = {z2_index(m, phi) for phi in cls.members}
        if len(indices) != 1:
            failures.append("%s: class %s has several indices %r"
                            % (tag, cls.representative.describe(), indices))
    pairs = 0
    for phi in epis:
        pairs += 1
        cover = double_cover(m, phi)
        if not verify_cover(m, phi, cover):
            failures.append("%s: oracle rejects cover %s for %s"
                            % (tag, cover.encode(), phi.describe()))
        if index_is_one(m, phi) != (index_one_case(m, phi) is not None):
            failures.append("%s: index-1 criterion vs catalog mismatch for %s"
                            % (tag, phi.describe()))
        if cup_cube_nonzero(m, phi) != (index_three_case(m, phi) is not None):
            failures.append("%s: index-3 criterion vs catalog mismatch for %s"
                            % (tag, phi.describe()))
    got = [(d.base, d.index) for d in quotients_of(m)]
    expected = list(expected_quotient_diagram(m))
    if got != expected:
        failures.append("%s: involution diagram %r, expected %r"
                        % (tag, [(b.encode(), i) for b, i in got],
                           [(b.encode(), i) for b, i in expected]))
    return {"manifold": tag, "pairs": pairs, "failures": failures}


def _thread_count() -> int:
    raw = os.environ.get("NILBU_THREADS", "")
    if raw.strip() == "":
        return 1
    n = int(raw)
    if n == 0:
        return os.cpu_count() or 1
    if n < 1:
        raise ParseError("NILBU_THREADS must be >= 0")
    return n


def cmd_verify(args) -> int:
    manifolds = list(sweep(args.b_max))
    threads = _thread_count()
    if threads == 1:
        results = [_verify_manifold(m) for m in manifolds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_verify_manifold, manifolds))
    failures = [line for r in results for line in r["failures"]]
    pairs = sum(r["pairs"] for r in results)
    lines = list(failures)
    lines.append("verified %d manifolds, %d (manifold, phi) pairs, depth %d"
                 % (len(manifolds), pairs, args.b_max))
    lines.append("FAILURES: %d" % len(failures) if failures else "OK")
    obj = {"manifolds": len(manifolds), "pairs": pairs,
           "failures": failures, "ok": not failures}
    _emit(args, lines, obj)
    return 2 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default text)")
    parser = _Parser(prog="nilbu",
                     description="Nil Seifert manifolds: homology, double "
                                 "covers, Borsuk-Ulam indices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="normalize and name a Seifert invariant")
    p.add_argument("manifold", help="SF(...) or family encoding")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("h1", parents=[common], help="first homology")
    p.add_argument("manifold")
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("epis", parents=[common],
                       help="Z2-epimorphisms and their equivalence classes")
    p.add_argument("manifold")
    p.set_defaults(func=cmd_epis)

    p = sub.add_parser("cover", parents=[common],
                       help="double cover cut out by an epimorphism")
    p.add_argument("manifold")
    p.add_argument("--phi", required=True,
                   help="epimorphism: index into epis order, or JSON "
                        "{\"s\":[...],\"v\":[...],\"h\":0|1}")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("index", parents=[common],
                       help="Z2-index of (manifold, phi) with criterion trace")
    p.add_argument("manifold")
    p.add_argument("--phi", required=True)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("involutions", parents=[common],
                       help="all free involutions with this double cover")
    p.add_argument("manifold")
    p.set_defaults(func=cmd_involutions)

    p = sub.add_parser("table", parents=[common],
                       help="the family table: c, d, b_min, plus entries")
    p.add_argument("--b-max", type=int, default=16,
                   help="entries run b_min..b_min+k per family (default 16)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common],
                       help="full cross-check sweep (oracle, partitions, "
                            "indices, involution diagrams)")
    p.add_argument("--b-max", type=int, default=16)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NilError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
