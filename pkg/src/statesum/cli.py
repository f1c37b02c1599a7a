"""Command line front end.

    statesum invariant --builtin 'lens(3,1)' --hopf 'ZmodGroupAlgebra(3)'
    statesum invariant --builtin l31_connsum_s2xs1 --hopf 'ZmodGroupAlgebra(2)' --method both
    statesum check identities --hopf 'ZmodGroupAlgebra(4)'
    statesum check duality --graph figure6 --hopf 'ZmodGroupAlgebra(2)'
    statesum check oracle --builtin 'lens(5,2)' --group S3

Exit codes: 0 success, 2 bad input, 3 resource cap exceeded, 4 a check or
cross-check failed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Optional

from . import graphdual, heegaard, identities, kuperberg, planar
from .groups import GroupTableError, group_by_name
from .heegaard import EnumerationCapError, HeegaardError
from .hopf import CATALOG, HopfAlgebra, NotSemisimpleError, StructureError, builtin_hopf, check_axioms, group_algebra
from .scalars import QQ, DeltaComponentError, ModP, PrimeField
from .tensor import ContractionTooLarge

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE, EXIT_MISMATCH = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()[:16]


def _fmt(x) -> str:
    if isinstance(x, ModP):
        return str(x.value)
    if isinstance(x, Fraction):
        return "%d/%d" % (x.numerator, x.denominator) if x.denominator != 1 else str(x.numerator)
    return str(x)


def _decimal(x) -> Optional[str]:
    if isinstance(x, (int, Fraction)):
        return "%.12g" % float(x)
    return None


# ---------------------------------------------------------------------------
# loading inputs


def _ring(spec: str):
    spec = spec.strip()
    if spec in ("Q", "QQ"):
        return QQ
    if spec.upper().startswith("F"):
        try:
            return PrimeField(int(spec[1:].lstrip(":")))
        except ValueError as exc:
            raise InputError("bad ring %r: %s" % (spec, exc))
    raise InputError("unknown ring %r (use Q or F<p>)" % spec)


def load_hopf(spec: str, ring=QQ) -> HopfAlgebra:
    if os.path.exists(spec):
        try:
            with open(spec) as fh:
                return HopfAlgebra.from_json(json.load(fh))
        except (ValueError, KeyError, TypeError, StructureError) as exc:
            raise InputError("cannot read Hopf algebra from %s: %s" % (spec, exc))
    try:
        return builtin_hopf(spec, ring)
    except KeyError as exc:
        raise InputError(str(exc.args[0]))


def load_diagram(builtin: Optional[str], path: Optional[str]):
    """Returns (name, code, planar diagram or None)."""
    if bool(builtin) == bool(path):
        raise InputError("give exactly one of --builtin and --diagram")
    try:
        if builtin:
            code = heegaard.builtin(builtin)
            try:
                phd = heegaard.builtin_planar(builtin)
            except HeegaardError:
                phd = None
            return builtin, code, phd
        with open(path) as fh:
            obj = json.load(fh)
        if "boxes" in obj:
            phd = heegaard.PlanarHeegaardDiagram.from_json(obj)
            return path, heegaard.derive_code(phd), phd
        code = heegaard.HeegaardCode.from_json(obj)
        heegaard.validate(code)
        return path, code, None
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(str(exc))


def load_graph(spec: str):
    if spec == "figure6":
        return graphdual.figure6()
    if spec.startswith("ngon(") and spec.endswith(")"):
        return graphdual.ngon(int(spec[5:-1]))
    try:
        with open(spec) as fh:
            return graphdual.SphericalGraph.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError("cannot read graph %s: %s" % (spec, exc))


# ---------------------------------------------------------------------------
# commands


def cmd_invariant(args) -> tuple:
    ring = _ring(args.ring)
    H = load_hopf(args.hopf, ring)
    name, code, phd = load_diagram(args.builtin, args.diagram)
    report = {"command": "invariant",
              "inputs": {"diagram": name, "diagram_digest": _digest(code.to_json()),
                         "hopf": H.name or args.hopf, "hopf_digest": _digest(H.to_json()),
                         "method": args.method},
              "results": {}}
    res = report["results"]
    status = EXIT_OK
    if args.method in ("kuperberg", "both"):
        r = kuperberg.invariant(code, H)
        res["kuperberg"] = _fmt(r.value)
        res["diagnostics"] = r.diagnostics()
    if args.method in ("planar", "both"):
        if phd is None:
            raise InputError("the planar method needs a planar diagram")
        res["planar"] = _fmt(planar.planar_invariant(phd, H))
    if args.method == "both":
        res["agree"] = res["kuperberg"] == res["planar"]
        if not res["agree"]:
            status = EXIT_MISMATCH
    value = res.get("kuperberg", res.get("planar"))
    res["value"] = value
    if args.decimal:
        r = kuperberg.invariant(code, H).value if "kuperberg" in res else planar.planar_invariant(phd, H)
        approx = _decimal(r)
        if approx is not None:
            res["decimal_approximation"] = approx
    return report, status


def _suite_hopf_axioms(target: str, ring_spec: str) -> dict:
    H = load_hopf(target, _ring(ring_spec))
    out = []
    for K in (H, H.dual()):
        rep = check_axioms(K)
        out.append({"algebra": K.name, "ok": rep.ok, "checks": [[n, ok] for n, ok, _ in rep.results]})
    return {"target": target, "ok": all(o["ok"] for o in out), "details": out}


def _suite_identities(target: str, ring_spec: str, seed: int) -> dict:
    H = load_hopf(target, _ring(ring_spec))
    out = []
    for K in (H, H.dual()):
        rep = identities.check_identities(K, seed=seed)
        checks = [[n, ok] for n, ok, _ in rep.results]
        for n in range(1, 5):
            checks.append(["ngon_%d" % n, identities.ngon_check(n, K)])
        out.append({"algebra": K.name, "ok": all(c[1] for c in checks), "checks": checks})
    return {"target": target, "ok": all(o["ok"] for o in out), "details": out}


def _suite_duality(graph: str, target: str, ring_spec: str, seed: int) -> dict:
    H = load_hopf(target, _ring(ring_spec))
    if graph == "random":
        graphs = [("random[%d:%d]" % (seed, i), g) for i, g in enumerate(graphdual.random_graphs(seed, 25))]
    else:
        graphs = [(graph, load_graph(graph))]
    checks = []
    for gname, G in graphs:
        for K in (H, H.dual()):
            r = graphdual.check_duality(G, K)
            checks.append([gname, K.name, r.ok])
    return {"target": target, "graph": graph, "ok": all(c[2] for c in checks), "checks": checks}


def _suite_moves(builtin: str, target: str, ring_spec: str) -> dict:
    H = load_hopf(target, _ring(ring_spec))
    code = heegaard.builtin(builtin)
    base = kuperberg.invariant(code, H).value
    checks = []
    for t in range(code.genus):
        for layer in ("lower", "upper"):
            circ = (code.lower if layer == "lower" else code.upper)[t]
            for s in range(max(1, len(circ))):
                v = kuperberg.invariant(heegaard.rotate_basepoint(code, (layer, t), s), H).value
                checks.append(["rotate %s %d by %d" % (layer, t, s), v == base])
            v = kuperberg.invariant(heegaard.reverse_circle(code, (layer, t)), H).value
            checks.append(["reverse %s %d" % (layer, t), v == base])
    checks.append(["stabilize", kuperberg.invariant(heegaard.stabilize(code), H).value == base])
    return {"target": builtin, "hopf": H.name, "value": _fmt(base), "ok": all(c[1] for c in checks),
            "checks": checks}


def _suite_oracle(builtin: str, group: str) -> dict:
    try:
        G = group_by_name(group)
    except (KeyError, GroupTableError) as exc:
        raise InputError(str(exc))
    code = heegaard.builtin(builtin)
    inv = kuperberg.invariant(code, group_algebra(G)).value
    homs = kuperberg.invariant_oracle_group(code, G)
    return {"target": builtin, "group": G.name, "invariant": _fmt(inv), "hom_count": homs, "ok": inv == homs}


def _run_job(job):
    kind, params = job
    fn = {"hopf-axioms": _suite_hopf_axioms, "identities": _suite_identities, "duality": _suite_duality,
          "moves": _suite_moves, "oracle": _suite_oracle}[kind]
    return fn(*params)


def cmd_check(args) -> tuple:
    suite = args.suite
    hopfs = [args.hopf] if args.hopf else list(CATALOG)
    jobs = []
    if suite == "hopf-axioms":
        jobs = [(suite, (h, args.ring)) for h in hopfs]
    elif suite == "identities":
        jobs = [(suite, (h, args.ring, args.seed)) for h in hopfs]
    elif suite == "duality":
        jobs = [(suite, (args.graph or "figure6", h, args.ring, args.seed)) for h in hopfs]
    elif suite == "moves":
        names = [args.builtin] if args.builtin else heegaard.catalog()
        hs = [args.hopf] if args.hopf else ["ZmodGroupAlgebra(2)", "ZmodGroupAlgebra(3)", "S3GroupAlgebra"]
        jobs = [(suite, (b, h, args.ring)) for b in names for h in hs]
    elif suite == "oracle":
        names = [args.builtin] if args.builtin else heegaard.catalog()
        groups = [args.group] if args.group else ["Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "S3"]
        jobs = [(suite, (b, g)) for b in names for g in groups]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(_run_job, jobs))
    else:
        results = [_run_job(j) for j in jobs]
    ok = all(r["ok"] for r in results)
    report = {"command": "check", "suite": suite, "seed": args.seed,
              "results": results, "summary": {"total": len(results), "passed": sum(r["ok"] for r in results)}}
    return report, EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------


def _text(report: dict) -> List[str]:
    if report["command"] == "invariant":
        res = report["results"]
        lines = []
        for key in ("kuperberg", "planar"):
            if key in res:
                lines.append("%s: %s" % (key, res[key]))
        if "agree" in res:
            lines.append("agree: %s" % ("yes" if res["agree"] else "NO"))
        if "decimal_approximation" in res:
            lines.append("approx: %s (decimal rendering)" % res["decimal_approximation"])
        return lines
    lines = []
    for r in report["results"]:
        head = " ".join(str(r[k]) for k in ("target", "graph", "hopf", "group") if k in r)
        lines.append("%s %s" % ("PASS" if r["ok"] else "FAIL", head))
        if "invariant" in r:
            lines.append("    invariant %s, hom-count %s" % (r["invariant"], r["hom_count"]))
        if not r["ok"]:
            for d in r.get("details", []):
                failed = [c[0] for c in d["checks"] if not c[1]]
                if failed:
                    lines.append("    %s: %s" % (d["algebra"], ", ".join(failed)))
            for c in r.get("checks", []):
                if not c[-1]:
                    lines.append("    failed: %s" % " ".join(map(str, c[:-1])))
    s = report["summary"]
    lines.append("%d/%d passed" % (s["passed"], s["total"]))
    return lines


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="statesum", description="Kuperberg invariants of Heegaard diagrams.")
    sub = p.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariant", help="compute an invariant")
    inv.add_argument("--builtin", help="built-in diagram, e.g. 'lens(3,1)'")
    inv.add_argument("--diagram", help="path to a code or planar diagram JSON file")
    inv.add_argument("--hopf", required=True, help="built-in algebra name or JSON path")
    inv.add_argument("--ring", default="Q", help="base ring for built-in algebras: Q or F<p>")
    inv.add_argument("--method", choices=["kuperberg", "planar", "both"], default="kuperberg")
    inv.add_argument("--json", action="store_true")
    inv.add_argument("--decimal", action="store_true", help="also print a decimal approximation")

    chk = sub.add_parser("check", help="run a verification suite")
    chk.add_argument("suite", choices=["hopf-axioms", "identities", "duality", "moves", "oracle"])
    chk.add_argument("--hopf")
    chk.add_argument("--ring", default="Q")
    chk.add_argument("--builtin")
    chk.add_argument("--graph", help="figure6, ngon(n), random, or a JSON path")
    chk.add_argument("--group")
    chk.add_argument("--seed", type=int, default=0)
    chk.add_argument("--jobs", type=int, default=1)
    chk.add_argument("--json", action="store_true")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        report, status = (cmd_invariant if args.command == "invariant" else cmd_check)(args)
    except (InputError, HeegaardError, planar.NetworkError, graphdual.GraphError, StructureError,
            NotSemisimpleError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except (ContractionTooLarge, EnumerationCapError) as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return EXIT_RESOURCE
    except DeltaComponentError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return EXIT_MISMATCH
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(_text(report)))
    return status


if __name__ == "__main__":
    sys.exit(main())
