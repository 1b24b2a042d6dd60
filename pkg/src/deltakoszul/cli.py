"""Command-line entry point: ``deltakoszul {resolve,yoneda,family,growth}``."""
from __future__ import annotations

import argparse
import logging
import sys

from .algebra import build_quotient
from .delta import GoodMapReport, classify, extract_delta, is_good_map
from .dsl import AlgebraFile, AlgebraSyntaxError, format_algebra, load_algebra
from .errors import BadD, BadN0, HorizonExceeded, InsufficientRange, ValidationError
from .family import (
    build_d_koszul_example,
    build_family_algebra,
    build_koszul_example,
    recommended_cap,
)
from .field import QQ
from .report import ReportDocument, generator_rows
from .resolution import check_complex, check_minimality, euler_check, minimal_resolution
from .yoneda import ext_groups, minimal_generator_degrees

log = logging.getLogger("deltakoszul")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_HORIZON = 5

DEFAULT_GROWTH_BOUND = 6


def _algebra_info(doc: AlgebraFile, cap: int) -> dict:
    return {
        "vertices": list(doc.quiver.vertices),
        "arrows": len(doc.quiver.arrows),
        "relations": len(doc.relations),
        "field": doc.field.spec(),
        "compose": doc.compose,
        "cap": cap,
    }


def _resolve(doc: AlgebraFile, steps: int, cap: int | None):
    if cap is None:
        cap = doc.cap if doc.cap is not None else steps + 3
    A = build_quotient(doc.quiver, doc.relations, cap, doc.field)
    return A, minimal_resolution(A, steps), cap


def run_resolve(doc: AlgebraFile, steps: int, cap: int | None = None) -> ReportDocument:
    A, R, cap = _resolve(doc, steps, cap)
    delta = extract_delta(R)
    if delta.defined:
        try:
            good = is_good_map(delta)
        except InsufficientRange as exc:
            good = GoodMapReport(False, None, str(exc), -1)
    else:
        step = delta.first_multi_degree_step()
        good = GoodMapReport(False, None, f"step {step} is generated in several degrees", -1)
    determined = delta.resolution_determined
    label = classify(good, determined)
    good_dict = {
        "is_good": good.is_good,
        "n0": good.n0,
        "failure": good.failure,
        "checked_through": good.checked_through,
        "delta_n0": good.delta_n0,
    }
    return ReportDocument(
        command="resolve",
        algebra=_algebra_info(doc, cap),
        hilbert_function=A.hilbert_function(),
        resolution=[
            {"step": s.n, "generators": generator_rows(s.table()), "horizon": s.horizon}
            for s in R.steps
        ],
        delta={
            "values": list(delta.values),
            "single_degree": list(delta.single_degree),
            "intervals": [list(i) if i else None for i in delta.intervals],
            "resolution_determined": determined,
        },
        good_map=good_dict,
        classification=label,
        checks={
            "euler": all(row[3] for row in euler_check(R)),
            "minimality": check_minimality(R),
            "complex": check_complex(R),
        },
    )


def run_yoneda(doc: AlgebraFile, n_max: int, cap: int | None = None) -> ReportDocument:
    A, R, cap = _resolve(doc, n_max, cap)
    summary = minimal_generator_degrees(R, n_max)
    return ReportDocument(
        command="yoneda",
        algebra=_algebra_info(doc, cap),
        hilbert_function=A.hilbert_function(),
        ext=[
            {
                "n": n,
                "dim": dim,
                "internal_degrees": [
                    {"degree": d, "multiplicity": m} for d, m in sorted(degs.items(), reverse=True)
                ],
            }
            for n, dim, degs in ext_groups(R)
        ],
        products=[
            {"a": a, "b": b, "span_dim": dim} for (a, b), dim in sorted(summary.pair_spans.items())
        ],
        generation=[
            {
                "n": d.n,
                "dim": d.dim,
                "decomposable_dim": d.decomposable_dim,
                "minimal_generator": d.minimal_generator,
            }
            for d in summary.degrees
        ],
        minimal_generator_degrees=summary.generator_degrees,
    )


def family_algebra(n0: int) -> AlgebraFile:
    Q, rels = build_family_algebra(n0)
    return AlgebraFile(Q, rels, QQ)


def run_growth(lo: int, hi: int, bound: int = DEFAULT_GROWTH_BOUND) -> ReportDocument:
    if lo <= hi:
        if lo < 3:
            raise BadN0("the growth range must start at N0 >= 3")
        if hi > bound:
            raise BadN0(f"N0 = {hi} exceeds the desk-scale bound {bound} (raise it with --bound)")
    rows = []
    for n0 in range(lo, hi + 1):
        n_max = 2 * n0 + 1
        doc = family_algebra(n0)
        _, R, _ = _resolve(doc, n_max, recommended_cap(n0, n_max))
        degrees = minimal_generator_degrees(R, n_max).generator_degrees
        log.info("N0=%d: generators in degrees %s", n0, degrees)
        rows.append({"n0": n0, "generator_degrees": degrees, "top_degree": max(degrees)})
    return ReportDocument(command="growth", growth=rows)


def family_text(args) -> str:
    if args.koszul:
        Q, rels = build_koszul_example()
        notes = ["Koszul witness k[x]/(x^2)"]
        cap = None
    elif args.d_koszul is not None:
        Q, rels = build_d_koszul_example(args.d_koszul)
        notes = [f"d-Koszul witness k[x]/(x^{args.d_koszul})"]
        cap = None
    else:
        if args.n0 is not None and args.n0 == 2:
            raise BadN0("N0 = 2 is the d-Koszul case: use --d-koszul D")
        if args.n0 is not None and args.n0 == 1:
            raise BadN0("N0 = 1 is the Koszul case: use --koszul")
        Q, rels = build_family_algebra(args.n0)
        steps = 2 * args.n0 + 1
        notes = [
            f"zigzag algebra A({args.n0})",
            f"recommended cap for {steps} steps: {recommended_cap(args.n0, steps)}",
        ]
        cap = None
    return format_algebra(AlgebraFile(Q, rels, QQ, "right", cap), comments=notes)


# ---- text rendering -------------------------------------------------------

def render_text(doc: ReportDocument) -> str:
    out = []
    if doc.algebra:
        a = doc.algebra
        out.append(
            f"algebra: {len(a['vertices'])} vertices, {a['arrows']} arrows, "
            f"{a['relations']} relations over {a['field']} (cap {a['cap']})"
        )
    if doc.hilbert_function is not None:
        out.append("hilbert function: " + " ".join(map(str, doc.hilbert_function)))
    if doc.resolution is not None:
        out.append("resolution (vertex, degree, multiplicity):")
        for row in doc.resolution:
            triples = " ".join(
                f"({g['vertex']},{g['degree']},{g['multiplicity']})" for g in row["generators"]
            )
            out.append(f"  P_{row['step']}: {triples or '0'}")
    if doc.delta is not None:
        vals = ["?" if v is None else str(v) for v in doc.delta["values"]]
        out.append("delta: " + " ".join(vals))
    if doc.good_map is not None:
        g = doc.good_map
        if g["is_good"]:
            out.append(f"good map: yes, N0 = {g['n0']} (checked through {g['checked_through']})")
        else:
            out.append(f"good map: no ({g['failure']})")
    if doc.classification is not None:
        out.append(f"classification: {doc.classification}")
    if doc.checks:
        out.append("checks: " + ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in doc.checks.items()))
    if doc.ext is not None:
        out.append("Ext (n: dim [internal degree x multiplicity]):")
        for row in doc.ext:
            degs = " ".join(f"{d['degree']}x{d['multiplicity']}" for d in row["internal_degrees"])
            out.append(f"  {row['n']}: {row['dim']} [{degs}]")
    if doc.generation is not None:
        out.append("generation (n: dim, decomposable dim, new generator):")
        for row in doc.generation:
            flag = "yes" if row["minimal_generator"] else "no"
            out.append(f"  {row['n']}: {row['dim']}, {row['decomposable_dim']}, {flag}")
    if doc.minimal_generator_degrees is not None:
        out.append("minimal generator degrees: " + " ".join(map(str, doc.minimal_generator_degrees)))
    if doc.growth is not None:
        out.append("N0  generator degrees  top")
        for row in doc.growth:
            out.append(f"{row['n0']:<3} {str(row['generator_degrees']):<20} {row['top_degree']}")
    if doc.command != "growth":
        out.append("conventions:")
        out.extend(f"  - {c}" for c in doc.conventions)
    return "\n".join(out)


def _emit(doc: ReportDocument, fmt: str):
    print(doc.to_json() if fmt == "json" else render_text(doc))


def _range(text: str):
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deltakoszul", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("resolve", help="minimal resolution of A_0, δ and its classification")
    r.add_argument("file")
    r.add_argument("--steps", type=int, default=6)
    r.add_argument("--cap", type=int, default=None)
    r.add_argument("--format", choices=["text", "json"], default="text")

    y = sub.add_parser("yoneda", help="Ext dimensions, product spans and generation degrees")
    y.add_argument("file")
    y.add_argument("--nmax", type=int, default=6)
    y.add_argument("--cap", type=int, default=None)
    y.add_argument("--format", choices=["text", "json"], default="text")

    f = sub.add_parser("family", help="write a witness presentation")
    g = f.add_mutually_exclusive_group(required=True)
    g.add_argument("--n0", type=int)
    g.add_argument("--koszul", action="store_true")
    g.add_argument("--d-koszul", type=int, metavar="D")
    f.add_argument("-o", "--output")

    gr = sub.add_parser("growth", help="top generator degree of E(A(N0)) over a range of N0")
    gr.add_argument("--n0-range", type=_range, required=True, metavar="A..B")
    gr.add_argument("--bound", type=int, default=DEFAULT_GROWTH_BOUND)
    gr.add_argument("--format", choices=["text", "json"], default="text")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        if args.command == "resolve":
            _emit(run_resolve(load_algebra(args.file), args.steps, args.cap), args.format)
        elif args.command == "yoneda":
            _emit(run_yoneda(load_algebra(args.file), args.nmax, args.cap), args.format)
        elif args.command == "family":
            text = family_text(args)
            if args.output:
                with open(args.output, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
        elif args.command == "growth":
            lo, hi = args.n0_range
            _emit(run_growth(lo, hi, args.bound), args.format)
    except AlgebraSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationError, BadN0, BadD) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except HorizonExceeded as exc:
        hint = f"; try --cap {exc.suggested_cap}" if exc.suggested_cap is not None else ""
        print(f"horizon exceeded: {exc}{hint}", file=sys.stderr)
        return EXIT_HORIZON
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
