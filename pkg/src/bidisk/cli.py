"""Batch front end.

Reads a JSON job file ({"jobs": [...]}), runs each job through the
computation modules, and writes a plain-text report with one block per job
in input order.  Polynomial fields use the literal syntax of
``bidisk.poly`` ("3/2*z1^2*z2 - z1 + 5").  Job kinds:

    classify     K2, and optionally chi, P2, q, tensor
                 (tensor: "none" | "semi-special" | "unique" | integer dim)
    tensor       a11, a22, a12: determinant analysis, then the eigen
                 splitting or the nilpotent factorization
    blowup       a11, a22, a12: regularity at the origin and the chart data
    h0           n, a, b: sections of a*S + b*F on F_n, both methods
    elliptic     b, chi, pg, q, multiple_fibre_orders, singular_fibres
    product      g1, g2: invariants and the tensor-space dimension
    weierstrass  h: the genus 6h+1 hyperelliptic family

Exit codes: 0 all jobs succeeded, 1 a job errored or a selftest check
failed, 2 usage or parse errors.  Reports are deterministic byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from random import Random
from typing import Optional

from . import __version__
from .blowup import pullback, regularity_criterion
from .classify import (
    NO_TENSOR,
    SEMI_SPECIAL_EXISTS,
    SEMI_SPECIAL_UNIQUE,
    SurfaceInvariants,
    Verdict,
    classify,
    special_dim,
)
from .elliptic import (
    EllipticDescriptor,
    canonical_bundle_degree,
    delta_degree,
    exists_nilpotent_special_tensor,
    fibre_by_tag,
    load_fibre_table,
    multiple_fibre_claim_check,
    special_tensor_degree,
    weierstrass_example,
)
from .poly import PolyParseError, format_poly, parse_poly
from .surfaces import (
    HirzebruchDivisor,
    ProductSurface,
    h0_lattice,
    h0_recursive,
    product_invariants,
    product_special_tensor_dim,
    product_uniqueness_note,
)
from .tensor import (
    NotASquareError,
    NotSpecialTensorError,
    SymTensor,
    eigen_split,
    endo_square,
    endo_to_tensor,
    nilpotent_decompose,
    tensor_det,
    tensor_to_endo,
    TraceZeroEndo,
)

KNOWN_KINDS = ("classify", "tensor", "blowup", "h0", "elliptic", "product", "weierstrass")


class JobFileError(ValueError):
    """Job file cannot be used; message carries the location."""


@dataclass
class Job:
    id: str
    kind: str
    payload: dict


@dataclass
class JobReport:
    id: str
    kind: str
    status: str = "ok"
    results: list[tuple[str, str]] = field(default_factory=list)
    evidence: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def put(self, key: str, value) -> None:
        self.results.append((key, str(value)))


# ---------------------------------------------------------------------------
# job file parsing


def load_jobs(path: str | Path) -> list[Job]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise JobFileError(f"cannot read job file {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobFileError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("jobs"), list):
        raise JobFileError(f'{path}: expected a top-level object with a "jobs" list')
    jobs = []
    seen = set()
    for idx, entry in enumerate(doc["jobs"]):
        where = f"{path}: job #{idx}"
        if not isinstance(entry, dict):
            raise JobFileError(f"{where}: must be an object")
        job_id = entry.get("id")
        kind = entry.get("kind")
        if not isinstance(job_id, str) or not job_id:
            raise JobFileError(f"{where}: missing string field 'id'")
        if job_id in seen:
            raise JobFileError(f"{where}: duplicate id {job_id!r}")
        seen.add(job_id)
        if kind not in KNOWN_KINDS:
            raise JobFileError(
                f"{where} ({job_id}): unknown kind {kind!r}; expected one of {', '.join(KNOWN_KINDS)}"
            )
        payload = {k: v for k, v in entry.items() if k not in ("id", "kind")}
        jobs.append(Job(job_id, kind, payload))
    return jobs


def _payload_poly(payload: dict, key: str):
    value = payload.get(key)
    if not isinstance(value, str):
        raise ValueError(f"field {key!r} must be a polynomial string")
    try:
        return parse_poly(value)
    except PolyParseError as exc:
        raise ValueError(f"field {key!r}: {exc}") from exc


def _payload_int(payload: dict, key: str, required=True, default=None):
    if key not in payload:
        if required:
            raise ValueError(f"missing integer field {key!r}")
        return default
    value = payload[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"field {key!r} must be an integer")
    return value


def _payload_tensor_status(payload: dict):
    value = payload.get("tensor", "none")
    if isinstance(value, bool):
        raise ValueError("field 'tensor' must be a status string or a dimension")
    if isinstance(value, int):
        return special_dim(value)
    mapping = {
        "none": NO_TENSOR,
        "semi-special": SEMI_SPECIAL_EXISTS,
        "unique": SEMI_SPECIAL_UNIQUE,
        "unique-semi-special": SEMI_SPECIAL_UNIQUE,
    }
    if value not in mapping:
        raise ValueError(
            "field 'tensor' must be 'none', 'semi-special', 'unique', or an integer dimension"
        )
    return mapping[value]


def _payload_sym_tensor(payload: dict) -> SymTensor:
    return SymTensor(
        _payload_poly(payload, "a11"),
        _payload_poly(payload, "a22"),
        _payload_poly(payload, "a12"),
    )


# ---------------------------------------------------------------------------
# job execution


def _run_classify(payload: dict, report: JobReport) -> None:
    inv = SurfaceInvariants(
        K2=_payload_int(payload, "K2"),
        chi=_payload_int(payload, "chi", required=False),
        P2=_payload_int(payload, "P2", required=False),
        q=_payload_int(payload, "q", required=False),
        tensor=_payload_tensor_status(payload),
    )
    out = classify(inv)
    report.put("verdict", out.verdict.value)
    if out.reason:
        report.put("reason", out.reason)
    report.evidence.extend(out.evidence)
    if inv.K2 <= 0 and inv.tensor.present() and inv.P2 is not None and inv.P2 >= 2:
        report.warnings.append(
            "tensor present with P2 >= 2 but K2 <= 0: whether such surfaces "
            "with q = 0 and a unique tensor are bidisk quotients is an open "
            "question; no verdict is inferred"
        )


def _run_tensor(payload: dict, report: JobReport) -> None:
    w = _payload_sym_tensor(payload)
    det, is_const = tensor_det(w)
    report.put("det", format_poly(det))
    report.put("det_constant", "yes" if is_const else "no")
    if not is_const:
        report.put("analysis", "not a special tensor: determinant is nonconstant")
        report.warnings.append(
            "nonconstant determinant: local data does not extend to a global special tensor"
        )
        return
    if w.is_zero():
        report.put("analysis", "zero tensor")
        return
    if det.is_zero():
        report.put("analysis", "nilpotent")
        try:
            dec = nilpotent_decompose(w)
        except NotASquareError as exc:
            report.put("decomposition", "unavailable over Q")
            report.warnings.append(f"square-root factorization failed: {exc}")
            return
        report.put("delta", format_poly(dec.delta))
        report.put("beta", format_poly(dec.beta))
        report.put("gamma", format_poly(dec.gamma))
        report.put(
            "z_colength",
            "not-finite" if dec.z_colength is None else dec.z_colength,
        )
        if dec.z_colength is None:
            report.warnings.append(
                "kernel scheme has a divisorial component: colength is not finite"
            )
        report.evidence.append("verified: endomorphism squares to zero")
        report.evidence.append("verified: kernel generator is annihilated")
    else:
        report.put("analysis", "invertible")
        split = eigen_split(w)
        report.put("eigenvalue", str(split.eigenvalue))
        report.put(
            "eigenvector_plus",
            f"({split.vector_plus[0]}, {split.vector_plus[1]})",
        )
        report.put(
            "eigenvector_minus",
            f"({split.vector_minus[0]}, {split.vector_minus[1]})",
        )
        report.evidence.append("verified: eigen identities hold as polynomial identities")


def _run_blowup(payload: dict, report: JobReport) -> None:
    w = _payload_sym_tensor(payload)
    regular = regularity_criterion(w)
    chart = pullback(w)
    if (chart is not None) != regular:
        raise AssertionError("pullback disagrees with the regularity criterion")
    report.put("regular", "yes" if regular else "no")
    if chart is None:
        report.put(
            "analysis",
            "tensor does not vanish at the center, so it does not lift",
        )
        return
    t = chart.tensor
    report.put("chart_a11", format_poly(t.a11))
    report.put("chart_a22", format_poly(t.a22))
    report.put("chart_a12", format_poly(t.a12))


def _run_h0(payload: dict, report: JobReport) -> None:
    d = HirzebruchDivisor(
        _payload_int(payload, "n"),
        _payload_int(payload, "a"),
        _payload_int(payload, "b"),
    )
    recursive = h0_recursive(d)
    lattice = h0_lattice(d)
    if recursive != lattice:
        raise AssertionError(f"section-count routes disagree on {d}")
    report.put("divisor", str(d))
    report.put("h0", recursive)
    report.evidence.append("recursive reduction and lattice count agree")


def _run_elliptic(payload: dict, report: JobReport) -> None:
    orders = tuple(payload.get("multiple_fibre_orders", ()))
    tags = payload.get("singular_fibres", [])
    table = load_fibre_table()
    fibres = tuple(fibre_by_tag(t, table) for t in tags)
    d = EllipticDescriptor(
        b=_payload_int(payload, "b"),
        chi=_payload_int(payload, "chi"),
        pg=_payload_int(payload, "pg"),
        q=_payload_int(payload, "q"),
        multiple_fibre_orders=orders,
        singular_fibres=fibres,
    )
    report.put("delta_degree", delta_degree(d.chi, d.b))
    kdeg = canonical_bundle_degree(d)
    report.put("canonical_degree", kdeg)
    if kdeg <= 0:
        report.warnings.append(
            "canonical degree is not positive: the descriptor is not properly elliptic"
        )
    if d.q_equals_base_genus:
        degree = special_tensor_degree(d.b, d.pg)
        report.put("tensor_divisor_degree", degree)
        res = exists_nilpotent_special_tensor(d.b, d.pg)
        report.put("nilpotent_tensor", "guaranteed" if res.exists else "not-guaranteed")
        report.put("reason", res.reason)
    else:
        report.put("nilpotent_tensor", "skipped")
        report.warnings.append(
            "q differs from the base genus: the fibration is a product up to "
            "covers and the tensor-degree computation does not apply"
        )
    for f in d.singular_fibres:
        ok = multiple_fibre_claim_check(f)
        report.evidence.append(f"fibre {f.tag}: pushforward claim {'holds' if ok else 'FAILS'}")
        if not ok:
            raise AssertionError(f"fibre {f.tag} violates the pushforward claim")


def _run_product(payload: dict, report: JobReport) -> None:
    p = ProductSurface(_payload_int(payload, "g1"), _payload_int(payload, "g2"))
    prof = product_invariants(p)
    report.put("K2", prof.K2)
    report.put("chi", prof.chi)
    report.put("c2", prof.c2)
    report.put("q", prof.q)
    report.put("pg", prof.pg)
    dim = product_special_tensor_dim(p)
    report.put("special_tensor_dim", dim)
    report.evidence.append(
        f"Noether check: c2 = 12*chi - K2 "
        f"({prof.c2} = {12 * prof.chi - prof.K2}): pass"
    )
    note = product_uniqueness_note(p)
    if note:
        report.warnings.append(note)


def _run_weierstrass(payload: dict, report: JobReport) -> None:
    fam = weierstrass_example(_payload_int(payload, "h"))
    report.put("h", fam.h)
    report.put("base_genus", fam.b)
    report.put("canonical_degree", fam.canonical_degree)
    report.put("sixfold_twist_degree", fam.sixfold_twist_degree)
    report.put("residual_degree", fam.residual_degree)
    report.put("h0", fam.h0)
    report.evidence.append(
        "deciding class chosen trivial (canonical = six times the twist), so h0 = 1"
    )
    report.warnings.append(
        "uniqueness of the special tensor beyond this construction is unresolved"
    )


_RUNNERS = {
    "classify": _run_classify,
    "tensor": _run_tensor,
    "blowup": _run_blowup,
    "h0": _run_h0,
    "elliptic": _run_elliptic,
    "product": _run_product,
    "weierstrass": _run_weierstrass,
}


def run_job(job: Job) -> JobReport:
    report = JobReport(job.id, job.kind)
    try:
        _RUNNERS[job.kind](job.payload, report)
    except (ValueError, KeyError, AssertionError, NotSpecialTensorError) as exc:
        report.status = "error"
        report.results = [("error", str(exc))]
    return report


def render_report(reports: list[JobReport]) -> str:
    lines = [f"jobs: {len(reports)}"]
    for r in reports:
        lines.append("")
        lines.append(f"job {r.id}")
        lines.append(f"  kind: {r.kind}")
        lines.append(f"  status: {r.status}")
        for key, value in r.results:
            lines.append(f"  {key}: {value}")
        lines.append("  evidence:")
        if r.evidence:
            lines.extend(f"    - {e}" for e in r.evidence)
        else:
            lines.append("    - none")
        lines.append("  warnings:")
        if r.warnings:
            lines.extend(f"    - {w}" for w in r.warnings)
        else:
            lines.append("    - none")
    lines.append("")
    return "\n".join(lines)


def run(job_file: str | Path, output: Optional[str | Path] = None) -> int:
    """Execute a job file; returns the process exit code."""
    try:
        jobs = load_jobs(job_file)
    except JobFileError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    reports = [run_job(job) for job in jobs]
    text = render_report(reports)
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)
    return 0 if all(r.status == "ok" for r in reports) else 1


def example_jobs_path() -> Path:
    """Filesystem path of the shipped example job file."""
    return Path(str(resources.files("bidisk").joinpath("data", "example_jobs.json")))


# ---------------------------------------------------------------------------
# selftest


def _check_kodaira_table(fibre_table_path) -> None:
    table = load_fibre_table(fibre_table_path)
    for f in table:
        if not multiple_fibre_claim_check(f):
            raise AssertionError(f"multiple_fibre_claim_check fails on fibre {f}")


def _check_hirzebruch_oracles(_) -> None:
    for n in range(0, 6):
        for a in range(-10, 11):
            for b in range(-10, 11):
                d = HirzebruchDivisor(n, a, b)
                if h0_recursive(d) != h0_lattice(d):
                    raise AssertionError(f"section-count routes disagree on {d}")
    for n in range(0, 21):
        d = HirzebruchDivisor(n, 2, -(n + 2))
        if h0_recursive(d) != 0 or h0_lattice(d) != 0:
            raise AssertionError(f"vanishing divisor has sections on F_{n}")


def _check_tensor_round_trips(_) -> None:
    from .poly import Poly2
    from fractions import Fraction

    rng = Random(2024)

    def rand_poly(max_deg):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            i = rng.randint(0, max_deg)
            j = rng.randint(0, max_deg - i)
            terms[(i, j)] = Fraction(rng.randint(-4, 4))
        p = Poly2(terms)
        return p if not p.is_zero() else Poly2.one()

    for _ in range(60):
        w = SymTensor(rand_poly(3), rand_poly(3), rand_poly(3))
        e = tensor_to_endo(w)
        if endo_to_tensor(e) != w or not (e.m11 + e.m22).is_zero():
            raise AssertionError("tensor/endomorphism round trip failed")
    for _ in range(60):
        delta, beta, gamma = rand_poly(1), rand_poly(1), rand_poly(1)
        e = TraceZeroEndo(
            delta * beta * gamma,
            -(delta * beta * beta),
            delta * gamma * gamma,
            -(delta * beta * gamma),
        )
        dec = nilpotent_decompose(endo_to_tensor(e))
        if dec.reconstruct().entries() != e.entries():
            raise AssertionError("nilpotent synthesis round trip failed")
        if any(not p.is_zero() for p in endo_square(e)):
            raise AssertionError("square of a nilpotent endomorphism is not zero")
        image = e.apply(dec.kernel_generator)
        if not (image[0].is_zero() and image[1].is_zero()):
            raise AssertionError("kernel generator is not annihilated")


def _check_blowup_equivalence(_) -> None:
    from .poly import Poly2
    from fractions import Fraction

    rng = Random(2025)
    for k in range(200):
        terms = {}
        coeffs = []
        for _ in range(3):
            t = {}
            for _ in range(rng.randint(0, 4)):
                i = rng.randint(0, 3)
                j = rng.randint(0, 3 - i)
                t[(i, j)] = Fraction(rng.randint(-3, 3))
            p = Poly2(t)
            if k % 2 == 0:
                p = p - Poly2.constant(p.value_at_origin())
            coeffs.append(p)
        w = SymTensor(*coeffs)
        if (pullback(w) is not None) != regularity_criterion(w):
            raise AssertionError("pullback disagrees with the regularity criterion")
    if pullback(SymTensor(Poly2.one(), Poly2.zero(), Poly2.zero())) is not None:
        raise AssertionError("constant tensor must not lift")


def _check_elliptic_degrees(_) -> None:
    for b in range(0, 21):
        for pg in range(b, b + 12):
            chi = 1 + pg - b
            if special_tensor_degree(b, pg) + delta_degree(chi, b) != 4 * b - 4:
                raise AssertionError("degree decomposition identity failed")
    for b in range(0, 31):
        for pg in range(b, 31):
            expected = b >= 3 and b <= pg <= 2 * b - 3
            if exists_nilpotent_special_tensor(b, pg).exists != expected:
                raise AssertionError("effectiveness window mischaracterized")
    for h in range(1, 11):
        fam = weierstrass_example(h)
        if fam.residual_degree != 0 or fam.h0 != 1 or fam.b != 6 * h + 1:
            raise AssertionError("hyperelliptic family degrees are off")


def _check_classifier(_) -> None:
    cases = [
        (SurfaceInvariants(K2=8, chi=1, P2=9, q=0, tensor=SEMI_SPECIAL_UNIQUE), Verdict.BIDISK),
        (SurfaceInvariants(K2=8, chi=1, P2=0, q=0, tensor=SEMI_SPECIAL_UNIQUE), Verdict.QUADRIC),
        (SurfaceInvariants(K2=9, chi=1, P2=3, q=0, tensor=NO_TENSOR), Verdict.BALL),
        (SurfaceInvariants(K2=0, chi=0, P2=3, q=2, tensor=special_dim(3)), Verdict.NOT_COVERED),
        (SurfaceInvariants(K2=8, chi=1, P2=1, q=0, tensor=SEMI_SPECIAL_UNIQUE), Verdict.CONTRADICTION),
        (SurfaceInvariants(K2=8, chi=1, P2=9, q=0, tensor=special_dim(2)), Verdict.CONTRADICTION),
    ]
    for inv, expected in cases:
        got = classify(inv).verdict
        if got != expected:
            raise AssertionError(f"classifier gave {got.value}, expected {expected.value}")


_SELFTEST_CHECKS = [
    ("multiple_fibre_claim_check", _check_kodaira_table),
    ("hirzebruch_h0_oracle_agreement", _check_hirzebruch_oracles),
    ("tensor_round_trips", _check_tensor_round_trips),
    ("blowup_regularity_equivalence", _check_blowup_equivalence),
    ("elliptic_degree_identities", _check_elliptic_degrees),
    ("classifier_truth_table", _check_classifier),
]


def selftest(fibre_table_path: Optional[str] = None) -> int:
    """Run the built-in verification suite; 0 on success, 1 on failure."""
    if fibre_table_path is not None and not Path(fibre_table_path).exists():
        print(f"selftest: cannot read fibre table {fibre_table_path}")
        return 1
    failures = 0
    for name, check in _SELFTEST_CHECKS:
        try:
            check(fibre_table_path)
        except Exception as exc:
            print(f"check {name}: FAIL ({exc})")
            failures += 1
        else:
            print(f"check {name}: ok")
    if failures:
        print(f"selftest: {failures} of {len(_SELFTEST_CHECKS)} checks failed")
        return 1
    print(f"selftest: all {len(_SELFTEST_CHECKS)} checks passed")
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bidisk",
        description="batch computations for surfaces uniformized by the bidisk",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a job file and emit a report")
    run_p.add_argument("jobfile", nargs="?", help="path to a JSON job file")
    run_p.add_argument("--example", action="store_true", help="run the shipped example jobs")
    run_p.add_argument("-o", "--output", help="write the report here instead of stdout")

    self_p = sub.add_parser("selftest", help="run the built-in verification suite")
    self_p.add_argument("--fibre-table", help="override the Kodaira fibre table fixture")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "run":
        if args.example:
            jobfile = example_jobs_path()
        elif args.jobfile:
            jobfile = args.jobfile
        else:
            print("run: need a job file or --example", file=sys.stderr)
            return 2
        return run(jobfile, args.output)
    if args.command == "selftest":
        return selftest(args.fibre_table)
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
