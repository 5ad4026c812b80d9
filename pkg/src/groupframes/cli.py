"""Command-line surface: build, analyze, tabulate, and verify frames.

Subcommands
-----------
build    construct a frame and write it as a FRM1 text file
analyze  report coherence, bounds and structure flags for a frame
table1   reproduce the 13-row coherence comparison table
bounds   tabulate the closed-form bound curves against m
verify   run exhaustive invariant suites (exit 1 on any failure)

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import analysis, baselines, frameio, numtheory, tables
from .frames import (
    AbelianFrameSpec,
    CyclicFrameSpec,
    DihedralFrameSpec,
    FrameMatrix,
    build_abelian_frame,
    build_cyclic_frame,
    build_dihedral_frame,
    build_prime_group_frame,
    dihedral_subgroup_spec,
    zadoff_chu,
)

WELCH_FLAG_TOL = 5e-4


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok != "")
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}")


def _build_frame(args) -> FrameMatrix:
    family = args.family
    if family == "prime-cyclic":
        if args.n is None or args.m is None:
            raise ValueError("prime-cyclic needs --n and --m")
        n = int(args.n)
        return build_prime_group_frame(n, args.m)
    if family == "cyclic":
        if args.n is None or not args.exponents:
            raise ValueError("cyclic needs --n and --exponents")
        return build_cyclic_frame(CyclicFrameSpec(int(args.n), _parse_int_list(args.exponents)))
    if family == "abelian":
        if args.n is None or not args.exponents:
            raise ValueError(
                "abelian needs --n as comma-separated factor orders and "
                "--exponents as ';'-separated per-factor lists"
            )
        orders = _parse_int_list(args.n)
        lists = tuple(_parse_int_list(part) for part in args.exponents.split(";"))
        return build_abelian_frame(AbelianFrameSpec(orders, lists))
    if family == "dihedral":
        if args.n is None or args.twist is None:
            raise ValueError("dihedral needs --n and --twist")
        n = int(args.n)
        if args.exponents:
            spec = DihedralFrameSpec(n, args.twist, _parse_int_list(args.exponents))
        elif args.m is not None:
            spec = dihedral_subgroup_spec(n, args.twist, args.m)
            frame = build_dihedral_frame(spec)
            frame.provenance["subgroup"] = "true"
            frame.provenance["generator"] = str(numtheory.find_generator(n).x)
            return frame
        else:
            raise ValueError("dihedral needs --m or --exponents")
        return build_dihedral_frame(spec)
    raise ValueError(f"unknown family {family!r}")


def cmd_build(args) -> int:
    frame = _build_frame(args)
    summary = " ".join(f"{k}={v}" for k, v in frame.provenance.items())
    if args.out:
        frameio.write_frame(args.out, frame)
        print(f"wrote {frame.rows}x{frame.cols} frame to {args.out} ({summary})")
    else:
        sys.stdout.write(frameio.format_frame(frame))
    return 0


@dataclass
class ReportRow:
    """Analysis summary for one frame."""

    family: str
    rows: int
    cols: int
    coherence: float
    distinct_values: int
    tight: bool
    equiangular: bool
    welch: float | None = None
    sqrt_r_bound: float | None = None
    closed_form_bound: float | None = None
    welch_achieved: bool | None = None

    def emit(self) -> None:
        def fmt(v):
            if v is None:
                return "n/a"
            if isinstance(v, bool):
                return "true" if v else "false"
            if isinstance(v, float):
                return f"{v:.10g}"
            return str(v)

        for name in (
            "family",
            "rows",
            "cols",
            "coherence",
            "welch",
            "sqrt_r_bound",
            "closed_form_bound",
            "distinct_values",
            "tight",
            "equiangular",
            "welch_achieved",
        ):
            print(f"{name}={fmt(getattr(self, name))}")


def analyze_frame(frame: FrameMatrix) -> ReportRow:
    """Measure a frame and attach whatever bounds its provenance supports."""
    mu = analysis.coherence(frame)
    tight = analysis.tightness(frame).is_tight
    equi = analysis.is_equiangular(frame, tol=analysis.CLUSTER_TOL)
    gram_abs = np.abs(analysis.gram(frame))
    off = gram_abs[~np.eye(frame.cols, dtype=bool)]
    distinct = len(analysis.cluster_magnitudes(off))

    prov = frame.provenance
    family = prov.get("family", "unknown")
    welch = sqrt_r = closed = achieved = None
    if frame.cols > frame.rows:
        welch = analysis.welch_bound(frame.cols, frame.rows)
        sqrt_r = analysis.sqrt_r_bound(frame.cols, frame.rows, distinct)
        achieved = abs(mu - welch) <= WELCH_FLAG_TOL
    if prov.get("subgroup") == "true" and "n" in prov and "m" in prov:
        bounds = analysis.bound_set(int(prov["n"]), int(prov["m"]))
        closed = bounds.best_upper
    return ReportRow(
        family=family,
        rows=frame.rows,
        cols=frame.cols,
        coherence=mu,
        distinct_values=distinct,
        tight=tight,
        equiangular=equi,
        welch=welch,
        sqrt_r_bound=sqrt_r,
        closed_form_bound=closed,
        welch_achieved=achieved,
    )


def cmd_analyze(args) -> int:
    if args.infile:
        frame = frameio.read_frame(args.infile)
    elif args.family:
        frame = _build_frame(args)
    else:
        raise ValueError("analyze needs --in or --family plus spec flags")
    analyze_frame(frame).emit()
    return 0


def _parse_row_filter(text: str | None):
    if not text:
        return None
    pairs = set()
    for token in text.split(","):
        n_str, _, m_str = token.partition(":")
        pairs.add((int(n_str), int(m_str)))
    return pairs


def cmd_table1(args) -> int:
    """Reproduce the 13-row comparison; exit 1 if reference values drift."""
    row_filter = _parse_row_filter(args.rows)
    seed = args.seed if args.seed is not None else 0
    print(f"{'(n, m)':>12}  {'gaussian':>9} {'fourier':>9} {'group':>9} "
          f"{'welch':>9}  {'ref group/welch':>16}  status")
    failures = 0
    for idx, ref in enumerate(tables.REFERENCE_ROWS):
        if row_filter and (ref.n, ref.m) not in row_filter:
            continue
        gauss = analysis.coherence(
            baselines.gaussian_frame(
                baselines.BaselineSpec("gaussian", ref.n, ref.m, seed + idx)
            )
        )
        exps = baselines.sample_fourier_exponents(
            baselines.BaselineSpec("random_fourier", ref.n, ref.m, seed + idx)
        )
        fourier = analysis.group_spectrum(CyclicFrameSpec(ref.n, exps)).coherence
        group = analysis.prime_group_spectrum(ref.n, ref.m).coherence
        welch = analysis.welch_bound(ref.n, ref.m)
        ok = (
            abs(group - ref.group) <= tables.REFERENCE_TOL
            and abs(welch - ref.welch) <= tables.REFERENCE_TOL
        )
        failures += 0 if ok else 1
        mark = "ok" if ok else "MISMATCH"
        star = "*" if ref.achieves_welch else ""
        print(
            f"({ref.n:>5},{ref.m:>4})  {gauss:9.4f} {fourier:9.4f} {group:9.4f} "
            f"{welch:9.4f}  {ref.group:7.4f}/{ref.welch:6.4f}{star}  {mark}"
        )
    print("* reference row achieves the Welch bound")
    return 1 if failures else 0


def cmd_bounds(args) -> int:
    r = args.r
    if r < 1:
        raise ValueError(f"--r must be positive, got {r}")
    m_values = range(args.m_min, args.m_max + 1, args.m_step)
    header = f"{'m':>6} {'welch':>12} {'general':>12} {'odd-m':>12}"
    if r == 3:
        header += f" {'r3-upper':>12} {'r3-lower':>12}"
    print(header)
    for m in m_values:
        welch = analysis.welch_bound(r * m + 1, m)
        general = analysis.coherence_upper_bound(m, r)
        odd = (
            analysis.odd_m_coherence_upper_bound(m, r)
            if (m % 2 and r % 2 == 0)
            else None
        )
        line = f"{m:>6} {welch:12.6f} {general:12.6f} "
        line += f"{odd:12.6f}" if odd is not None else f"{'n/a':>12}"
        if r == 3:
            upper, lower = analysis.r3_coherence_bounds(m)
            line += f" {upper:12.6f} {lower:12.6f}"
        print(line)
    return 0


# ---------------------------------------------------------------------------
# Verification suites


def _group_cases(max_n: int):
    for n in numtheory.primes_up_to(max_n):
        if n == 2:
            continue
        for m in range(1, n):
            if (n - 1) % m == 0:
                yield n, m


class _SuiteLog:
    def __init__(self, name: str):
        self.name = name
        self.checks = 0
        self.failures = 0

    def check(self, ok: bool, label: str):
        self.checks += 1
        if not ok:
            self.failures += 1
            print(f"FAIL [{self.name}] {label}")

    def summary(self) -> int:
        status = "pass" if self.failures == 0 else f"{self.failures} FAILURES"
        print(f"suite {self.name}: {self.checks} checks, {status}")
        return 1 if self.failures else 0


def _suite_numtheory(max_n: int, log: _SuiteLog) -> None:
    for n, m in _group_cases(max_n):
        ctx = numtheory.find_generator(n)
        sub = numtheory.subgroup_of_order(ctx, m)
        table = numtheory.coset_table(sub)
        counts = numtheory.difference_counts(sub).a
        log.check(counts[0] == m, f"(n={n}, m={m}) a_0 != m")
        log.check(sum(counts) == m * m, f"(n={n}, m={m}) sum a_t != m^2")
        const = all(
            counts[t] == counts[coset[0]]
            for coset in table.cosets
            for t in coset
        )
        log.check(const, f"(n={n}, m={m}) a_t not constant on cosets")
        for result in numtheory.verify_translation_identities(sub):
            log.check(result.passed, f"(n={n}, m={m}) {result.name}: {result.details}")
        if sub.index == 2:
            expect = n % 4 == 3
            log.check(
                numtheory.is_difference_set(sub) == expect,
                f"(n={n}, m={m}) difference-set test disagrees with n mod 4",
            )


def _w_spectrum_checks(n: int, m: int, log: _SuiteLog, tol: float = 1e-9) -> None:
    ws = analysis.w_spectrum(n, m)
    r = ws.r
    beta = analysis.beta_value(m, r)
    log.check(abs(ws.w[0] + 1 / m) <= tol, f"(n={n}, m={m}) w_1 != -1/m")
    if r > 1:
        err = np.abs(np.abs(ws.w[1:]) - beta).max()
        log.check(err <= tol, f"(n={n}, m={m}) |w_i| off beta by {err:.2e}")
    # Conjugation symmetry, split on whether -1 lies in the subgroup.
    w = ws.w
    cc = analysis.coset_inner_products(n, m)
    if m % 2 == 0:
        log.check(
            float(np.abs(cc.imag).max()) <= tol,
            f"(n={n}, m={m}) coset inner products not real",
        )
        sym = (
            max(abs(w[i - 1].conj() - w[r - i + 1]) for i in range(2, r + 1))
            if r > 1
            else 0.0
        )
        log.check(sym <= tol, f"(n={n}, m={m}) w conjugation symmetry off by {sym:.2e}")
    else:
        half = r // 2
        err = float(np.abs(cc - np.conj(np.roll(cc, -half))).max())
        log.check(err <= tol, f"(n={n}, m={m}) c half-turn conjugation off by {err:.2e}")
        sym = max(
            abs(w[i - 1].conj() - (-1) ** (i - 1) * w[r - i + 1])
            for i in range(2, r + 1)
        )
        log.check(sym <= tol, f"(n={n}, m={m}) signed w symmetry off by {sym:.2e}")


def _suite_spectra(max_n: int, log: _SuiteLog) -> None:
    for n, m in _group_cases(max_n):
        r = (n - 1) // m
        spectrum = analysis.prime_group_spectrum(n, m)
        log.check(
            abs(spectrum.c[0] - 1) <= 1e-12 and abs(spectrum.alpha[0] - 1) <= 1e-12,
            f"(n={n}, m={m}) identity inner product != 1",
        )
        log.check(
            abs(spectrum.c.sum()) <= 1e-9, f"(n={n}, m={m}) sum of c_l not 0"
        )
        log.check(
            spectrum.distinct_values <= r,
            f"(n={n}, m={m}) {spectrum.distinct_values} clusters > r={r}",
        )
        mult_ok = all(count % m == 0 and count > 0 for _, count in spectrum.clusters)
        log.check(mult_ok, f"(n={n}, m={m}) multiplicities not multiples of m")
        log.check(
            sum(count for _, count in spectrum.clusters) == n - 1,
            f"(n={n}, m={m}) multiplicities do not sum to n-1",
        )
        _w_spectrum_checks(n, m, log)
        if r == 3:
            log.check(
                float(np.abs(spectrum.c.imag).max()) <= 1e-9,
                f"(n={n}, m={m}) r=3 inner products not real",
            )
            resid = analysis.r3_product_identity_residual(n)
            log.check(resid <= 1e-9, f"(n={n}) r=3 product identity residual {resid:.2e}")
        if n <= 100:
            frame = build_prime_group_frame(n, m)
            g = analysis.gram(frame)
            log.check(
                abs(analysis.coherence(frame) - spectrum.coherence) <= 1e-9,
                f"(n={n}, m={m}) gram and spectrum coherence disagree",
            )
            log.check(
                _multiplicity_ok(g, spectrum.c),
                f"(n={n}, m={m}) gram value multiplicities are not n per value",
            )


def _multiplicity_ok(g: np.ndarray, c: np.ndarray, tol: float = 1e-9) -> bool:
    """Each distinct group value must fill exactly n slots per member of
    its coincidence class in the full Gram matrix."""
    n = len(c)
    flat = g.ravel()
    total = 0
    for value in c:
        class_size = int(np.sum(np.abs(c - value) <= tol))
        hits = int(np.sum(np.abs(flat - value) <= tol))
        if hits != n * class_size:
            return False
        total += 1
    return total == n


def _suite_bounds(max_n: int, log: _SuiteLog) -> None:
    slack = 1e-9
    for n, m in _group_cases(max_n):
        bounds = analysis.bound_set(n, m)
        mu = analysis.prime_group_spectrum(n, m).coherence
        log.check(mu >= bounds.welch - slack, f"(n={n}, m={m}) coherence below Welch")
        chain = bounds.odd_m_upper if bounds.odd_m_upper is not None else bounds.general_upper
        log.check(mu <= chain + slack, f"(n={n}, m={m}) coherence {mu} over {chain}")
        if bounds.odd_m_upper is not None:
            log.check(
                bounds.odd_m_upper <= bounds.general_upper + slack,
                f"(n={n}, m={m}) odd-m bound above general bound",
            )
        log.check(
            bounds.general_upper <= bounds.sqrt_r + slack,
            f"(n={n}, m={m}) general bound above sqrt(r) Welch",
        )
        if bounds.exact_r2 is not None:
            log.check(
                abs(mu - bounds.exact_r2) <= slack,
                f"(n={n}, m={m}) r=2 coherence off closed form by {abs(mu - bounds.exact_r2):.2e}",
            )
        if bounds.r3_upper is not None:
            log.check(mu <= bounds.r3_upper + slack, f"(n={n}, m={m}) over r=3 bound")


def _suite_dihedral(max_n: int, log: _SuiteLog, seed: int = 0) -> None:
    for big_d in range(1, 65):
        zc = zadoff_chu(big_d)
        log.check(
            float(np.abs(np.abs(zc.values) - 1).max()) <= 1e-12,
            f"ZC D={big_d} not unit modulus",
        )
        if big_d > 1:
            acorr = float(np.abs(zc.autocorrelations()).max())
            log.check(acorr <= 1e-9, f"ZC D={big_d} autocorrelation {acorr:.2e}")
    rng = np.random.default_rng(seed)
    primes = [p for p in numtheory.primes_up_to(max_n) if p >= 5]
    triples = 0
    while triples < 50:
        n = int(rng.choice(primes))
        twist = int(rng.integers(2, n))
        spec_order = DihedralFrameSpec(n, twist, (1,)).order
        if spec_order * n > 800 or spec_order > 12:
            continue
        divisors = [m for m in range(1, n) if (n - 1) % m == 0]
        m = int(rng.choice(divisors))
        sub = numtheory.subgroup_of_order(numtheory.find_generator(n), m)
        dspec = DihedralFrameSpec(n, twist, sub.elements)
        cyc = build_cyclic_frame(CyclicFrameSpec(n, sub.elements))
        dih = build_dihedral_frame(dspec)
        report = analysis.dihedral_dominance(cyc, dih)
        log.check(
            report.dominated,
            f"(n={n}, m={m}, twist={twist}) dihedral coherence exceeds cyclic",
        )
        tight = analysis.tightness(dih)
        log.check(
            tight.residual <= 1e-9 and abs(tight.frame_constant - n / m) <= 1e-9,
            f"(n={n}, m={m}, twist={twist}) dihedral frame not tight at n/m",
        )
        values = analysis.dihedral_spectrum(dspec)
        mags = np.abs(values.ravel())[1:]  # drop the identity element
        clusters = analysis.cluster_magnitudes(mags)
        cap = analysis.dihedral_distinct_count_bound(dspec.order, n, m)
        log.check(
            len(clusters) <= cap,
            f"(n={n}, m={m}, twist={twist}) {len(clusters)} magnitudes > cap {cap}",
        )
        if dspec.order == 2:
            c = analysis.group_spectrum(CyclicFrameSpec(n, sub.elements)).c
            err = max(
                float(np.abs(values[:, 0] - c.real).max()),
                float(np.abs(values[:, 1] + c.imag).max()),
            )
            log.check(err <= 1e-9, f"(n={n}, m={m}) D=2 values off Re/-Im by {err:.2e}")
        triples += 1


def _suite_pairing(max_n: int, log: _SuiteLog, seed: int = 0) -> None:
    spec = CyclicFrameSpec(7, (1, 2, 4))
    _, a_back = analysis.fourier_pairing(spec)
    log.check(
        np.abs(a_back - np.array([3, 1, 1, 1, 1, 1, 1])).max() <= 1e-6,
        "n=7 K={1,2,4} counts not recovered",
    )
    rng = np.random.default_rng(seed)
    for _ in range(200):
        n = int(rng.integers(3, max(4, max_n + 1)))
        m = int(rng.integers(1, n))
        exps = tuple(int(e) for e in rng.choice(n, size=m, replace=False))
        if all(e % n == 0 for e in exps):
            continue
        spec = CyclicFrameSpec(n, exps)
        alpha_from_a, a_back = analysis.fourier_pairing(spec)
        a = np.asarray(numtheory.difference_vector(n, exps), dtype=float)
        alpha = np.abs(analysis.group_spectrum(spec).c) ** 2
        log.check(
            float(np.abs(a_back - a).max()) <= 1e-6,
            f"(n={n}, K={exps}) counts not recovered",
        )
        log.check(
            float(np.abs(alpha_from_a - alpha).max()) <= 1e-9,
            f"(n={n}, K={exps}) alpha mismatch",
        )


_SUITES = {
    "numtheory": (_suite_numtheory, 300),
    "spectra": (_suite_spectra, 500),
    "bounds": (_suite_bounds, 1000),
    "dihedral": (_suite_dihedral, 50),
    "pairing": (_suite_pairing, 200),
}


def cmd_verify(args) -> int:
    runner, default_max = _SUITES[args.suite]
    max_n = args.max_n if args.max_n is not None else default_max
    log = _SuiteLog(args.suite)
    if args.suite in ("dihedral", "pairing"):
        runner(max_n, log, seed=args.seed if args.seed is not None else 0)
    else:
        runner(max_n, log)
    return log.summary()


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupframes",
        description="Construct and analyze low-coherence group frames.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p):
        p.add_argument("--family", choices=["prime-cyclic", "cyclic", "abelian", "dihedral"])
        p.add_argument("--n", help="modulus (comma list of factor orders for abelian)")
        p.add_argument("--m", type=int, help="subgroup order / dimension")
        p.add_argument("--exponents", help="comma list; ';'-separated lists for abelian")
        p.add_argument("--twist", type=int, help="dihedral conjugation exponent")
        p.add_argument("--seed", type=int, help="seed for randomized commands")

    p_build = sub.add_parser("build", help="construct a frame and write a FRM1 file")
    add_spec_flags(p_build)
    p_build.add_argument("--out", help="output path (defaults to stdout)")
    p_build.set_defaults(func=cmd_build)

    p_an = sub.add_parser("analyze", help="report coherence and bounds for a frame")
    add_spec_flags(p_an)
    p_an.add_argument("--in", dest="infile", help="FRM1 file to analyze")
    p_an.set_defaults(func=cmd_analyze)

    p_t1 = sub.add_parser("table1", help="reproduce the 13-row comparison table")
    p_t1.add_argument("--seed", type=int, help="base seed for the random columns")
    p_t1.add_argument("--rows", help="filter, e.g. 251:125,499:166")
    p_t1.set_defaults(func=cmd_table1)

    p_b = sub.add_parser("bounds", help="tabulate bound curves against m")
    p_b.add_argument("--r", type=int, required=True, help="number of cosets")
    p_b.add_argument("--m-min", type=int, default=2)
    p_b.add_argument("--m-max", type=int, default=200)
    p_b.add_argument("--m-step", type=int, default=1)
    p_b.set_defaults(func=cmd_bounds)

    p_v = sub.add_parser("verify", help="run an exhaustive invariant suite")
    p_v.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p_v.add_argument("--max-n", type=int, help="largest modulus to sweep")
    p_v.add_argument("--seed", type=int, help="seed for sampled suites")
    p_v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
