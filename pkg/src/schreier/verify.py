"""Grid verification suites: every identity checked over explicit ranges.

Each suite sweeps a parameter grid in sorted order, compares two or
more independently computed values per cell, and returns a
:class:`VerifyReport` listing any disagreements.  Suites never stop at
the first failure; the report carries them all, so a regression shows
its full extent.  Everything here is deterministic -- same bounds,
same report.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bijections import (
    GapSet,
    attach_window,
    collapse_gaps,
    expand_gaps,
    gap_window,
    inclusion_exclusion_decomposition,
    strip_window,
)
from .counting import (
    binomial,
    count_schreier_direct,
    count_schreier_recurrence,
    schreier_sequence,
)
from .enumeration import (
    count_interval_bruteforce,
    count_schreier_bruteforce,
    enumerate_schreier,
)
from .sets import FiniteSet, Ratio
from .turan import (
    interval_count_closed,
    interval_count_sum,
    turan_edges_construction,
    turan_edges_formula,
    verify_turan_identity,
)


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one suite run: grid size, case count, failures."""

    suite: str
    grid: str
    cases: int
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_counterexample(self) -> str | None:
        return self.failures[0] if self.failures else None

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        head = (
            f"{self.suite}: {status} "
            f"({self.cases} cases over {self.grid}, {len(self.failures)} failures)"
        )
        if self.failures:
            return head + f"\nfirst counterexample: {self.failures[0]}"
        return head


def recurrence_suite(p_max: int = 4, q_max: int = 4, n_max: int = 20) -> VerifyReport:
    """Recurrence against the brute-force oracle, cell by cell."""
    failures: list[str] = []
    cases = 0
    for p in range(1, p_max + 1):
        for q in range(1, q_max + 1):
            ratio = Ratio(p, q)
            for n in range(1, n_max + 1):
                cases += 1
                fast = count_schreier_recurrence(n, ratio)
                slow = count_schreier_bruteforce(n, ratio)
                if fast != slow:
                    failures.append(
                        f"(p,q)=({p},{q}), n={n}: recurrence {fast} != oracle {slow}"
                    )
    grid = f"1<=p<={p_max}, 1<=q<={q_max}, 1<=n<={n_max}"
    return VerifyReport("recurrence", grid, cases, tuple(failures))


def formula_suite(p_max: int = 6, q_max: int = 6, n_max: int = 300) -> VerifyReport:
    """Recurrence against the independent direct formula."""
    failures: list[str] = []
    cases = 0
    for p in range(1, p_max + 1):
        for q in range(1, q_max + 1):
            ratio = Ratio(p, q)
            for n in range(1, n_max + 1):
                cases += 1
                fast = count_schreier_recurrence(n, ratio)
                direct = count_schreier_direct(n, ratio)
                if fast != direct:
                    failures.append(
                        f"(p,q)=({p},{q}), n={n}: recurrence {fast} != direct {direct}"
                    )
    grid = f"1<=p<={p_max}, 1<=q<={q_max}, 1<=n<={n_max}"
    return VerifyReport("formula", grid, cases, tuple(failures))


def scale_invariance_suite(
    p_max: int = 3,
    q_max: int = 3,
    n_max: int = 200,
    factors: tuple[int, ...] = (2, 3, 5),
) -> VerifyReport:
    """(p, q) and (kp, kq) must produce identical sequences.

    The scaled ratio drives a recurrence of different depth, so this is
    a real cross-check of the engine, not a tautology.
    """
    failures: list[str] = []
    cases = 0
    for p in range(1, p_max + 1):
        for q in range(1, q_max + 1):
            base = schreier_sequence(Ratio(p, q), n_max)
            for k in factors:
                scaled = schreier_sequence(Ratio(k * p, k * q), n_max)
                for n in range(n_max + 1):
                    cases += 1
                    if base[n] != scaled[n]:
                        failures.append(
                            f"(p,q)=({p},{q}), k={k}, n={n}: "
                            f"{base[n]} != {scaled[n]}"
                        )
    grid = f"1<=p<={p_max}, 1<=q<={q_max}, 0<=n<={n_max}, k in {factors}"
    return VerifyReport("scale-invariance", grid, cases, tuple(failures))


def gap_bijection_suite(p_max: int = 3, q_max: int = 3, n_max: int = 14) -> VerifyReport:
    """Gap-collapsing maps checked as actual bijections.

    For every grid cell and every nonempty gap choice: the map on the
    gap-avoiding members must be injective, land exactly on the
    enumerated family at n - k, and round-trip through its inverse.
    """
    failures: list[str] = []
    cases = 0
    for p in range(1, p_max + 1):
        for q in range(1, q_max + 1):
            ratio = Ratio(p, q)
            listings = {
                m: enumerate_schreier(m, ratio).members
                for m in range(1, n_max + 1)
            }
            for n in range(p + q, n_max + 1):
                window = gap_window(n, ratio)
                members = listings[n]
                for size in range(1, q + 1):
                    for chosen in combinations(window, size):
                        cases += 1
                        label = f"(p,q)=({p},{q}), n={n}, gaps={chosen}"
                        gaps = GapSet(n, ratio, chosen)
                        avoiders = [
                            fs for fs in members if not set(fs) & set(chosen)
                        ]
                        images = [collapse_gaps(fs, gaps) for fs in avoiders]
                        if len(set(images)) != len(images):
                            failures.append(f"{label}: map is not injective")
                            continue
                        if set(images) != set(listings[n - size]):
                            failures.append(
                                f"{label}: image differs from the family at n={n - size}"
                            )
                            continue
                        if any(
                            expand_gaps(image, gaps) != fs
                            for fs, image in zip(avoiders, images)
                        ):
                            failures.append(f"{label}: inverse does not round-trip")
    grid = f"1<=p<={p_max}, 1<=q<={q_max}, p+q<=n<={n_max}, all gap choices"
    return VerifyReport("gap-bijections", grid, cases, tuple(failures))


def window_bijection_suite(
    p_max: int = 3, q_max: int = 3, n_max: int = 14
) -> VerifyReport:
    """Window strip/attach maps and the layered recount, same grid.

    The strip map must biject the full-window members onto the family
    at n - p - q (vacuously when there are none), and the
    inclusion-exclusion recount must reproduce the oracle size with
    every layer weighing C(q, i) times the family size i steps down.
    """
    failures: list[str] = []
    cases = 0
    for p in range(1, p_max + 1):
        for q in range(1, q_max + 1):
            ratio = Ratio(p, q)
            listings = {
                m: enumerate_schreier(m, ratio).members
                for m in range(1, n_max + 1)
            }
            for n in range(p + q, n_max + 1):
                cases += 1
                label = f"(p,q)=({p},{q}), n={n}"
                window = gap_window(n, ratio)
                members = listings[n]
                holders = [fs for fs in members if all(w in fs for w in window)]
                m = n - p - q
                target: tuple[FiniteSet, ...] = listings[m] if m >= 1 else ()
                images = [strip_window(fs, ratio, n) for fs in holders]
                if len(set(images)) != len(images):
                    failures.append(f"{label}: strip map is not injective")
                elif set(images) != set(target):
                    failures.append(
                        f"{label}: strip image differs from the family at n={m}"
                    )
                elif any(
                    attach_window(image, ratio, n) != fs
                    for fs, image in zip(holders, images)
                ):
                    failures.append(f"{label}: attach does not invert strip")

                cases += 1
                dec = inclusion_exclusion_decomposition(n, ratio)
                if dec.assembled != len(members):
                    failures.append(
                        f"{label}: assembled {dec.assembled} != oracle {len(members)}"
                    )
                else:
                    for i, layer in enumerate(dec.layer_sums, start=1):
                        expected = binomial(q, i) * count_schreier_recurrence(
                            n - i, ratio
                        )
                        if layer != expected:
                            failures.append(
                                f"{label}: layer {i} is {layer}, expected {expected}"
                            )
                            break
    grid = f"1<=p<={p_max}, 1<=q<={q_max}, p+q<=n<={n_max}"
    return VerifyReport("window-bijections", grid, cases, tuple(failures))


def interval_agreement_suite(p_max: int = 10, n_max: int = 200) -> VerifyReport:
    """Interval counts three ways: summed, closed form, brute force."""
    failures: list[str] = []
    cases = 0
    for p in range(1, p_max + 1):
        for n in range(1, n_max + 1):
            cases += 1
            summed = interval_count_sum(n, p)
            closed = interval_count_closed(n, p)
            brute = count_interval_bruteforce(n, p)
            if not (summed == closed == brute):
                failures.append(
                    f"n={n}, p={p}: sum {summed}, closed {closed}, brute {brute}"
                )
    grid = f"1<=p<={p_max}, 1<=n<={n_max}"
    return VerifyReport("interval-agreement", grid, cases, tuple(failures))


def turan_cross_suite(
    p_max: int = 20, n_max: int = 300, quarter_n_max: int = 100
) -> VerifyReport:
    """Edge formula against the from-parts count, plus quarter squares.

    The second leg pins the two-part column to floor(n^2 / 4).
    """
    failures: list[str] = []
    cases = 0
    for p in range(1, p_max + 1):
        for n in range(p, n_max + 1):
            cases += 1
            by_formula = turan_edges_formula(n, p)
            by_parts = turan_edges_construction(n, p)
            if by_formula != by_parts:
                failures.append(
                    f"n={n}, p={p}: formula {by_formula} != construction {by_parts}"
                )
    for n in range(1, quarter_n_max + 1):
        cases += 1
        got = turan_edges_formula(n, 2)
        if got != n * n // 4:
            failures.append(f"n={n}, p=2: {got} != floor(n^2/4) = {n * n // 4}")
    grid = f"1<=p<={p_max}, p<=n<={n_max}; two parts up to n={quarter_n_max}"
    return VerifyReport("turan-cross", grid, cases, tuple(failures))


def turan_identity_suite(
    p_max: int = 50, n_max: int = 500, enum_limit: int = 200
) -> VerifyReport:
    """Interval count vs Turán edges over the full claimed range.

    The brute-force interval leg is quadratic, so it only joins for
    n <= enum_limit; the other four legs run everywhere.
    """
    failures: list[str] = []
    cases = 0
    for p in range(1, p_max + 1):
        for n in range(p, n_max + 1):
            cases += 1
            report = verify_turan_identity(
                n, p, include_enumeration=n <= enum_limit
            )
            if not report.passed:
                failures.append(
                    f"n={n}, p={p}: intervals closed {report.interval_closed} / "
                    f"sum {report.interval_sum} / enum {report.interval_enumeration}, "
                    f"edges formula {report.turan_formula} / "
                    f"construction {report.turan_construction}"
                )
    grid = f"1<=p<={p_max}, p<=n<={n_max}, enumeration leg up to n={enum_limit}"
    return VerifyReport("turan-identity", grid, cases, tuple(failures))


def run_suite(
    name: str,
    p_max: int | None = None,
    q_max: int | None = None,
    n_max: int | None = None,
) -> list[VerifyReport]:
    """Run one named suite (or 'all'), with optional bound overrides.

    Bounds left as None fall back to each suite's own defaults, which
    match the verification grids the package is shipped against.
    """
    registry = {
        "recurrence": lambda: [_run(recurrence_suite, p_max, q_max, n_max)],
        "bijections": lambda: [
            _run(gap_bijection_suite, p_max, q_max, n_max),
            _run(window_bijection_suite, p_max, q_max, n_max),
        ],
        "scale-invariance": lambda: [_run(scale_invariance_suite, p_max, q_max, n_max)],
        "turan-identity": lambda: [_run(turan_identity_suite, p_max, None, n_max)],
    }
    if name == "all":
        return [report for make in registry.values() for report in make()]
    if name not in registry:
        raise ValueError(f"unknown suite {name!r}")
    return registry[name]()


def _run(suite, *bounds) -> VerifyReport:
    kwargs = {}
    for key, value in zip(("p_max", "q_max", "n_max"), bounds):
        if value is not None:
            kwargs[key] = value
    return suite(**kwargs)
