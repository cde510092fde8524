"""Independent cross-check oracles and the runtime invariant suite.

The oracles here re-derive results by the most naive correct route (dense
Fraction elimination, cofactor expansion, direct lattice walks) so that
the production algorithms have something genuinely different to agree
with.  ``run_selfcheck`` sweeps every cross-check the package relies on at
a grid size controlled by a budget and reports the first counterexample
of each failing check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import blowup, exact_linalg, family, hirzebruch, surface_invariants
from .exact_linalg import RatMatrix


def naive_rank(matrix: RatMatrix) -> int:
    """Rank by plain Gaussian elimination over Fraction.

    Deliberately the dumbest correct algorithm: normalize each pivot row,
    eliminate below, count pivots.  Shares nothing with the fraction-free
    production route beyond the definition of rank.
    """
    rows = [list(matrix.row(i)) for i in range(matrix.rows)]
    r = 0
    for c in range(matrix.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(r + 1, len(rows)):
            factor = rows[i][c]
            if factor != 0:
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def naive_nullspace_dimension(matrix: RatMatrix) -> int:
    """Number of free columns after full reduced row reduction over Fraction."""
    rows = [list(matrix.row(i)) for i in range(matrix.rows)]
    pivot_cols = []
    r = 0
    for c in range(matrix.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
    return matrix.cols - len(pivot_cols)


def naive_det(matrix: RatMatrix) -> Fraction:
    """Determinant by cofactor expansion along the first row; square input only."""
    if matrix.rows != matrix.cols:
        raise ValueError("determinant requires a square matrix")
    grid = [list(matrix.row(i)) for i in range(matrix.rows)]

    def expand(rows: list[list[Fraction]]) -> Fraction:
        size = len(rows)
        if size == 0:
            return Fraction(1)
        if size == 1:
            return rows[0][0]
        total = Fraction(0)
        for j, top in enumerate(rows[0]):
            if top == 0:
                continue
            minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
            sign = -1 if j % 2 else 1
            total += sign * top * expand(minor)
        return total

    return expand(grid)


def count_sections_by_lattice_points(m: int, k: int) -> int:
    """Anticanonical section count on the twist-m surface by a bare lattice walk.

    Counts pairs (fiber power i, coefficient degree d) one at a time, with
    no closed expressions anywhere, as the second route acceptance demands.
    """
    if k == 0:
        return 1
    count = 0
    for i in range(2 * k + 1):
        bound = 2 * k + (i - k) * m
        d = 0
        while d <= bound:
            count += 1
            d += 1
    return count


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: str | None = None


def _random_matrix(rng: random.Random, rows: int, cols: int) -> RatMatrix:
    return RatMatrix.from_rows(
        [
            [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(cols)]
            for _ in range(rows)
        ]
    )


def _random_small_config(rng: random.Random, v: int) -> blowup.PointConfiguration:
    points: set[tuple[Fraction, Fraction]] = set()
    while len(points) < v:
        points.add(
            (
                Fraction(rng.randint(-60, 60), rng.randint(1, 12)),
                Fraction(rng.randint(-60, 60), rng.randint(1, 12)),
            )
        )
    return blowup.PointConfiguration(n=2, points=tuple(sorted(points)))


def run_selfcheck(budget: int = 10, seed: int = 0) -> list[CheckResult]:
    """Run the whole invariant suite at a size controlled by `budget`.

    The default budget 10 drives the standard grid (twists up to 12,
    powers up to 10, point counts up to 12).  Budget 0 runs nothing and
    returns an empty list; callers should surface that as a warning, not
    a pass of substance.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    if budget == 0:
        return []
    m_max = budget + 2
    k_max = budget
    v_max = budget + 2
    checks = [
        _check_formula_matches_enumeration(m_max, k_max),
        _check_twist_one_boundary(k_max),
        _check_enumeration_matches_lattice_walk(m_max, k_max),
        _check_h1_formula_matches_rr_chain(m_max, k_max),
        _check_noether_exactness(m_max, v_max),
        _check_bareiss_matches_naive_rank(budget, seed),
        _check_vandermonde(budget, seed),
        _check_forced_blowup_regime(budget, seed),
        _check_jet_rank_cross_check(v_max),
        _check_blowup_h1_ranges(v_max),
        _check_kodaira_jump_sweep(m_max, k_max),
        _check_low_twist_coincidence(k_max),
    ]
    return checks


def _check_formula_matches_enumeration(m_max: int, k_max: int) -> CheckResult:
    name = "hirzebruch_formula_vs_enumeration"
    cases = 0
    for m in range(2, m_max + 1):
        surface = hirzebruch.HirzebruchSurface(m)
        for k in range(1, k_max + 1):
            cases += 1
            enum = hirzebruch.dim_enumerated(surface, k)
            evaluated = hirzebruch.dim_formula(surface, k)
            if not evaluated.in_regime or evaluated.value != enum:
                return CheckResult(
                    name,
                    False,
                    cases,
                    f"m={m}, k={k}: formula {evaluated} vs enumeration {enum}",
                )
    return CheckResult(name, True, cases)


def _check_twist_one_boundary(k_max: int) -> CheckResult:
    name = "twist_one_formula_overcounts"
    surface = hirzebruch.HirzebruchSurface(1)
    cases = 0
    for k in range(1, k_max + 1):
        cases += 1
        enum = hirzebruch.dim_enumerated(surface, k)
        evaluated = hirzebruch.dim_formula(surface, k)
        ok = (
            enum == (2 * k + 1) ** 2
            and not evaluated.in_regime
            and evaluated.value > enum
        )
        if not ok:
            return CheckResult(
                name, False, cases, f"k={k}: formula {evaluated} vs enumeration {enum}"
            )
    return CheckResult(name, True, cases)


def _check_enumeration_matches_lattice_walk(m_max: int, k_max: int) -> CheckResult:
    name = "enumeration_vs_lattice_walk"
    cases = 0
    for m in range(0, m_max + 1):
        surface = hirzebruch.HirzebruchSurface(m)
        for k in range(0, k_max + 1):
            cases += 1
            enum = hirzebruch.dim_enumerated(surface, k)
            walked = count_sections_by_lattice_points(m, k)
            if enum != walked:
                return CheckResult(
                    name, False, cases, f"m={m}, k={k}: enumeration {enum} vs walk {walked}"
                )
    return CheckResult(name, True, cases)


def _check_h1_formula_matches_rr_chain(m_max: int, k_max: int) -> CheckResult:
    name = "h1_formula_vs_rr_chain"
    cases = 0
    for m in range(2, m_max + 1):
        surface = hirzebruch.HirzebruchSurface(m)
        inv = surface_invariants.invariants_hirzebruch(m)
        for k in range(2, k_max + 1):
            cases += 1
            closed = hirzebruch.h1_pluricanonical_formula(surface, k)
            h2 = surface_invariants.h2_via_serre(
                k, hirzebruch.dim_enumerated(surface, k - 1)
            )
            chained = surface_invariants.h1_from_rr(k, 0, h2, inv)
            if closed != chained:
                return CheckResult(
                    name, False, cases, f"m={m}, k={k}: closed {closed} vs chain {chained}"
                )
    return CheckResult(name, True, cases)


def _check_noether_exactness(m_max: int, v_max: int) -> CheckResult:
    name = "noether_exactness"
    cases = 0
    # The constructors raise on violation, so surviving construction is the check.
    for m in range(0, m_max + 1):
        cases += 1
        surface_invariants.invariants_hirzebruch(m)
    for v in range(0, v_max + 1):
        cases += 1
        surface_invariants.invariants_blowup_p2(v)
    return CheckResult(name, True, cases)


def _check_bareiss_matches_naive_rank(budget: int, seed: int) -> CheckResult:
    name = "production_rank_vs_naive_elimination"
    rng = random.Random(f"selfcheck-rank:{seed}")
    cases = 0
    for _ in range(4 * budget):
        rows = rng.randint(0, 8)
        cols = rng.randint(0, 10)
        matrix = _random_matrix(rng, rows, cols)
        if rng.random() < 0.5 and rows >= 2:
            # Plant a dependent row so rank-deficient inputs are exercised too.
            grid = [list(matrix.row(i)) for i in range(rows)]
            grid[rows - 1] = [2 * x for x in grid[0]]
            matrix = RatMatrix.from_rows(grid)
        cases += 1
        got = exact_linalg.rank(matrix)
        expected = naive_rank(matrix)
        if got != expected or exact_linalg.rank(matrix.transpose()) != expected:
            return CheckResult(
                name, False, cases, f"{rows}x{cols} matrix: production {got} vs naive {expected}"
            )
    return CheckResult(name, True, cases)


def _check_vandermonde(budget: int, seed: int) -> CheckResult:
    name = "vandermonde_determinant_and_rank"
    rng = random.Random(f"selfcheck-vandermonde:{seed}")
    cases = 0
    for _ in range(4 * budget):
        size = rng.randint(0, 6)
        xs = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(size)]
        cases += 1
        det = exact_linalg.vandermonde_det(xs)
        matrix = exact_linalg.vandermonde_matrix(xs)
        if det != naive_det(matrix):
            return CheckResult(name, False, cases, f"xs={xs}: det mismatch")
        distinct = len(set(xs))
        if (det != 0) != (distinct == size):
            return CheckResult(name, False, cases, f"xs={xs}: zero-pattern mismatch")
        if exact_linalg.rank(matrix) != distinct:
            return CheckResult(name, False, cases, f"xs={xs}: rank != distinct count")
    return CheckResult(name, True, cases)


def _check_forced_blowup_regime(budget: int, seed: int) -> CheckResult:
    name = "blowup_forced_regime_v_le_4"
    rng = random.Random(f"selfcheck-forced:{seed}")
    cases = 0
    for _ in range(4 * budget):
        v = rng.randint(1, 4)
        config = _random_small_config(rng, v)
        cases += 1
        h0 = blowup.h0_blowup(config, 1)
        if h0 != 10 - v:
            return CheckResult(name, False, cases, f"{config}: h0 {h0} != {10 - v}")
    return CheckResult(name, True, cases)


def _jet_corpus(v_max: int) -> list[tuple[str, blowup.PointConfiguration, int]]:
    corpus = [
        ("collinear-5", blowup.generate_configuration("collinear", 5), 1),
        (f"collinear-{v_max}", blowup.generate_configuration("collinear", v_max), 1),
        ("conic-8", blowup.generate_configuration("on_conic", min(8, v_max)), 1),
        ("generic-5", blowup.generate_configuration("generic", 5, seed=1), 1),
        ("generic-10", blowup.generate_configuration("generic", min(10, v_max), seed=2), 1),
        (f"collinear-{v_max}-k2", blowup.generate_configuration("collinear", v_max), 2),
        ("conic-6-k2", blowup.generate_configuration("on_conic", min(6, v_max)), 2),
    ]
    return corpus


def _check_jet_rank_cross_check(v_max: int) -> CheckResult:
    name = "jet_rank_production_vs_naive"
    cases = 0
    for label, config, k in _jet_corpus(v_max):
        cases += 1
        matrix = blowup.jet_matrix(config, k).matrix
        got = exact_linalg.rank(matrix)
        expected = naive_rank(matrix)
        if got != expected:
            return CheckResult(
                name, False, cases, f"{label}, k={k}: production {got} vs naive {expected}"
            )
    return CheckResult(name, True, cases)


def _check_blowup_h1_ranges(v_max: int) -> CheckResult:
    name = "blowup_h1_2K_within_range"
    cases = 0
    for label, config, k in _jet_corpus(v_max):
        if k != 1:
            continue
        cases += 1
        h1 = blowup.h1_2K(config)
        v = config.v
        low = max(0, v - 10) if v >= 5 else 0
        high = v - 4 if v >= 5 else 0
        if not low <= h1 <= high:
            return CheckResult(
                name, False, cases, f"{label}: h1(2K) = {h1} outside [{low}, {high}]"
            )
    return CheckResult(name, True, cases)


def _check_kodaira_jump_sweep(m_max: int, k_max: int) -> CheckResult:
    name = "kodaira_family_jump_exists"
    cases = 0
    for m in range(3, m_max + 1):
        for ell in range(1, m // 2 + 1):
            cases += 1
            rows = family.noninvariance_report_hirzebruch(
                family.KodairaFamily(m, ell), k_max
            )
            if not any(row.jump for row in rows):
                return CheckResult(
                    name, False, cases, f"m={m}, ell={ell}: no jump up to k={k_max}"
                )
    return CheckResult(name, True, cases)


def _check_low_twist_coincidence(k_max: int) -> CheckResult:
    name = "twists_0_1_2_share_counts"
    cases = 0
    surfaces = [hirzebruch.HirzebruchSurface(m) for m in (0, 1, 2)]
    for k in range(1, k_max + 1):
        cases += 1
        counts = {hirzebruch.dim_enumerated(s, k) for s in surfaces}
        if counts != {(2 * k + 1) ** 2}:
            return CheckResult(name, False, cases, f"k={k}: counts {sorted(counts)}")
    # The matching deformation pair must therefore never jump.
    rows = family.noninvariance_report_hirzebruch(family.KodairaFamily(2, 1), k_max)
    if any(row.jump for row in rows):
        return CheckResult(name, False, cases, "twist pair (2, 0) reported a jump")
    return CheckResult(name, True, cases)
