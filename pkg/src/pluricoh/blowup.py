"""Anticanonical section counts for blow-ups of projective space at points.

Sections of the k-th anticanonical power on the blow-up of P^n at v
distinct points correspond to polynomials of degree at most (n+1)k whose
partial derivatives of every order below (n-1)k vanish at each point.
Those vanishing conditions are rows of an exact rational matrix against
the monomial basis, so each dimension is

    h0 = (number of monomials) - rank(condition matrix)

computed entirely over the rationals.  The module also ships deterministic
configuration generators (generic, collinear, on a conic, custom) and a
sweep that certifies, point replacement by point replacement, every
dimension achievable for a given number of points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_linalg import RatMatrix, Rational, binomial, rank
from .surface_invariants import h1_from_rr, h2_via_serre, invariants_blowup_p2

GENERIC_COORD_BOUND = 10**6
GENERIC_SAMPLE_ATTEMPTS = 64


class SamplingBudgetError(RuntimeError):
    """The deterministic sampler exhausted its attempt budget.

    Random rational points fail genericity with probability essentially
    zero, so running out of attempts signals a defective sampler or an
    impossible target, not bad luck.
    """


class PointFileError(ValueError):
    """A point file could not be parsed into a valid configuration."""


@dataclass(frozen=True)
class PointConfiguration:
    """v pairwise-distinct points with exact rational affine coordinates.

    Working in one affine chart means no point lies on the hyperplane at
    infinity, which is the position assumption the degree-(n+1)k polynomial
    model needs.
    """

    n: int
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ambient dimension n must be positive")
        for point in self.points:
            if len(point) != self.n:
                raise ValueError(f"point {point} does not have {self.n} coordinates")
            if not all(isinstance(c, Fraction) for c in point):
                raise ValueError("coordinates must be Fractions")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")

    @property
    def v(self) -> int:
        return len(self.points)

    @classmethod
    def from_coordinates(
        cls, coords: Sequence[Sequence[Rational]], n: int | None = None
    ) -> "PointConfiguration":
        points = tuple(tuple(Fraction(c) for c in point) for point in coords)
        if n is None:
            if not points:
                raise ValueError("cannot infer ambient dimension from an empty point list")
            n = len(points[0])
        return cls(n=n, points=points)


@dataclass(frozen=True)
class JetConditionMatrix:
    """Derivative-vanishing conditions (rows) against monomials (columns).

    Row order: points in configuration order, then derivative multi-indices
    in graded order.  Column order: monomial exponents in graded order with
    the first variable largest.  Entries are true derivatives, with the
    falling-factorial factors included; scaling rows changes no rank, but a
    single convention keeps matrices byte-reproducible.
    """

    config: PointConfiguration
    k: int
    row_labels: tuple[tuple[int, tuple[int, ...]], ...]
    col_monomials: tuple[tuple[int, ...], ...]
    matrix: RatMatrix


def _graded_exponents(n: int, max_degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples of total degree <= max_degree, graded, first variable first.

    Within each degree, tuples are listed with the leading exponent
    descending, so for n = 2 the order is 1, x, y, x^2, xy, y^2, ...
    """
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            extend(prefix + (e,), remaining - e, slots - 1)

    for degree in range(max_degree + 1):
        extend((), degree, n)
    return out


def _derivative_at(
    beta: tuple[int, ...], alpha: tuple[int, ...], point: tuple[Fraction, ...]
) -> Fraction:
    """Value at `point` of the alpha-th partial derivative of the monomial z^beta."""
    value = Fraction(1)
    for b, a, q in zip(beta, alpha, point):
        if a > b:
            return Fraction(0)
        coeff = 1
        for t in range(b, b - a, -1):
            coeff *= t
        value *= coeff * q ** (b - a)
    return value


def monomial_count(n: int, k: int) -> int:
    """Number of monomials of degree <= (n+1)k in n variables."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return binomial((n + 1) * k + n, n)


def jet_matrix(config: PointConfiguration, k: int) -> JetConditionMatrix:
    """Build the matrix of vanishing conditions defining h0 of power k.

    One row per (point, multi-index alpha with |alpha| < (n-1)k), one column
    per monomial of degree <= (n+1)k.  For n = 2, k = 1 the conditions
    degenerate to plain evaluation, mapping each point (x, y) to the row
    (1, x, y, x^2, xy, y^2, x^3, x^2 y, x y^2, y^3).

    n = 1 is rejected: there (n-1)k = 0 and the condition set would be
    vacuous, so the blow-up would not constrain sections at all.
    """
    if config.n < 2:
        raise ValueError("blow-ups require n >= 2; n = 1 imposes no vanishing conditions")
    if k < 1:
        raise ValueError("k must be positive")
    n = config.n
    cols = tuple(_graded_exponents(n, (n + 1) * k))
    alphas = tuple(_graded_exponents(n, (n - 1) * k - 1))
    labels = []
    entries = []
    for point_index, point in enumerate(config.points):
        for alpha in alphas:
            labels.append((point_index, alpha))
            entries.extend(_derivative_at(beta, alpha, point) for beta in cols)
    matrix = RatMatrix(rows=len(labels), cols=len(cols), entries=tuple(entries))
    return JetConditionMatrix(
        config=config,
        k=k,
        row_labels=tuple(labels),
        col_monomials=cols,
        matrix=matrix,
    )


def h0_blowup(config: PointConfiguration, k: int) -> int:
    """dim H^0 of the k-th anticanonical power on the blow-up at the points."""
    return monomial_count(config.n, k) - rank(jet_matrix(config, k).matrix)


def _rng(seed: int, *indices: int) -> random.Random:
    # String seeding hashes through sha512, so streams are stable across
    # runs and platforms and fully determined by (seed, indices).
    return random.Random(":".join(str(part) for part in (seed, *indices)))


def _sample_distinct_points(rng: random.Random, v: int) -> tuple[tuple[Fraction, Fraction], ...]:
    points: list[tuple[Fraction, Fraction]] = []
    seen = set()
    while len(points) < v:
        candidate = (
            Fraction(rng.randint(-GENERIC_COORD_BOUND, GENERIC_COORD_BOUND)),
            Fraction(rng.randint(-GENERIC_COORD_BOUND, GENERIC_COORD_BOUND)),
        )
        if candidate in seen:
            continue
        seen.add(candidate)
        points.append(candidate)
    return tuple(points)


def generate_configuration(
    kind: str,
    v: int = 0,
    seed: int = 0,
    points: Sequence[Sequence[Rational]] | None = None,
) -> PointConfiguration:
    """Produce a plane point configuration of one of the stock kinds.

    generic    v points with integer coordinates drawn deterministically
               from `seed`, resampled until the evaluation matrix for k = 1
               reaches rank min(v, 10); genericity is certified by that
               exact rank, never assumed.
    collinear  (1, 0), ..., (v, 0): for v >= 4 the evaluation rows span a
               fixed 4-dimensional space.
    on_conic   (1, 1), (2, 4), ..., (v, v^2): rows span at most 7 dimensions.
    custom     the supplied points, validated.
    """
    if kind == "custom":
        if points is None:
            raise ValueError("custom configuration requires explicit points")
        return PointConfiguration.from_coordinates(points)
    if v < 1:
        raise ValueError("v must be positive")
    if kind == "collinear":
        coords = [(Fraction(i), Fraction(0)) for i in range(1, v + 1)]
        return PointConfiguration(n=2, points=tuple(coords))
    if kind == "on_conic":
        coords = [(Fraction(i), Fraction(i * i)) for i in range(1, v + 1)]
        return PointConfiguration(n=2, points=tuple(coords))
    if kind == "generic":
        target = min(v, 10)
        for attempt in range(GENERIC_SAMPLE_ATTEMPTS):
            config = PointConfiguration(
                n=2, points=_sample_distinct_points(_rng(seed, attempt), v)
            )
            if rank(jet_matrix(config, 1).matrix) == target:
                return config
        raise SamplingBudgetError(
            f"no rank-{target} configuration of {v} points found in "
            f"{GENERIC_SAMPLE_ATTEMPTS} attempts; the sampler is defective"
        )
    raise ValueError(f"unknown configuration kind {kind!r}")


def achievable_dims(
    v: int, search_budget: int = 32, seed: int = 0
) -> list[tuple[int, PointConfiguration]]:
    """Witness every achievable value of h0 of the anticanonical bundle.

    For v >= 5 points the dimension can be anything from max(10 - v, 0)
    (generic position) up to 6 (all points on a line).  Starting from the
    collinear configuration, points are replaced one at a time by sampled
    generic ones; a replacement changes a single matrix row, so the rank
    moves by at most 1 per step and the sweep passes through every
    intermediate value.  Each witness is certified by an exact rank
    computation before it is returned.

    Returns (dimension, witness) pairs in increasing dimension order.
    Raises SamplingBudgetError if some intermediate rank cannot be realized
    within `search_budget` attempts at one step.
    """
    if v < 5:
        raise ValueError("for v <= 4 the dimension is forced to 10 - v; no sweep to run")
    if search_budget < 1:
        raise ValueError("search_budget must be positive")
    base = generate_configuration("collinear", v)
    base_rank = rank(jet_matrix(base, 1).matrix)
    if base_rank != 4:
        raise RuntimeError(f"collinear configuration produced rank {base_rank}, expected 4")
    witnesses: dict[int, PointConfiguration] = {10 - base_rank: base}
    current = list(base.points)
    for step, target_rank in enumerate(range(5, min(v, 10) + 1), start=1):
        replaced = step - 1
        for attempt in range(search_budget):
            rng = _rng(seed, step, attempt)
            candidate = (
                Fraction(rng.randint(-GENERIC_COORD_BOUND, GENERIC_COORD_BOUND)),
                Fraction(rng.randint(-GENERIC_COORD_BOUND, GENERIC_COORD_BOUND)),
            )
            trial = list(current)
            trial[replaced] = candidate
            if len(set(trial)) != v:
                continue
            config = PointConfiguration(n=2, points=tuple(trial))
            if rank(jet_matrix(config, 1).matrix) == target_rank:
                current = trial
                witnesses[10 - target_rank] = config
                break
        else:
            raise SamplingBudgetError(
                f"could not realize rank {target_rank} at step {step} "
                f"within {search_budget} attempts"
            )
    return sorted(witnesses.items())


def h1_2K(config: PointConfiguration) -> int:
    """h1 of the second canonical power on the blow-up of the plane.

    Chains Serre duality (h2(2K) = h0(-K)) and Riemann-Roch; algebraically
    this collapses to h0(-K) + v - 10, with the identity's nonnegativity
    check still applied.
    """
    if config.n != 2:
        raise ValueError("h1(2K) is implemented for blow-ups of the plane only")
    h0 = h0_blowup(config, 1)
    h2 = h2_via_serre(2, h0)
    return h1_from_rr(2, 0, h2, invariants_blowup_p2(config.v))


def parse_point_file(text: str) -> PointConfiguration:
    """Parse the plain-text point format: one point per line.

    Coordinates are exact rationals written as ``p/q`` or plain integers,
    separated by whitespace; blank lines and lines starting with '#' are
    ignored.  All points must have the same number of coordinates.
    """
    coords: list[tuple[Fraction, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            point = tuple(Fraction(token) for token in line.split())
        except (ValueError, ZeroDivisionError) as exc:
            raise PointFileError(f"line {lineno}: {exc}") from None
        coords.append(point)
    if not coords:
        raise PointFileError("no points found in file")
    arity = len(coords[0])
    for lineno_offset, point in enumerate(coords):
        if len(point) != arity:
            raise PointFileError(
                f"inconsistent coordinate count: expected {arity}, got {len(point)}"
            )
    try:
        return PointConfiguration(n=arity, points=tuple(coords))
    except ValueError as exc:
        raise PointFileError(str(exc)) from None
