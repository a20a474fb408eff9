"""Graded Artinian quotient analysis.

A :class:`GradedQuotient` wraps an ideal presentation with a degree cap and
caches one echelonized slice per degree.  Everything downstream is a rank
computation: Hilbert function values, multiplication-by-linear-form matrices
between standard-monomial bases, and the weak/strong Lefschetz verdicts.
All arithmetic is exact; a verdict of ``FAILS_PROBABLY`` only ever means
that every tried linear form failed, never that anything was approximated.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import exactla
from .exactla import RatMatrix
from .polyring import (
    HomogeneousPoly,
    IdealPresentation,
    _basis_index,
    ideal_degree_slice,
    mono_mul,
)

HOLDS = "HOLDS"
FAILS_PROBABLY = "FAILS_PROBABLY"
INCONCLUSIVE = "INCONCLUSIVE"

_ZERO = Fraction(0)


class NotArtinianWithinCapError(ValueError):
    """The Hilbert function stayed positive through the degree cap."""


class CapExceededError(ValueError):
    """A slice beyond the configured degree cap was requested."""


class NotGorensteinShapeError(ValueError):
    """The middle-degree shortcut needs a symmetric Hilbert function with a
    one-dimensional top."""


@dataclass(frozen=True)
class LinearForm:
    """A nonzero linear form, stored as one coefficient per variable."""

    coefficients: tuple

    def __init__(self, coefficients):
        coeffs = tuple(
            c if type(c) is Fraction else Fraction(c) for c in coefficients
        )
        if not coeffs or not any(coeffs):
            raise ValueError("linear form must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def to_poly(self) -> HomogeneousPoly:
        n = self.nvars
        return HomogeneousPoly(
            n,
            1,
            {
                tuple(1 if j == i else 0 for j in range(n)): c
                for i, c in enumerate(self.coefficients)
                if c
            },
        )

    def as_text(self, names: tuple = None) -> str:
        return self.to_poly().as_text(names)

    def __str__(self) -> str:
        return self.as_text()


def fixed_candidate(nvars: int) -> LinearForm:
    """The deterministic first candidate: first variable minus the others."""
    return LinearForm((1,) + (-1,) * (nvars - 1))


@dataclass(frozen=True)
class SearchStrategy:
    """Random search settings for certificate hunting.

    ``trials`` random forms are tried after the fixed candidate; coefficients
    are drawn uniformly from the nonzero integers of magnitude at most
    ``bound``.  ``seed`` may be an int or a string and fully determines the
    draw sequence.
    """

    trials: int = 8
    bound: int = 10_000
    seed: object = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.bound < 1:
            raise ValueError("bound must be at least 1")


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function values h(0..socle_degree); the next value is zero."""

    h: tuple
    socle_degree: int


@dataclass(frozen=True)
class DegreeRank:
    degree: int
    dim_from: int
    dim_to: int
    rank: int
    maximal: bool


@dataclass(frozen=True)
class PowerRank:
    degree: int
    power: int
    dim_from: int
    dim_to: int
    rank: int
    maximal: bool


@dataclass(frozen=True)
class WlpReport:
    verdict: str
    certificate_form: LinearForm | None
    per_degree: tuple
    strategy: dict = field(compare=False)


@dataclass(frozen=True)
class SlpReport:
    verdict: str
    certificate_form: LinearForm | None
    per_power: tuple
    strategy: dict = field(compare=False)


def is_gorenstein_symmetric(data: HilbertData) -> bool:
    """True when the Hilbert vector is palindromic with a one-dimensional
    top degree."""
    return data.h[-1] == 1 and data.h == tuple(reversed(data.h))


def _random_form(rng: random.Random, nvars: int, bound: int) -> LinearForm:
    coeffs = []
    for _ in range(nvars):
        c = 0
        while c == 0:
            c = rng.randint(-bound, bound)
        coeffs.append(c)
    return LinearForm(coeffs)


class GradedQuotient:
    """Quotient of a polynomial ring by a homogeneous ideal, studied degree
    by degree up to a cap.

    The default cap is the sum of the generator degrees, a safe ceiling for
    complete-intersection-like inputs; pass ``degree_cap`` explicitly for
    anything exotic.  Slices are cached, so repeated Hilbert or rank queries
    echelonize each degree once.
    """

    def __init__(self, ideal: IdealPresentation, degree_cap: int | None = None):
        if degree_cap is None:
            degree_cap = sum(g.degree for g in ideal.generators)
        if degree_cap < 1:
            raise ValueError("degree cap must be positive")
        self.ideal = ideal
        self.degree_cap = degree_cap
        self._slices = {}
        self._hilbert = None
        self._powers = {}

    def slice(self, degree: int):
        if degree > self.degree_cap:
            raise CapExceededError(
                f"degree {degree} exceeds the cap {self.degree_cap}"
            )
        sl = self._slices.get(degree)
        if sl is None:
            sl = ideal_degree_slice(self.ideal, degree)
            self._slices[degree] = sl
        return sl

    def hilbert(self, degree: int) -> int:
        """dim of the degree-``degree`` graded piece of the quotient."""
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        return len(self.slice(degree).standard_monomials)

    def hilbert_data(self) -> HilbertData:
        """Hilbert values through the socle degree.

        Raises :class:`NotArtinianWithinCapError` when no zero value appears
        by the cap; once a graded piece vanishes every later one does, so the
        first zero ends the scan.
        """
        if self._hilbert is None:
            values = []
            for d in range(self.degree_cap + 1):
                h = self.hilbert(d)
                if h == 0:
                    self._hilbert = HilbertData(tuple(values), d - 1)
                    break
                values.append(h)
            else:
                raise NotArtinianWithinCapError(
                    f"Hilbert function still positive at the cap "
                    f"{self.degree_cap}"
                )
        return self._hilbert

    def _power_poly(self, form: LinearForm, power: int) -> HomogeneousPoly:
        key = (form.coefficients, power)
        poly = self._powers.get(key)
        if poly is None:
            if power == 1:
                poly = form.to_poly()
            else:
                poly = self._power_poly(form, power - 1) * form.to_poly()
            self._powers[key] = poly
        return poly

    def multiplication_matrix(
        self, form: LinearForm, degree: int, power: int = 1
    ) -> RatMatrix:
        """Matrix of multiplication by ``form**power`` from the degree-d
        standard-monomial basis to the degree-(d+power) one.

        Rows are indexed by the target basis, columns by the source basis, so
        the shape is h(d+power) by h(d).
        """
        if degree < 0 or power < 1:
            raise ValueError("need degree >= 0 and power >= 1")
        if form.nvars != self.ideal.nvars:
            raise ValueError("form variable count mismatch")
        if degree + power > self.degree_cap:
            raise CapExceededError(
                f"degree {degree + power} exceeds the cap {self.degree_cap}"
            )
        src = self.slice(degree)
        dst = self.slice(degree + power)
        poly = self._power_poly(form, power)
        index = _basis_index(self.ideal.nvars, degree + power)
        row_of = {col: i for i, col in enumerate(dst.standard_columns)}
        entries = {}
        terms = list(poly.terms.items())
        for j, mono in enumerate(src.standard_monomials):
            vec = {index[mono_mul(t, mono)]: c for t, c in terms}
            rem = exactla.reduce_mod_echelon(dst.echelon, vec)
            for col, value in rem.items():
                entries[(row_of[col], j)] = value
        return RatMatrix(
            len(dst.standard_monomials), len(src.standard_monomials), entries
        )

    def certify(self, form: LinearForm) -> tuple:
        """Scan every consecutive degree pair for maximal rank under the
        form; returns (all maximal, per-degree records)."""
        data = self.hilbert_data()
        per = []
        ok = True
        for d in range(data.socle_degree):
            dim_from = data.h[d]
            dim_to = data.h[d + 1]
            expected = min(dim_from, dim_to)
            if expected == 0:
                r = 0
            else:
                r = exactla.rank(self.multiplication_matrix(form, d, 1))
            maximal = r == expected
            ok = ok and maximal
            per.append(DegreeRank(d, dim_from, dim_to, r, maximal))
        return ok, tuple(per)

    def certify_powers(self, form: LinearForm) -> tuple:
        """Maximal-rank scan for every power and compatible degree."""
        data = self.hilbert_data()
        per = []
        ok = True
        for power in range(1, data.socle_degree + 1):
            for d in range(data.socle_degree - power + 1):
                dim_from = data.h[d]
                dim_to = data.h[d + power]
                expected = min(dim_from, dim_to)
                if expected == 0:
                    r = 0
                else:
                    r = exactla.rank(
                        self.multiplication_matrix(form, d, power)
                    )
                maximal = r == expected
                ok = ok and maximal
                per.append(PowerRank(d, power, dim_from, dim_to, r, maximal))
        return ok, tuple(per)

    def _search(self, scan, strategy: SearchStrategy | None) -> tuple:
        strategy = strategy or SearchStrategy()
        meta = {
            "trials": strategy.trials,
            "bound": strategy.bound,
            "seed": strategy.seed,
        }
        fixed = fixed_candidate(self.ideal.nvars)
        try:
            ok, per = scan(fixed)
            if ok:
                meta.update(certificate="fixed", random_trials_used=0)
                return HOLDS, fixed, per, meta
            rng = random.Random(strategy.seed)
            last_per = per
            for t in range(strategy.trials):
                form = _random_form(rng, self.ideal.nvars, strategy.bound)
                ok, per = scan(form)
                if ok:
                    meta.update(certificate="random", random_trials_used=t + 1)
                    return HOLDS, form, per, meta
                last_per = per
        except CapExceededError:
            meta.update(certificate=None, random_trials_used=0)
            return INCONCLUSIVE, None, (), meta
        meta.update(certificate=None, random_trials_used=strategy.trials)
        return FAILS_PROBABLY, None, last_per, meta

    def check_wlp(self, strategy: SearchStrategy | None = None) -> WlpReport:
        """Hunt for a single linear form with maximal rank between every
        consecutive pair of degrees.

        ``HOLDS`` carries the certificate and its full per-degree scan;
        ``FAILS_PROBABLY`` reports the last random trial's scan after the
        fixed candidate and all random draws failed.
        """
        verdict, cert, per, meta = self._search(self.certify, strategy)
        return WlpReport(verdict, cert, per, meta)

    def check_slp(self, strategy: SearchStrategy | None = None) -> SlpReport:
        """Like :meth:`check_wlp` but over all powers of the form."""
        verdict, cert, per, meta = self._search(self.certify_powers, strategy)
        return SlpReport(verdict, cert, per, meta)

    def check_wlp_gorenstein_middle(self, form: LinearForm) -> bool:
        """Middle-degree surjectivity test for symmetric quotients.

        For a quotient whose Hilbert vector is palindromic with top value 1,
        multiplication by the form out of the middle degree is surjective
        exactly when the form certifies every degree, so one rank decides.
        """
        data = self.hilbert_data()
        if not is_gorenstein_symmetric(data):
            raise NotGorensteinShapeError(
                f"Hilbert vector {data.h} is not symmetric with top 1"
            )
        middle = data.socle_degree // 2
        target = middle + 1
        if target > data.socle_degree:
            return True
        r = exactla.rank(self.multiplication_matrix(form, middle, 1))
        return data.h[target] - r == 0

    def colon_slice_dim(self, divisor: HomogeneousPoly, degree: int) -> int:
        return _colon_slice_dim(self.ideal, divisor, degree, self.slice)

    def quotient_vector(self, poly: HomogeneousPoly) -> dict:
        """Coordinates of a polynomial's residue on the standard monomials
        of its degree."""
        sl = self.slice(poly.degree)
        index = _basis_index(self.ideal.nvars, poly.degree)
        vec = {index[m]: c for m, c in poly.terms.items()}
        return exactla.reduce_mod_echelon(sl.echelon, vec)


def _colon_slice_dim(ideal, divisor, degree, slice_provider) -> int:
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if divisor.is_zero():
        raise ValueError("divisor must be nonzero")
    if divisor.nvars != ideal.nvars:
        raise ValueError("divisor variable count mismatch")
    from .polyring import monomial_basis

    target = slice_provider(degree + divisor.degree)
    index = _basis_index(ideal.nvars, target.degree)
    row_of = {col: i for i, col in enumerate(target.standard_columns)}
    source = monomial_basis(ideal.nvars, degree)
    entries = {}
    terms = list(divisor.terms.items())
    for j, mono in enumerate(source):
        vec = {index[mono_mul(t, mono)]: c for t, c in terms}
        rem = exactla.reduce_mod_echelon(target.echelon, vec)
        for col, value in rem.items():
            entries[(row_of[col], j)] = value
    matrix = RatMatrix(len(target.standard_monomials), len(source), entries)
    return len(source) - exactla.rank(matrix)


def colon_slice_dim(
    ideal: IdealPresentation, divisor: HomogeneousPoly, degree: int
) -> int:
    """dim of the degree-``degree`` piece of the colon ideal (ideal : divisor).

    A polynomial of that degree lies in the colon exactly when its product
    with the divisor falls into the ideal, so the answer is the kernel
    dimension of multiply-then-reduce; a degree-zero divisor recovers the
    slice dimension of the ideal itself.
    """
    return _colon_slice_dim(ideal, divisor, degree, lambda d: ideal_degree_slice(ideal, d))


def residue_membership(ideal: IdealPresentation, degree: int) -> list:
    """Per-monomial membership flags for a two-variable ideal slice.

    Entry ``i`` reports whether the degree-``degree`` monomial with second
    exponent ``i`` lies in the slice, i.e. whether appending its row to the
    echelon form fails to grow the rank.
    """
    if ideal.nvars != 2:
        raise ValueError("residue membership expects a two-variable ideal")
    sl = ideal_degree_slice(ideal, degree)
    out = []
    one = Fraction(1)
    for i in range(degree + 1):
        rem = exactla.reduce_mod_echelon(sl.echelon, {i: one})
        out.append(not rem)
    return out
