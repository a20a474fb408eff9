"""Monomials, homogeneous polynomials, and degreewise ideal slices.

Everything lives in a fixed number of variables with rational coefficients.
Monomials are bare exponent tuples, ordered graded-lexicographically with
earlier variables heaviest, so a degree-d basis lists the pure power of the
first variable first.  An ideal is presented by finitely many homogeneous
generators; its degree-d slice is the echelonized span of all monomial
multiples of the generators landing in degree d.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import exactla
from .exactla import EchelonForm, RatMatrix

Monomial = tuple

DEFAULT_NAMES = ("x", "y", "z")

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ZeroCoefficientError(ValueError):
    """The linear form does not involve the variable being eliminated."""


class PolyParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def mono_degree(mono: Monomial) -> int:
    return sum(mono)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_str(mono: Monomial, names: tuple = None) -> str:
    if names is None:
        names = DEFAULT_NAMES if len(mono) <= 3 else tuple(
            f"x{i}" for i in range(len(mono))
        )
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree: int) -> tuple:
    """All degree-``degree`` monomials in ``nvars`` variables, descending
    graded-lexicographic order (earlier variables heavier)."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        return ()
    if nvars == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        for tail in monomial_basis(nvars - 1, degree - e):
            out.append((e,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def _basis_index(nvars: int, degree: int) -> dict:
    return {m: i for i, m in enumerate(monomial_basis(nvars, degree))}


class HomogeneousPoly:
    """A homogeneous polynomial: nonzero terms of one common degree.

    The zero polynomial is representable (empty terms) and keeps its declared
    degree so arithmetic stays well typed.
    """

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars: int, degree: int, terms: Mapping):
        clean = {}
        for mono, coeff in terms.items():
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial {mono} for {nvars} variables")
            if sum(mono) != degree:
                raise ValueError(
                    f"monomial {mono} has degree {sum(mono)}, expected {degree}"
                )
            q = coeff if type(coeff) is Fraction else Fraction(coeff)
            if q:
                clean[mono] = q
        self.nvars = nvars
        self.degree = degree
        self.terms = clean

    @classmethod
    def from_terms(cls, nvars: int, terms: Mapping) -> "HomogeneousPoly":
        """Infer the degree from the nonzero terms."""
        degrees = {sum(m) for m, c in terms.items() if Fraction(c)}
        if not degrees:
            raise ValueError("cannot infer the degree of the zero polynomial")
        if len(degrees) > 1:
            raise ValueError(f"terms of mixed degrees {sorted(degrees)}")
        return cls(nvars, degrees.pop(), terms)

    @classmethod
    def monomial(cls, nvars: int, expts: Iterable, coeff=1) -> "HomogeneousPoly":
        mono = tuple(expts)
        return cls(nvars, sum(mono), {mono: coeff})

    @classmethod
    def zero(cls, nvars: int, degree: int) -> "HomogeneousPoly":
        return cls(nvars, degree, {})

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "HomogeneousPoly"):
        if self.nvars != other.nvars:
            raise ValueError("different variable counts")
        if self.degree != other.degree:
            raise ValueError(
                f"cannot combine degrees {self.degree} and {other.degree}"
            )

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        self._check_compatible(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            w = terms.get(m, _ZERO) + c
            if w:
                terms[m] = w
            else:
                terms.pop(m, None)
        out = HomogeneousPoly.__new__(HomogeneousPoly)
        out.nvars, out.degree, out.terms = self.nvars, self.degree, terms
        return out

    def __neg__(self) -> "HomogeneousPoly":
        out = HomogeneousPoly.__new__(HomogeneousPoly)
        out.nvars, out.degree = self.nvars, self.degree
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        return self + (-other)

    def scale(self, scalar) -> "HomogeneousPoly":
        q = Fraction(scalar)
        out = HomogeneousPoly.__new__(HomogeneousPoly)
        out.nvars, out.degree = self.nvars, self.degree
        out.terms = {m: c * q for m, c in self.terms.items()} if q else {}
        return out

    def multiply_monomial(self, mono: Monomial) -> "HomogeneousPoly":
        mono = tuple(mono)
        if len(mono) != self.nvars or any(e < 0 for e in mono):
            raise ValueError(f"bad monomial {mono}")
        out = HomogeneousPoly.__new__(HomogeneousPoly)
        out.nvars = self.nvars
        out.degree = self.degree + sum(mono)
        out.terms = {mono_mul(m, mono): c for m, c in self.terms.items()}
        return out

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if self.nvars != other.nvars:
            raise ValueError("different variable counts")
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = mono_mul(m1, m2)
                w = terms.get(key, _ZERO) + c1 * c2
                if w:
                    terms[key] = w
                else:
                    terms.pop(key, None)
        out = HomogeneousPoly.__new__(HomogeneousPoly)
        out.nvars = self.nvars
        out.degree = self.degree + other.degree
        out.terms = terms
        return out

    def __pow__(self, exponent: int) -> "HomogeneousPoly":
        if exponent < 0:
            raise ValueError("negative power")
        result = HomogeneousPoly(self.nvars, 0, {(0,) * self.nvars: 1})
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomogeneousPoly)
            and self.nvars == other.nvars
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.terms.items())))

    def __str__(self) -> str:
        return self.as_text()

    def as_text(self, names: tuple = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, reverse=True):
            coeff = self.terms[mono]
            body = mono_str(mono, names)
            if body == "1":
                chunk = str(abs(coeff))
            elif abs(coeff) == 1:
                chunk = body
            else:
                chunk = f"{abs(coeff)}*{body}"
            parts.append(("-" if coeff < 0 else "+", chunk))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, chunk in parts[1:]:
            text += f" {sign} {chunk}"
        return text

    def __repr__(self) -> str:
        return f"HomogeneousPoly({self.as_text()})"


@dataclass(frozen=True)
class IdealPresentation:
    """A homogeneous ideal given by finitely many nonzero generators of
    positive degree."""

    nvars: int
    generators: tuple

    def __init__(self, nvars: int, generators: Iterable):
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, HomogeneousPoly):
                raise TypeError("generators must be HomogeneousPoly")
            if g.nvars != nvars:
                raise ValueError("generator variable count mismatch")
            if g.is_zero():
                raise ValueError("zero generator")
            if g.degree < 1:
                raise ValueError("generators must have positive degree")
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "generators", gens)

    def min_degree(self) -> int:
        return min((g.degree for g in self.generators), default=0)

    def as_text(self, names: tuple = None) -> str:
        return ", ".join(g.as_text(names) for g in self.generators)


@dataclass(frozen=True)
class DegreeSlice:
    """Echelonized degree-d slice of an ideal inside the full monomial basis.

    ``standard_monomials`` are the basis monomials at non-pivot columns; they
    descend to a basis of the degree-d part of the quotient ring.
    """

    degree: int
    basis: tuple
    echelon: EchelonForm
    standard_monomials: tuple
    standard_columns: tuple

    @property
    def rank(self) -> int:
        return self.echelon.rank


def ideal_degree_slice(ideal: IdealPresentation, degree: int) -> DegreeSlice:
    """Slice of the ideal in the given degree; rank 0 when no generator
    divides into it."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    basis = monomial_basis(ideal.nvars, degree)
    index = _basis_index(ideal.nvars, degree)
    rows = []
    for g in ideal.generators:
        shift = degree - g.degree
        if shift < 0:
            continue
        terms = list(g.terms.items())
        for m in monomial_basis(ideal.nvars, shift):
            rows.append({index[mono_mul(t, m)]: c for t, c in terms})
    matrix = RatMatrix.from_row_dicts(rows, len(basis))
    if matrix.rows == 0:
        matrix = RatMatrix.zero(0, len(basis))
    ech = exactla.rref(matrix)
    pivot_set = set(ech.pivot_columns)
    standard_cols = tuple(i for i in range(len(basis)) if i not in pivot_set)
    standard = tuple(basis[i] for i in standard_cols)
    return DegreeSlice(degree, basis, ech, standard, standard_cols)


def multiply(poly: HomogeneousPoly, mono: Monomial) -> HomogeneousPoly:
    """Monomial multiple of a homogeneous polynomial."""
    return poly.multiply_monomial(mono)


def eliminate_linear_form(
    ideal: IdealPresentation, form: HomogeneousPoly, eliminated_var: int
) -> IdealPresentation:
    """Substitute the linear form's zero locus, dropping one variable.

    Solves ``form = 0`` for the eliminated variable and substitutes into each
    generator, producing a presentation in one fewer variable.  Generators
    that collapse to zero are dropped.  Accepts anything with a ``to_poly``
    method in place of a polynomial.
    """
    if hasattr(form, "to_poly"):
        form = form.to_poly()
    if form.nvars != ideal.nvars:
        raise ValueError("form variable count mismatch")
    if form.degree != 1:
        raise ValueError("form must be linear")
    if not 0 <= eliminated_var < ideal.nvars:
        raise ValueError("variable index out of range")
    unit = tuple(
        1 if i == eliminated_var else 0 for i in range(ideal.nvars)
    )
    lead = form.terms.get(unit)
    if not lead:
        raise ZeroCoefficientError(
            f"form has zero coefficient on variable {eliminated_var}"
        )
    nv = ideal.nvars - 1
    replacement_terms = {}
    for mono, coeff in form.terms.items():
        if mono == unit:
            continue
        var = mono.index(1)
        reduced = tuple(
            1 if i == (var if var < eliminated_var else var - 1) else 0
            for i in range(nv)
        )
        replacement_terms[reduced] = -coeff / lead
    replacement = HomogeneousPoly(nv, 1, replacement_terms)
    powers = {0: HomogeneousPoly(nv, 0, {(0,) * nv: 1})}

    def power(e: int) -> HomogeneousPoly:
        p = powers.get(e)
        if p is None:
            p = power(e - 1) * replacement
            powers[e] = p
        return p

    new_gens = []
    for g in ideal.generators:
        acc = {}
        for mono, coeff in g.terms.items():
            e = mono[eliminated_var]
            rest = tuple(v for i, v in enumerate(mono) if i != eliminated_var)
            for m2, c2 in power(e).terms.items():
                key = mono_mul(rest, m2)
                w = acc.get(key, _ZERO) + coeff * c2
                if w:
                    acc[key] = w
                else:
                    acc.pop(key, None)
        if acc:
            new_gens.append(HomogeneousPoly(nv, g.degree, acc))
    return IdealPresentation(nv, new_gens)


def _skip_spaces(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_int(text: str, pos: int) -> tuple:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise PolyParseError("expected an integer", start)
    return int(text[start:pos]), pos


def parse_poly(
    text: str, nvars: int = 3, names: tuple = None
) -> HomogeneousPoly:
    """Parse ``c*x^i*y^j*z^k`` terms joined by + or -.

    Coefficients may be integers or integer ratios like ``3/2``; a bare
    variable means exponent one; a bare number is a constant term.  Raises
    :class:`PolyParseError` with the offending position on malformed input.
    """
    if names is None:
        names = DEFAULT_NAMES[:nvars]
    var_index = {name: i for i, name in enumerate(names)}
    terms = {}
    pos = _skip_spaces(text, 0)
    if pos >= len(text):
        raise PolyParseError("empty polynomial", pos)
    first = True
    while pos < len(text):
        sign = 1
        pos = _skip_spaces(text, pos)
        if pos < len(text) and text[pos] in "+-−":
            if text[pos] != "+":
                sign = -1
            pos = _skip_spaces(text, pos + 1)
        elif not first:
            raise PolyParseError(f"expected + or - before {text[pos]!r}", pos)
        first = False
        coeff = Fraction(sign)
        expts = [0] * nvars
        saw_factor = False
        while True:
            pos = _skip_spaces(text, pos)
            if pos < len(text) and text[pos].isdigit():
                num, pos = _parse_int(text, pos)
                pos = _skip_spaces(text, pos)
                if pos < len(text) and text[pos] == "/":
                    den, pos = _parse_int(text, _skip_spaces(text, pos + 1))
                    if den == 0:
                        raise PolyParseError("zero denominator", pos - 1)
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
                saw_factor = True
            elif pos < len(text) and text[pos].isalpha():
                start = pos
                while pos < len(text) and (
                    text[pos].isalnum() or text[pos] == "_"
                ):
                    pos += 1
                name = text[start:pos]
                if name not in var_index:
                    raise PolyParseError(f"unknown variable {name!r}", start)
                e = 1
                pos = _skip_spaces(text, pos)
                if pos < len(text) and text[pos] == "^":
                    e, pos = _parse_int(text, _skip_spaces(text, pos + 1))
                expts[var_index[name]] += e
                saw_factor = True
            else:
                raise PolyParseError("expected a coefficient or variable", pos)
            pos = _skip_spaces(text, pos)
            if pos < len(text) and text[pos] == "*":
                pos += 1
                continue
            break
        if not saw_factor:
            raise PolyParseError("empty term", pos)
        key = tuple(expts)
        terms[key] = terms.get(key, _ZERO) + coeff
        pos = _skip_spaces(text, pos)
    nonzero = {m: c for m, c in terms.items() if c}
    if not nonzero:
        raise PolyParseError("polynomial cancels to zero", len(text) - 1)
    return HomogeneousPoly.from_terms(nvars, nonzero)


def parse_ideal(
    text: str, nvars: int = 3, names: tuple = None
) -> IdealPresentation:
    """Parse a comma-separated generator list."""
    chunks = text.split(",")
    gens = []
    offset = 0
    for chunk in chunks:
        if not chunk.strip():
            raise PolyParseError("empty generator", offset)
        try:
            gens.append(parse_poly(chunk, nvars, names))
        except PolyParseError as err:
            raise PolyParseError(
                str(err).rsplit(" (at position", 1)[0], offset + err.position
            ) from None
        offset += len(chunk) + 1
    return IdealPresentation(nvars, gens)
