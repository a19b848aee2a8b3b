# -*- coding: utf-8 -*-
"""
Exact scalars, sparse multivariate polynomials and sparse matrices.

Everything here is immutable after construction. Two ground fields are supported:

- ``QQ``      the rationals, scalars are :class:`fractions.Fraction`
- ``GF(p)``   a prime field, scalars are :class:`Residue`

Polynomials and matrices use the ordinary Python operators, so the same elimination and
matrix-product code runs over any of the rings defined in this package.
"""
from __future__ import annotations

import functools
import itertools
import math
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import (
    DimensionMismatchError,
    FieldError,
    InvalidInputError,
    VariableCountMismatchError,
)

Exponents = Tuple[int, ...]

# --------------------------------------------------------------------------- #
#                                   SCALARS                                   #
# --------------------------------------------------------------------------- #


class Residue:
    """A residue class modulo a prime, always stored as its representative in [0, p)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = int(value) % modulus
        self.modulus = modulus

    def _coerce(self, other: Any) -> Optional[int]:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise FieldError(f"Cannot mix residues mod {self.modulus} and mod {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        if isinstance(other, Fraction):
            den = other.denominator % self.modulus
            if den == 0:
                raise FieldError(f"{other} has no image in GF({self.modulus})")
            return (other.numerator * pow(den, -1, self.modulus)) % self.modulus
        return None

    def __add__(self, other: Any) -> "Residue":
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Residue":
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value - v, self.modulus)

    def __rsub__(self, other: Any) -> "Residue":
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(v - self.value, self.modulus)

    def __mul__(self, other: Any) -> "Residue":
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.modulus}")
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other: Any) -> "Residue":
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * Residue(v, self.modulus).inverse()

    def __rtruediv__(self, other: Any) -> "Residue":
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(v, self.modulus) * self.inverse()

    def __pow__(self, exponent: int) -> "Residue":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.modulus), self.modulus)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} mod {self.modulus}"


Scalar = Union[Fraction, Residue]


class Field(ABC):
    """A ground field. Calling the field coerces ints, fractions and strings into it."""

    name: str
    characteristic: int

    @abstractmethod
    def __call__(self, value: Any) -> Scalar: ...

    @abstractmethod
    def format(self, value: Scalar) -> str: ...

    def zero(self) -> Scalar:
        return self(0)

    def one(self) -> Scalar:
        return self(1)

    def parse(self, text: str) -> Scalar:
        return self(text)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class RationalField(Field):
    name: str = "QQ"
    characteristic: int = 0

    def __call__(self, value: Any) -> Fraction:
        if isinstance(value, Residue):
            raise FieldError("A residue mod p cannot be lifted to QQ")
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise InvalidInputError(f"Not a rational number: {value!r}") from e
        return Fraction(value)

    def format(self, value: Scalar) -> str:
        v = self(value)
        return f"{v.numerator}/{v.denominator}"


_MOD_SUFFIX = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*(?:mod\s+(\d+))?\s*$")


@dataclass(frozen=True)
class PrimeField(Field):
    p: int = 2

    def __post_init__(self) -> None:
        if self.p < 2 or any(self.p % k == 0 for k in range(2, math.isqrt(self.p) + 1)):
            raise FieldError(f"GF({self.p}) is not a prime field")

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"GF({self.p})"

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.p

    def __call__(self, value: Any) -> Residue:
        if isinstance(value, Residue):
            if value.modulus != self.p:
                raise FieldError(f"Residue mod {value.modulus} is not in {self.name}")
            return value
        if isinstance(value, str):
            m = _MOD_SUFFIX.match(value)
            if not m:
                raise InvalidInputError(f"Not an element of {self.name}: {value!r}")
            if m.group(2) is not None and int(m.group(2)) != self.p:
                raise FieldError(f"{value!r} is not written mod {self.p}")
            return Residue(0, self.p) + Fraction(m.group(1))
        if isinstance(value, Fraction):
            return Residue(0, self.p) + value
        return Residue(int(value), self.p)

    def format(self, value: Scalar) -> str:
        return f"{self(value).value} mod {self.p}"


QQ = RationalField()

_FIELD_SPEC = re.compile(r"^\s*(?:GF\s*\(\s*(\d+)\s*\)|(\d+)|(QQ|Q))\s*$", re.IGNORECASE)


@functools.lru_cache(maxsize=None)
def _field_for(spec: str) -> Field:
    m = _FIELD_SPEC.match(spec)
    if not m:
        raise FieldError(f"Unknown field specification {spec!r}; use QQ, GF(p) or p")
    if m.group(3):
        return QQ
    return PrimeField(int(m.group(1) or m.group(2)))


def get_field(spec: Union[str, int, Field, None]) -> Field:
    """Resolve ``"QQ"``, ``"GF(5)"``, ``"5"``, ``5`` or an existing :class:`Field`."""
    if spec is None:
        return QQ
    if isinstance(spec, Field):
        return spec
    return _field_for(str(spec))


# --------------------------------------------------------------------------- #
#                          MONOMIALS / TERM ORDERS                            #
# --------------------------------------------------------------------------- #


def grevlex_key(exponents: Exponents) -> Tuple[int, Exponents]:
    """Sort key that lists monomials in *descending* graded reverse lexicographic order."""
    return (-sum(exponents), tuple(reversed(exponents)))


@functools.lru_cache(maxsize=None)
def monomials_of_degree(n: int, degree: int) -> Tuple[Exponents, ...]:
    """All exponent vectors of total degree ``degree`` in ``n`` variables, grevlex descending."""
    if degree < 0 or (n == 0 and degree > 0):
        return ()
    out = []
    for combo in itertools.combinations_with_replacement(range(n), degree):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort(key=grevlex_key)
    return tuple(out)


# --------------------------------------------------------------------------- #
#                                 POLYNOMIALS                                 #
# --------------------------------------------------------------------------- #


@dataclass(frozen=True)
class PolynomialRing:
    """``field[x_1, ..., x_n]``; ``names`` only affect printing and parsing."""

    n: int
    field: Field = QQ
    names: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidInputError("Number of variables must be non-negative")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(1, self.n + 1)))
        elif len(self.names) != self.n:
            raise InvalidInputError(f"Expected {self.n} variable names, got {len(self.names)}")

    def zero(self) -> "SparsePoly":
        return SparsePoly(self, {})

    def one(self) -> "SparsePoly":
        return self.constant(1)

    def constant(self, value: Any) -> "SparsePoly":
        return SparsePoly(self, {(0,) * self.n: self.field(value)})

    def monomial(self, exponents: Sequence[int], coefficient: Any = 1) -> "SparsePoly":
        exps = tuple(int(a) for a in exponents)
        if len(exps) != self.n:
            raise VariableCountMismatchError(f"Exponent vector {exps} does not have length {self.n}")
        return SparsePoly(self, {exps: self.field(coefficient)})

    def x(self, i: int) -> "SparsePoly":
        """The variable x_i, 1-based."""
        if not 1 <= i <= self.n:
            raise InvalidInputError(f"Variable index {i} out of range 1..{self.n}")
        exps = [0] * self.n
        exps[i - 1] = 1
        return self.monomial(exps)

    @property
    def gens(self) -> Tuple["SparsePoly", ...]:
        return tuple(self.x(i) for i in range(1, self.n + 1))

    def with_field(self, new_field: Field) -> "PolynomialRing":
        return PolynomialRing(self.n, new_field, self.names)

    def parse(self, text: str) -> "SparsePoly":
        return parse_poly(text, self)

    def __call__(self, value: Any) -> "SparsePoly":
        if isinstance(value, SparsePoly):
            if value.ring.n != self.n:
                raise VariableCountMismatchError(f"{value} lives in {value.ring.n} variables, not {self.n}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)


class SparsePoly:
    """A polynomial stored as ``{exponent vector: nonzero coefficient}``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Mapping[Exponents, Any]):
        self.ring = ring
        fld = ring.field
        clean: Dict[Exponents, Scalar] = {}
        for exps, c in terms.items():
            if len(exps) != ring.n:
                raise VariableCountMismatchError(f"Exponent vector {exps} does not have length {ring.n}")
            c = fld(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean
        self._hash: Optional[int] = None

    # -- arithmetic ------------------------------------------------------- #

    def _check(self, other: "SparsePoly") -> None:
        if other.ring.n != self.ring.n:
            raise VariableCountMismatchError(
                f"Polynomials in {self.ring.n} and {other.ring.n} variables cannot be combined"
            )
        if other.ring.field != self.ring.field:
            raise FieldError(f"Polynomials over {self.ring.field} and {other.ring.field} cannot be combined")

    def _lift(self, other: Any) -> Optional["SparsePoly"]:
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Residue)):
            return self.ring.constant(other)
        return None

    def __add__(self, other: Any) -> "SparsePoly":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in o.terms.items():
            out[exps] = out[exps] + c if exps in out else c
        return SparsePoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> "SparsePoly":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "SparsePoly":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "SparsePoly":
        if isinstance(other, (int, Fraction, Residue)):
            c = self.ring.field(other)
            return SparsePoly(self.ring, {e: v * c for e, v in self.terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise InvalidInputError("Negative powers of polynomials are not defined")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure -------------------------------------------------------- #

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparsePoly):
            return self.ring.n == other.ring.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, Residue)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.n, frozenset(self.terms.items())))
        return self._hash

    @property
    def degree(self) -> Optional[int]:
        """Total degree, ``None`` for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Scalar:
        return self.terms.get((0,) * self.ring.n, self.ring.field.zero())

    def sorted_terms(self) -> List[Tuple[Exponents, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]))

    def substitute(self, images: Sequence["SparsePoly"]) -> "SparsePoly":
        """Apply the ring map ``x_i -> images[i]`` (all images in one target ring)."""
        if len(images) != self.ring.n:
            raise VariableCountMismatchError(f"Need {self.ring.n} images, got {len(images)}")
        if not images:
            target = self.ring
            return SparsePoly(target, dict(self.terms))
        target = images[0].ring
        powers: Dict[Tuple[int, int], SparsePoly] = {}
        result = target.zero()
        for exps, c in self.terms.items():
            term = target.constant(c)
            for i, a in enumerate(exps):
                if a:
                    key = (i, a)
                    if key not in powers:
                        powers[key] = images[i] ** a
                    term = term * powers[key]
            result = result + term
        return result

    def change_field(self, new_field: Field) -> "SparsePoly":
        ring = self.ring.with_field(new_field)
        return SparsePoly(ring, {e: new_field(c) for e, c in self.terms.items()})

    def to_str(self) -> str:
        """Canonical text form ``c*x1^a1*...*xn^an`` joined by `` + ``."""
        if not self.terms:
            return "0"
        fld = self.ring.field
        parts = []
        for exps, c in self.sorted_terms():
            factors = [fld.format(c)]
            factors += [f"{self.ring.names[i]}^{a}" for i, a in enumerate(exps) if a]
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"SparsePoly({self.to_str()!r})"


def poly_mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Exact product of two polynomials in the same number of variables."""
    p._check(q)
    out: Dict[Exponents, Scalar] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = c1 * c2
            out[e] = out[e] + v if e in out else v
    return SparsePoly(p.ring, out)


_TERM_SPLIT = re.compile(r"(?=[+-])")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")
_POWER = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def parse_poly(text: str, ring: PolynomialRing) -> SparsePoly:
    """
    Parse the canonical form and friendlier hand-written input such as ``"x1^2 - 3*x2*x3"``.

    Coefficients may be written ``a/b`` or ``k mod p`` (p must match the ring's field).
    """
    src = text.strip()
    if isinstance(ring.field, PrimeField):
        def _strip_mod(m: re.Match) -> str:
            if int(m.group(1)) != ring.field.p:
                raise FieldError(f"{text!r} uses a modulus other than {ring.field.p}")
            return ""
        src = re.sub(r"\s*mod\s+(\d+)", _strip_mod, src)
    src = src.replace(" ", "")
    if src in ("", "0"):
        return ring.zero()
    index = {name: i for i, name in enumerate(ring.names)}
    result = ring.zero()
    sign = 1
    for chunk in _TERM_SPLIT.split(src):
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        if not chunk:
            continue
        coeff = Fraction(sign)
        sign = 1
        exps = [0] * ring.n
        for factor in chunk.split("*"):
            if _NUMBER.match(factor):
                coeff *= Fraction(factor)
                continue
            m = _POWER.match(factor)
            if not m or m.group(1) not in index:
                raise InvalidInputError(f"Cannot parse factor {factor!r} in {text!r}")
            exps[index[m.group(1)]] += int(m.group(2) or 1)
        result = result + ring.monomial(exps, ring.field(coeff))
    return result


# --------------------------------------------------------------------------- #
#                               SPARSE MATRICES                               #
# --------------------------------------------------------------------------- #


class SparseMatrix:
    """
    Dictionary-of-keys matrix over any ring exposing ``zero()`` (a field, a polynomial ring,
    an exterior algebra). Only nonzero entries are stored.
    """

    __slots__ = ("nrows", "ncols", "ring", "entries")

    def __init__(self, nrows: int, ncols: int, ring: Any, entries: Optional[Mapping[Tuple[int, int], Any]] = None):
        if nrows < 0 or ncols < 0:
            raise DimensionMismatchError(f"Invalid shape {nrows}x{ncols}")
        self.nrows = nrows
        self.ncols = ncols
        self.ring = ring
        clean: Dict[Tuple[int, int], Any] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise DimensionMismatchError(f"Entry ({i}, {j}) outside a {nrows}x{ncols} matrix")
            if isinstance(ring, Field):
                v = ring(v)
            if v:
                clean[(i, j)] = v
        self.entries = clean

    # -- constructors ----------------------------------------------------- #

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], ring: Any, ncols: Optional[int] = None) -> "SparseMatrix":
        nrows = len(rows)
        width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
        for r in rows:
            if len(r) != width:
                raise DimensionMismatchError("Ragged rows")
        return cls(nrows, width, ring, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], ring: Any, nrows: int) -> "SparseMatrix":
        entries = {}
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise DimensionMismatchError("Ragged columns")
            for i, v in enumerate(col):
                entries[(i, j)] = v
        return cls(nrows, len(columns), ring, entries)

    @classmethod
    def identity(cls, n: int, ring: Any) -> "SparseMatrix":
        one = ring.one()
        return cls(n, n, ring, {(i, i): one for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int, ring: Any) -> "SparseMatrix":
        return cls(nrows, ncols, ring)

    # -- access ----------------------------------------------------------- #

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def get(self, i: int, j: int) -> Any:
        return self.entries.get((i, j), self.ring.zero())

    def __getitem__(self, key: Tuple[int, int]) -> Any:
        return self.get(*key)

    def items(self) -> Iterator[Tuple[Tuple[int, int], Any]]:
        return iter(sorted(self.entries.items()))

    def row(self, i: int) -> List[Any]:
        return [self.get(i, j) for j in range(self.ncols)]

    def column(self, j: int) -> List[Any]:
        return [self.get(i, j) for i in range(self.nrows)]

    def to_rows(self) -> List[List[Any]]:
        return [self.row(i) for i in range(self.nrows)]

    def is_zero(self) -> bool:
        return not self.entries

    @property
    def nnz(self) -> int:
        return len(self.entries)

    # -- algebra ---------------------------------------------------------- #

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, self.ring, {(j, i): v for (i, j), v in self.entries.items()})

    @property
    def T(self) -> "SparseMatrix":
        return self.transpose()

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"Cannot multiply {self.shape} by {other.shape}")
        by_row: Dict[int, List[Tuple[int, Any]]] = {}
        for (k, j), b in other.entries.items():
            by_row.setdefault(k, []).append((j, b))
        acc: Dict[Tuple[int, int], Any] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                v = a * b
                acc[(i, j)] = acc[(i, j)] + v if (i, j) in acc else v
        return SparseMatrix(self.nrows, other.ncols, self.ring, acc)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.matmul(other)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Cannot add {self.shape} and {other.shape}")
        acc = dict(self.entries)
        for key, v in other.entries.items():
            acc[key] = acc[key] + v if key in acc else v
        return SparseMatrix(self.nrows, self.ncols, self.ring, acc)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols, self.ring, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, c: Any) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols, self.ring, {k: v * c for k, v in self.entries.items()})

    def matvec(self, vector: Sequence[Any]) -> List[Any]:
        if len(vector) != self.ncols:
            raise DimensionMismatchError(f"Vector of length {len(vector)} does not fit {self.shape}")
        out = [self.ring.zero() for _ in range(self.nrows)]
        for (i, j), a in self.entries.items():
            if vector[j]:
                out[i] = out[i] + a * vector[j]
        return out

    def map_entries(self, fn: Callable[[Any], Any], ring: Any = None) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols, ring if ring is not None else self.ring,
                            {k: fn(v) for k, v in self.entries.items()})

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseMatrix":
        rpos = {r: a for a, r in enumerate(rows)}
        cpos = {c: b for b, c in enumerate(cols)}
        return SparseMatrix(len(rows), len(cols), self.ring,
                            {(rpos[i], cpos[j]): v for (i, j), v in self.entries.items() if i in rpos and j in cpos})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


def determinant(M: SparseMatrix) -> Any:
    """Leibniz expansion; only meant for the small maximal minors of presentation matrices."""
    if M.nrows != M.ncols:
        raise DimensionMismatchError(f"Determinant of a non-square {M.shape} matrix")
    size = M.nrows
    total = M.ring.one() if size == 0 else M.ring.zero()
    for perm in itertools.permutations(range(size)):
        term = None
        for i, j in enumerate(perm):
            v = M.entries.get((i, j))
            if v is None:
                term = None
                break
            term = v if term is None else term * v
        if term is None:
            continue
        inversions = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
        total = total - term if inversions % 2 else total + term
    return total


def lift_constant_matrix(M: SparseMatrix, ring: PolynomialRing) -> SparseMatrix:
    """View a matrix over the ground field as a matrix of constant polynomials."""
    return M.map_entries(ring.constant, ring)
