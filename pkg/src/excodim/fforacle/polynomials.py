"""Dense homogeneous polynomials over the table fields.

A polynomial of degree d in the r+1 variables X_0..X_r is a coefficient
vector indexed by the graded-lex monomial order with X_0 > X_1 > ... > X_r;
within a fixed total degree that is plain lex, descending in the exponent of
X_0 first.  This order is fixed for all serialization.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..combinatorics import binomial
from ..errors import ParameterError
from .fields import Field, gf


@lru_cache(maxsize=None)
def monomials(r: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of the degree-d monomials in r+1 variables, graded-lex."""
    if r < 0 or d < 0:
        raise ParameterError(f"need r >= 0 and d >= 0, got r={r}, d={d}")

    def gen(nvars, total):
        if nvars == 1:
            yield (total,)
            return
        for e0 in range(total, -1, -1):
            for rest in gen(nvars - 1, total - e0):
                yield (e0,) + rest

    return tuple(gen(r + 1, d))


@lru_cache(maxsize=None)
def monomial_index(r: int, d: int) -> dict:
    return {exp: i for i, exp in enumerate(monomials(r, d))}


def n_monomials(r: int, d: int) -> int:
    return binomial(d + r, r)


class MultiPoly:
    """Homogeneous form: a dense coefficient vector of field codes."""

    __slots__ = ("field", "r", "d", "coeffs")

    def __init__(self, field: Field, r: int, d: int, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.uint16)
        if coeffs.shape != (n_monomials(r, d),):
            raise ParameterError(
                f"coefficient vector must have length {n_monomials(r, d)} "
                f"for r={r}, d={d}, got {coeffs.shape}"
            )
        if coeffs.size and int(coeffs.max()) >= field.q:
            raise ParameterError("coefficient code out of range")
        self.field = field
        self.r = r
        self.d = d
        self.coeffs = coeffs

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: Field, r: int, d: int) -> "MultiPoly":
        return cls(field, r, d, np.zeros(n_monomials(r, d), dtype=np.uint16))

    @classmethod
    def from_terms(cls, field: Field, r: int, d: int, terms: dict) -> "MultiPoly":
        coeffs = np.zeros(n_monomials(r, d), dtype=np.uint16)
        index = monomial_index(r, d)
        for exp, code in terms.items():
            coeffs[index[tuple(exp)]] = code
        return cls(field, r, d, coeffs)

    @classmethod
    def variable(cls, field: Field, r: int, i: int) -> "MultiPoly":
        if not 0 <= i <= r:
            raise ParameterError(f"variable index {i} out of range for r={r}")
        exp = tuple(1 if j == i else 0 for j in range(r + 1))
        return cls.from_terms(field, r, 1, {exp: field.one})

    @classmethod
    def random(cls, field: Field, r: int, d: int, rng: np.random.Generator) -> "MultiPoly":
        return cls(field, r, d, rng.integers(0, field.q, size=n_monomials(r, d), dtype=np.uint16))

    # -- basic structure ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def support(self):
        """Yield (exponent tuple, coefficient code) over the nonzero terms."""
        mons = monomials(self.r, self.d)
        for i in np.flatnonzero(self.coeffs):
            yield mons[i], int(self.coeffs[i])

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.field is other.field
            and self.r == other.r
            and self.d == other.d
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((id(self.field), self.r, self.d, self.coeffs.tobytes()))

    def __repr__(self) -> str:
        terms = [f"{c}*X^{exp}" for exp, c in self.support()]
        body = " + ".join(terms) if terms else "0"
        return f"MultiPoly({self.field}, r={self.r}, d={self.d}: {body})"

    # -- arithmetic -----------------------------------------------------------

    def _check_compatible(self, other: "MultiPoly"):
        if self.field is not other.field or self.r != other.r:
            raise ParameterError("polynomials live over different rings")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        if self.d != other.d:
            raise ParameterError(f"cannot add degrees {self.d} and {other.d}")
        return MultiPoly(self.field, self.r, self.d, self.field.ADD[self.coeffs, other.coeffs])

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        f = self.field
        out = np.zeros(n_monomials(self.r, self.d + other.d), dtype=np.uint16)
        index = monomial_index(self.r, self.d + other.d)
        for ea, ca in self.support():
            for eb, cb in other.support():
                exp = tuple(x + y for x, y in zip(ea, eb))
                i = index[exp]
                out[i] = f.ADD[out[i], f.MUL[ca, cb]]
        return MultiPoly(f, self.r, self.d + other.d, out)

    def scale(self, code: int) -> "MultiPoly":
        return MultiPoly(self.field, self.r, self.d, self.field.MUL[self.coeffs, code])

    def square(self) -> "MultiPoly":
        return self * self

    def partial(self, i: int) -> "MultiPoly":
        """Formal partial derivative in X_i; terms with exponent divisible by
        the characteristic drop out."""
        if self.d < 1:
            raise ParameterError("cannot differentiate a constant form")
        f = self.field
        out = np.zeros(n_monomials(self.r, self.d - 1), dtype=np.uint16)
        index = monomial_index(self.r, self.d - 1)
        for exp, code in self.support():
            e = exp[i]
            if e == 0:
                continue
            scalar = f.from_int(e)
            if scalar == 0:
                continue
            new = tuple(x - 1 if j == i else x for j, x in enumerate(exp))
            j = index[new]
            out[j] = f.ADD[out[j], f.MUL[code, scalar]]
        return MultiPoly(f, self.r, self.d - 1, out)

    # -- integer encoding of the whole coefficient space -----------------------

    def encode(self) -> int:
        """Little-endian base-q integer encoding of the coefficient vector."""
        code = 0
        q = self.field.q
        for c in reversed(self.coeffs.tolist()):
            code = code * q + int(c)
        return code

    @classmethod
    def decode(cls, field: Field, r: int, d: int, code: int) -> "MultiPoly":
        n = n_monomials(r, d)
        coeffs = np.zeros(n, dtype=np.uint16)
        q = field.q
        for i in range(n):
            code, c = divmod(code, q)
            coeffs[i] = c
        if code:
            raise ParameterError("encoded integer out of range")
        return cls(field, r, d, coeffs)


def poly_to_line(poly: MultiPoly) -> str:
    """Exchange format: 'p e r d : c_0 c_1 ...' with graded-lex coefficients
    (residues for prime fields, log-index codes for extensions)."""
    f = poly.field
    body = " ".join(str(int(c)) for c in poly.coeffs)
    return f"{f.p} {f.e} {poly.r} {poly.d} : {body}"


def poly_from_line(line: str) -> MultiPoly:
    head, _, body = line.partition(":")
    parts = head.split()
    if len(parts) != 4:
        raise ParameterError(f"malformed polynomial line: {line!r}")
    p, e, r, d = (int(x) for x in parts)
    field = gf(p, e)
    coeffs = [int(x) for x in body.split()]
    return MultiPoly(field, r, d, coeffs)
