"""Exact Laurent polynomials in ``A`` and the 24th cyclotomic integers.

All invariants in the engine are Laurent polynomials in the bracket variable
``A``; the quantum parameter is recovered as ``q = A**-4``.  Evaluation at
the roots of unity used downstream happens in ``Z[x]/(x^8 - x^4 + 1)`` with
``x = exp(2*pi*i/24)``, so no floating point is involved.
"""

from __future__ import annotations

import cmath
import json
import re
from collections.abc import Iterable, Mapping
from types import MappingProxyType

CONDUCTOR = 24
PHI_DEGREE = 8  # deg Phi_24


class LaurentPoly:
    """Sparse Laurent polynomial in ``A`` with integer coefficients.

    Instances are immutable and kept in canonical form (no zero coefficients),
    so equality and hashing compare term maps directly.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None) -> None:
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # terms must already be canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return poly_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1:
                raise ArithmeticError("only monomials are invertible")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ArithmeticError("only unit monomials are invertible")
            return LaurentPoly._raw({e * n: c ** (-n)})
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``A**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def bar(self) -> LaurentPoly:
        """Substitute ``A -> A**-1``."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def divide_exact(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact quotient ``self / divisor``; raises ``ArithmeticError`` on a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        d_lo, d_hi = divisor.min_degree(), divisor.degree()
        lead = divisor._terms[d_hi]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - d_hi < min(rem) - d_lo:
                raise ArithmeticError("inexact Laurent division")
            c, r = divmod(rem[top], lead)
            if r:
                raise ArithmeticError("inexact Laurent division")
            shift = top - d_hi
            quot[shift] = c
            for e, dc in divisor._terms.items():
                k = e + shift
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> list[list]:
        return [[e, str(self._terms[e])] for e in sorted(self._terms)]

    @classmethod
    def from_json(cls, data: Iterable) -> LaurentPoly:
        terms: dict[int, int] = {}
        for e, c in data:
            terms[int(e)] = terms.get(int(e), 0) + int(c)
        return cls(terms)


def poly_multiply(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if len(p._terms) > len(q._terms):
        p, q = q, p
    out: dict[int, int] = {}
    qt = q._terms.items()
    for e1, c1 in p._terms.items():
        for e2, c2 in qt:
            k = e1 + e2
            out[k] = out.get(k, 0) + c1 * c2
    return LaurentPoly._raw({e: c for e, c in out.items() if c})


A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)
DELTA = LaurentPoly({2: -1, -2: -1})


def format_poly(p: LaurentPoly, variable: str = "A") -> str:
    """Render as ``c*A^e`` terms sorted by exponent, e.g. ``-1*A^-2 + 1*A^2``."""
    terms = p.terms
    if not terms:
        return "0"
    parts = []
    for i, e in enumerate(sorted(terms)):
        c = terms[e]
        if i == 0:
            parts.append(f"{c}*{variable}^{e}")
        else:
            sign = "-" if c < 0 else "+"
            parts.append(f" {sign} {abs(c)}*{variable}^{e}")
    return "".join(parts)


_TERM_RE = re.compile(r"([+-]?)\s*(\d+)\s*\*\s*([A-Za-z]+)\s*\^\s*(-?\d+)")


def parse_poly(text: str, variable: str = "A") -> LaurentPoly:
    """Inverse of :func:`format_poly`."""
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    terms: dict[int, int] = {}
    pos = 0
    for m in _TERM_RE.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"unparseable polynomial text near {text[pos:m.start()]!r}")
        if m.group(3) != variable:
            raise ValueError(f"unexpected variable {m.group(3)!r}")
        c = int(m.group(2)) * (-1 if m.group(1) == "-" else 1)
        e = int(m.group(4))
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    if pos == 0 or text[pos:].strip():
        raise ValueError(f"unparseable polynomial text {text!r}")
    return LaurentPoly(terms)


def dumps_poly(p: LaurentPoly) -> str:
    return json.dumps(p.to_json())


def loads_poly(s: str) -> LaurentPoly:
    return LaurentPoly.from_json(json.loads(s))


# --------------------------------------------------------------------------
# Z[zeta_24]


def _reduce(coeffs: list[int]) -> tuple[int, ...]:
    # x^8 = x^4 - 1, applied from the top down
    c = list(coeffs)
    for k in range(len(c) - 1, PHI_DEGREE - 1, -1):
        v = c[k]
        if v:
            c[k - 4] += v
            c[k - 8] -= v
    c = c[:PHI_DEGREE]
    c.extend([0] * (PHI_DEGREE - len(c)))
    return tuple(c)


class CyclotomicElement:
    """Element ``c0 + c1 x + ... + c7 x^7`` of ``Z[x]/Phi_24(x)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]) -> None:
        c = [int(v) for v in coeffs]
        self.coeffs = _reduce(c) if len(c) != PHI_DEGREE else tuple(c)

    @classmethod
    def from_int(cls, n: int) -> CyclotomicElement:
        return cls([n] + [0] * 7)

    @classmethod
    def x_power(cls, k: int) -> CyclotomicElement:
        return _X_POWERS[k % CONDUCTOR]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == (other, 0, 0, 0, 0, 0, 0, 0)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: CyclotomicElement | int) -> CyclotomicElement:
        if isinstance(other, int):
            other = CyclotomicElement.from_int(other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return CyclotomicElement([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CyclotomicElement:
        return CyclotomicElement([-a for a in self.coeffs])

    def __sub__(self, other: CyclotomicElement | int) -> CyclotomicElement:
        return self + (-other)

    def __rsub__(self, other: int) -> CyclotomicElement:
        return (-self) + other

    def __mul__(self, other: CyclotomicElement | int) -> CyclotomicElement:
        if isinstance(other, int):
            return CyclotomicElement([a * other for a in self.coeffs])
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        prod = [0] * (2 * PHI_DEGREE - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CyclotomicElement(_reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CyclotomicElement:
        if n < 0:
            raise ArithmeticError("negative powers are only defined for x itself")
        result = CyclotomicElement.from_int(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> CyclotomicElement:
        """Complex conjugation, the automorphism ``x -> x^23``."""
        out = CyclotomicElement.from_int(0)
        for i, a in enumerate(self.coeffs):
            if a:
                out = out + _X_POWERS[(-i) % CONDUCTOR] * a
        return out

    def norm_squared(self) -> CyclotomicElement:
        """``z * conj(z)``, the squared complex modulus as a ring element."""
        return self * self.conj()

    def is_rational_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        return sum(c * _X_COMPLEX[i] for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicElement({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_rational_integer():
            return str(self.coeffs[0])
        return str(list(self.coeffs))


_X_COMPLEX = [cmath.exp(2j * cmath.pi * i / CONDUCTOR) for i in range(PHI_DEGREE)]


def _build_powers() -> list[CyclotomicElement]:
    powers = []
    for k in range(CONDUCTOR):
        c = [0] * (k + 1)
        c[k] = 1
        powers.append(CyclotomicElement(_reduce(c)))
    return powers


_X_POWERS = _build_powers()


def evaluate_at_root(p: LaurentPoly, k: int) -> CyclotomicElement:
    """Substitute ``A -> x**k`` with ``x = exp(2*pi*i/24)``, exactly."""
    if not isinstance(k, int) or not 0 <= k < CONDUCTOR:
        raise ValueError(f"root exponent must satisfy 0 <= k < {CONDUCTOR}, got {k!r}")
    acc = [0] * PHI_DEGREE
    for e, c in p.terms.items():
        xp = _X_POWERS[(e * k) % CONDUCTOR].coeffs
        for i in range(PHI_DEGREE):
            if xp[i]:
                acc[i] += c * xp[i]
    return CyclotomicElement(acc)
