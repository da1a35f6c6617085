"""Exact Laurent polynomials in one variable ``A`` over the Gaussian integers.

Coefficients live in Z[i] (Python ints, so no overflow). Polynomials are
immutable values kept in canonical form: no zero coefficients are stored and
iteration runs over exponents in descending order.

Two textual forms are supported:

* canonical: ``(a+bi)*A^k`` terms joined by ``+``, exponents descending,
  e.g. ``(-1+0i)*A^2+(-1+0i)*A^-2``;
* pretty: ``-A^2 + -A^-2``.

:func:`LaurentPoly.from_text` accepts both. The JSON form is a list of
``[exp, re, im]`` triples with strictly descending exponents.
"""

from __future__ import annotations

import cmath
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "GaussInt",
    "LaurentPoly",
    "A",
    "poly_monomial",
    "poly_add",
    "poly_mul",
    "poly_neg",
    "poly_eq",
    "poly_eval",
]


@dataclass(frozen=True, slots=True)
class GaussInt:
    """Gaussian integer ``re + im*i``."""

    re: int
    im: int = 0

    def __add__(self, other: GaussInt) -> GaussInt:
        other = _as_gauss(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: GaussInt) -> GaussInt:
        other = _as_gauss(other)
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: GaussInt) -> GaussInt:
        other = _as_gauss(other)
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def conj(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def divexact(self, other: GaussInt) -> GaussInt:
        """Exact quotient in Z[i]; raises ``ArithmeticError`` if not divisible."""
        other = _as_gauss(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian integer")
        num = self * other.conj()
        if num.re % n or num.im % n:
            raise ArithmeticError(f"{self} is not divisible by {other} in Z[i]")
        return GaussInt(num.re // n, num.im // n)

    def __str__(self) -> str:
        return _fmt_coeff_canonical((self.re, self.im))


def _as_gauss(x) -> GaussInt:
    if isinstance(x, GaussInt):
        return x
    if isinstance(x, int):
        return GaussInt(x, 0)
    if isinstance(x, complex) and x.real.is_integer() and x.imag.is_integer():
        return GaussInt(int(x.real), int(x.imag))
    raise TypeError(f"cannot interpret {x!r} as a Gaussian integer")


# Internal coefficient representation is a plain (re, im) tuple; it keeps the
# hot loops of the exact state sum free of object construction overhead.
_Coeff = tuple


def _cmul(x: _Coeff, y: _Coeff) -> _Coeff:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


Scalar = Union["LaurentPoly", GaussInt, int]


class LaurentPoly:
    """Element of Z[i][A, A^-1].

    Supports ``+ - *``, integer powers (negative powers only for units),
    equality against ints and Gaussian integers, and hashing.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        t: dict[int, _Coeff] = {}
        if terms:
            for e, c in terms.items():
                g = c if isinstance(c, tuple) else _as_gauss(c)
                g = (g.re, g.im) if isinstance(g, GaussInt) else (int(g[0]), int(g[1]))
                if g[0] or g[1]:
                    t[int(e)] = g
        self._t = t

    @classmethod
    def _raw(cls, t: dict[int, _Coeff]) -> LaurentPoly:
        p = cls.__new__(cls)
        p._t = t
        return p

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff, exp: int) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        return cls({0: _as_gauss(x)})

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[int, GaussInt]:
        return {e: GaussInt(*self._t[e]) for e in sorted(self._t, reverse=True)}

    def coeff(self, exp: int) -> GaussInt:
        return GaussInt(*self._t.get(exp, (0, 0)))

    def exponents(self) -> list[int]:
        return sorted(self._t, reverse=True)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def __iter__(self) -> Iterator[tuple[int, GaussInt]]:
        for e in sorted(self._t, reverse=True):
            yield e, GaussInt(*self._t[e])

    def max_exp(self) -> int:
        return max(self._t)

    def min_exp(self) -> int:
        return min(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant(self) -> GaussInt:
        """The value of a constant polynomial; raises if ``A`` occurs."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coeff(0)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_unit(self) -> bool:
        """Units of Z[i][A, A^-1] are ``u * A^k`` with ``u`` in {1, -1, i, -i}."""
        if len(self._t) != 1:
            return False
        (c,) = self._t.values()
        return c[0] * c[0] + c[1] * c[1] == 1

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.coerce(other)
            except TypeError:
                return NotImplemented
        if len(other._t) > len(self._t):
            big, small = other._t, self._t
        else:
            big, small = self._t, other._t
        t = dict(big)
        for e, c in small.items():
            d = t.get(e)
            if d is None:
                t[e] = c
            else:
                s = (c[0] + d[0], c[1] + d[1])
                if s[0] or s[1]:
                    t[e] = s
                else:
                    del t[e]
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: (-c[0], -c[1]) for e, c in self._t.items()})

    def __pos__(self) -> LaurentPoly:
        return self

    def __sub__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            if isinstance(other, int):
                if other == 0:
                    return LaurentPoly._raw({})
                return LaurentPoly._raw({e: (c[0] * other, c[1] * other) for e, c in self._t.items()})
            try:
                other = LaurentPoly.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return LaurentPoly._raw({})
        if len(b) == 1:
            ((eb, cb),) = b.items()
            return LaurentPoly._raw({e + eb: _cmul(c, cb) for e, c in a.items()})
        if len(a) == 1:
            ((ea, ca),) = a.items()
            return LaurentPoly._raw({e + ea: _cmul(ca, c) for e, c in b.items()})
        t: dict[int, list[int]] = {}
        for ea, (ar, ai) in a.items():
            for eb, (br, bi) in b.items():
                e = ea + eb
                acc = t.get(e)
                if acc is None:
                    t[e] = [ar * br - ai * bi, ar * bi + ai * br]
                else:
                    acc[0] += ar * br - ai * bi
                    acc[1] += ar * bi + ai * br
        return LaurentPoly._raw({e: (c[0], c[1]) for e, c in t.items() if c[0] or c[1]})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> LaurentPoly:
        """Multiplicative inverse; only units are invertible."""
        if not self.is_unit():
            raise ArithmeticError(f"{self} is not a unit of Z[i][A, A^-1]")
        ((e, c),) = self._t.items()
        return LaurentPoly._raw({-e: (c[0], -c[1])})

    def divexact(self, other) -> LaurentPoly:
        """Exact quotient ``self / other``; raises ``ArithmeticError`` if inexact."""
        q = LaurentPoly.coerce(other)
        if not q:
            raise ZeroDivisionError("division by zero polynomial")
        if q.is_unit():
            return self * q.inverse()
        rem = dict(self._t)
        if not rem:
            return LaurentPoly()
        q_top = q.max_exp()
        q_low = q.min_exp()
        q_lead = GaussInt(*q._t[q_top])
        floor = self.min_exp() - q_low
        quot: dict[int, _Coeff] = {}
        while rem:
            top = max(rem)
            shift = top - q_top
            if shift < floor:
                raise ArithmeticError(f"{self} is not divisible by {q}")
            c = GaussInt(*rem[top]).divexact(q_lead)
            quot[shift] = (c.re, c.im)
            for e, qc in q._t.items():
                k = e + shift
                prod = _cmul((c.re, c.im), qc)
                old = rem.get(k, (0, 0))
                new = (old[0] - prod[0], old[1] - prod[1])
                if new[0] or new[1]:
                    rem[k] = new
                else:
                    rem.pop(k, None)
        return LaurentPoly._raw(quot)

    def bar(self) -> LaurentPoly:
        """The involution ``A -> A^-1`` (coefficients untouched)."""
        return LaurentPoly._raw({-e: c for e, c in self._t.items()})

    def conj(self) -> LaurentPoly:
        """Complex conjugate on the unit circle: ``A -> A^-1`` and ``i -> -i``."""
        return LaurentPoly._raw({-e: (c[0], -c[1]) for e, c in self._t.items()})

    def subs_unit(self, value: GaussInt) -> GaussInt:
        """Substitute a Gaussian unit (1, -1, i, -i) for ``A`` exactly."""
        value = _as_gauss(value)
        if not value.is_unit():
            raise ValueError("exact substitution needs a Gaussian unit")
        total = GaussInt(0, 0)
        for e, c in self._t.items():
            p = _gauss_pow(value, e)
            total = total + GaussInt(*c) * p
        return total

    def eval(self, a: complex) -> complex:
        """Numeric value at ``A = a``; ``a`` must be nonzero."""
        if a == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent polynomial at A = 0")
        a = complex(a)
        total = 0j
        for e, c in self._t.items():
            total += complex(c[0], c[1]) * a**e
        return total

    # -- comparison ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    # -- text / json --------------------------------------------------
    def to_text(self) -> str:
        if not self._t:
            return "0"
        return "+".join(
            f"{_fmt_coeff_canonical(self._t[e])}*A^{e}" for e in sorted(self._t, reverse=True)
        )

    def pretty(self) -> str:
        if not self._t:
            return "0"
        return " + ".join(_fmt_term_pretty(self._t[e], e) for e in sorted(self._t, reverse=True))

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.pretty()!r})"

    @classmethod
    def from_text(cls, text: str) -> LaurentPoly:
        text = text.strip()
        if text == "0" or text == "":
            return cls()
        terms: dict[int, GaussInt] = {}
        for raw in _split_top_level(text):
            exp, coeff = _parse_term(raw.strip())
            terms[exp] = terms.get(exp, GaussInt(0)) + coeff
        return cls(terms)

    def to_json(self) -> list[list[int]]:
        return [[e, self._t[e][0], self._t[e][1]] for e in sorted(self._t, reverse=True)]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> LaurentPoly:
        terms: dict[int, tuple[int, int]] = {}
        last = None
        for item in data:
            e, r, i = (int(v) for v in item)
            if last is not None and e >= last:
                raise ValueError("polynomial JSON exponents must be strictly descending")
            last = e
            terms[e] = (r, i)
        return cls(terms)


def _gauss_pow(g: GaussInt, e: int) -> GaussInt:
    if e < 0:
        g = GaussInt(g.re, -g.im)  # unit inverse is its conjugate
        e = -e
    out = GaussInt(1, 0)
    for _ in range(e % 4 if g.is_unit() else e):
        out = out * g
    return out


def _fmt_coeff_canonical(c: _Coeff) -> str:
    re_, im_ = c
    sign = "+" if im_ >= 0 else "-"
    return f"({re_}{sign}{abs(im_)}i)"


def _fmt_coeff_pretty(c: _Coeff) -> str:
    re_, im_ = c
    if im_ == 0:
        return str(re_)
    if re_ == 0:
        if im_ == 1:
            return "i"
        if im_ == -1:
            return "-i"
        return f"{im_}i"
    return _fmt_coeff_canonical(c)


def _fmt_term_pretty(c: _Coeff, e: int) -> str:
    coeff = _fmt_coeff_pretty(c)
    if e == 0:
        return coeff
    var = "A" if e == 1 else f"A^{e}"
    if coeff == "1":
        return var
    if coeff == "-1":
        return "-" + var
    if coeff in ("i", "-i"):
        return coeff + var
    return f"{coeff}*{var}"


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    if any(not p.strip() for p in parts):
        raise ValueError(f"malformed polynomial text: {text!r}")
    return parts


_TERM_RE = re.compile(
    r"""^(?P<coef>
            \((?P<pre>-?\d+)(?P<pim>[+-]\d+)i\)
          | (?P<int>-?\d+)
          | (?P<gi>-?\d*)i
          | (?P<sign>-?)
        )
        (?:\*?A(?:\^(?P<exp>-?\d+))?)?$""",
    re.VERBOSE,
)


def _parse_term(term: str) -> tuple[int, GaussInt]:
    term = term.replace(" ", "")
    m = _TERM_RE.match(term)
    if not m or term in ("", "-"):
        raise ValueError(f"malformed polynomial term: {term!r}")
    has_var = "A" in term
    if not has_var and m.group("sign") is not None and m.group("int") is None and m.group("gi") is None and m.group("pre") is None:
        raise ValueError(f"malformed polynomial term: {term!r}")
    if m.group("pre") is not None:
        coeff = GaussInt(int(m.group("pre")), int(m.group("pim")))
    elif m.group("int") is not None:
        coeff = GaussInt(int(m.group("int")))
    elif m.group("gi") is not None:
        g = m.group("gi")
        coeff = GaussInt(0, -1 if g == "-" else (1 if g == "" else int(g)))
    else:
        coeff = GaussInt(-1 if m.group("sign") == "-" else 1)
    if has_var:
        exp = int(m.group("exp")) if m.group("exp") is not None else 1
    else:
        exp = 0
    return exp, coeff


A = LaurentPoly({1: 1})
"""The variable ``A``."""


def poly_monomial(coeff, exp: int) -> LaurentPoly:
    return LaurentPoly.monomial(coeff, exp)


def poly_add(p: Scalar, q: Scalar) -> LaurentPoly:
    return LaurentPoly.coerce(p) + q


def poly_mul(p: Scalar, q: Scalar) -> LaurentPoly:
    return LaurentPoly.coerce(p) * q


def poly_neg(p: Scalar) -> LaurentPoly:
    return -LaurentPoly.coerce(p)


def poly_eq(p: Scalar, q: Scalar) -> bool:
    return LaurentPoly.coerce(p) == q


def poly_eval(p: Scalar, a: complex) -> complex:
    return LaurentPoly.coerce(p).eval(a)


def unit_circle(theta: float) -> complex:
    """``e^{i theta}``."""
    return cmath.exp(1j * theta)
