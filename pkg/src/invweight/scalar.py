"""Exact Gaussian rationals.

Every weight value, Moebius value and function-algebra coefficient lives
in Q(i).  Values are immutable and hashable; ``int`` and ``Fraction``
operands are coerced on the fly so integer Moebius values mix freely.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Gaussian", "as_scalar", "parse_rational", "render_rational", "ZERO", "ONE"]


class Gaussian:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _raw(cls, re, im):
        z = object.__new__(cls)
        z.re = re
        z.im = im
        return z

    def __repr__(self):
        if not self.im:
            return f"Gaussian({render_rational(self.re)})"
        return f"Gaussian({render_rational(self.re)}, {render_rational(self.im)})"

    def __str__(self):
        if not self.im:
            return render_rational(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{render_rational(self.re)}{sign}{render_rational(abs(self.im))}i"

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        if isinstance(other, complex):
            return self.re == other.real and self.im == other.imag
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return Gaussian._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Gaussian._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Gaussian._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Gaussian._raw(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Gaussian._raw(a * c, b)
        return Gaussian._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        c, d = other.re, other.im
        if not d:
            if not c:
                raise ZeroDivisionError("division by zero Gaussian rational")
            return Gaussian._raw(self.re / c, self.im / c)
        den = c * c + d * d
        a, b = self.re, self.im
        return Gaussian._raw((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def conjugate(self):
        return Gaussian._raw(self.re, -self.im)

    @property
    def is_real(self):
        return not self.im

    def as_complex(self):
        return complex(float(self.re), float(self.im))


ZERO = Gaussian()
ONE = Gaussian(1)


def _coerce(x):
    if isinstance(x, Gaussian):
        return x
    if isinstance(x, (int, Rational)):
        return Gaussian._raw(Fraction(x), Fraction(0))
    return None


def as_scalar(x) -> Gaussian:
    """Coerce ``int``, ``Fraction``, rational strings or ``{re, im}`` mappings."""
    if isinstance(x, Gaussian):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Gaussian(x)
    if isinstance(x, str):
        return Gaussian(parse_rational(x))
    if isinstance(x, dict):
        unknown = set(x) - {"re", "im"}
        if unknown:
            raise ValueError(f"unexpected scalar fields {sorted(unknown)}")
        return Gaussian(parse_rational(x.get("re", "0")), parse_rational(x.get("im", "0")))
    if isinstance(x, complex):
        # only exactly representable parts
        return Gaussian(Fraction(x.real), Fraction(x.imag))
    raise TypeError(f"cannot interpret {x!r} as an exact scalar")


def parse_rational(text) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"rational must be given as a string, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational {text!r}") from exc


def render_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
