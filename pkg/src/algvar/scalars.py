"""Exact scalar arithmetic: Gaussian rationals, univariate rational
functions over any exact field, and quotient extensions for declared
helper symbols.

Every value is immutable and every comparison is exact; nothing here
ever touches floating point.  Fields are stackable: the coefficient
field of a rational-function field or a quotient extension may itself
be any field built from these classes, which is how multi-parameter
computations (rational functions in a parameter, then in t) are done.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union


class PoleError(ArithmeticError):
    """Evaluation at a point where the denominator vanishes.

    ``order`` is the (negative) order at the point for order-aware
    callers; it is ``None`` when unknown.
    """

    def __init__(self, message: str, order: Optional[int] = None):
        super().__init__(message)
        self.order = order


class ZeroDivisorError(ZeroDivisionError):
    """Inversion of a nonzero zero divisor in a quotient ring."""


def _fraction_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    num, den = q.numerator, q.denominator
    rn = _isqrt_exact(num)
    rd = _isqrt_exact(den)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt_exact(n: int) -> Optional[int]:
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


class GaussianRational:
    """An element of Q(i): exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- constructors ------------------------------------------------

    @staticmethod
    def of(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"cannot make a Gaussian rational from {value!r}")

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return (GaussianRational(1) / self) ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def sqrt(self) -> Optional["GaussianRational"]:
        """Exact square root inside Q(i) when one exists, else None."""
        a, b = self.re, self.im
        if b == 0:
            r = _fraction_sqrt(a)
            if r is not None:
                return GaussianRational(r)
            r = _fraction_sqrt(-a)
            if r is not None:
                return GaussianRational(0, r)
            return None
        # (x+yi)^2 = a+bi: x^2 = (a + sqrt(a^2+b^2))/2, y = b/(2x)
        norm_root = _fraction_sqrt(a * a + b * b)
        if norm_root is None:
            return None
        xx = (a + norm_root) / 2
        x = _fraction_sqrt(xx)
        if x is None or x == 0:
            return None
        y = b / (2 * x)
        return GaussianRational(x, y)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{imag}"


QI_ZERO = GaussianRational(0)
QI_ONE = GaussianRational(1)
QI_I = GaussianRational(0, 1)


class GaussianField:
    """Field descriptor for Q(i)."""

    name = "QQi"

    def zero(self):
        return QI_ZERO

    def one(self):
        return QI_ONE

    def of(self, value):
        return GaussianRational.of(value)

    def is_element(self, value):
        return isinstance(value, GaussianRational)

    def variables(self):
        return ()

    def __repr__(self):
        return "QQi"


QQI = GaussianField()


# ---------------------------------------------------------------------------
# Dense univariate polynomials over an arbitrary field, as plain tuples.
# Internal helpers shared by RationalFunctionField and QuotientField.
# ---------------------------------------------------------------------------


def _pnormalize(coeffs: Sequence) -> tuple:
    i = len(coeffs)
    while i > 0 and not coeffs[i - 1]:
        i -= 1
    return tuple(coeffs[:i])


def _padd(a, b):
    n = max(len(a), len(b))
    out = []
    for k in range(n):
        x = a[k] if k < len(a) else None
        y = b[k] if k < len(b) else None
        if x is None:
            out.append(y)
        elif y is None:
            out.append(x)
        else:
            out.append(x + y)
    return _pnormalize(out)


def _pneg(a):
    return tuple(-x for x in a)

def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b, zero):
    if not a or not b:
        return ()
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return _pnormalize(out)


def _pscale(a, c):
    if not c:
        return ()
    return _pnormalize([x * c for x in a])


def _pdivmod(a, b, zero):
    """Polynomial division over a field: returns (quotient, remainder)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [zero] * max(0, len(a) - len(b) + 1)
    r = list(a)
    dlead = b[-1]
    while len(r) >= len(b) and _pnormalize(r):
        r = list(_pnormalize(r))
        if len(r) < len(b):
            break
        c = r[-1] / dlead
        shift = len(r) - len(b)
        q[shift] = q[shift] + c
        for j, y in enumerate(b):
            r[shift + j] = r[shift + j] - c * y
        r = r[:-1]
    return _pnormalize(q), _pnormalize(r)


def _pgcd(a, b, one, zero):
    """Monic gcd via Euclid."""
    a, b = _pnormalize(a), _pnormalize(b)
    while b:
        _, a = _pdivmod(a, b, zero)
        a, b = b, a
    if not a:
        return ()
    lead = a[-1]
    if lead == one:
        return a
    return _pscale(a, one / lead)


def _pxgcd(a, b, one, zero):
    """Extended Euclid: g, s, t with s*a + t*b = g (g monic)."""
    r0, r1 = _pnormalize(a), _pnormalize(b)
    s0, s1 = (one,), ()
    t0, t1 = (), (one,)
    while r1:
        q, r = _pdivmod(r0, r1, zero)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, zero))
        t0, t1 = t1, _psub(t0, _pmul(q, t1, zero))
    if r0:
        lead = r0[-1]
        if lead != one:
            inv = one / lead
            r0, s0, t0 = _pscale(r0, inv), _pscale(s0, inv), _pscale(t0, inv)
    return r0, s0, t0


def _peval(a, point, zero):
    result = zero
    for c in reversed(a):
        result = result * point + c
    return result


def _pvaluation(a) -> int:
    """Index of the first nonzero coefficient (valuation at 0)."""
    for k, c in enumerate(a):
        if c:
            return k
    raise ValueError("valuation of the zero polynomial")


# ---------------------------------------------------------------------------
# Rational functions in one named symbol over a base field.
# ---------------------------------------------------------------------------


class RationalFunction:
    """num/den with gcd(num, den) = 1 and den monic, over field.base."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: "RationalFunctionField", num: tuple, den: tuple, reduce: bool = True):
        if reduce:
            num, den = field._reduced(num, den)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def _lift(self, other):
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        f = self.field
        z = f.base.zero()
        num = _padd(_pmul(self.num, o.den, z), _pmul(o.num, self.den, z))
        den = _pmul(self.den, o.den, z)
        return RationalFunction(f, num, den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.field, _pneg(self.num), self.den, reduce=False)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        f = self.field
        z = f.base.zero()
        return RationalFunction(f, _pmul(self.num, o.num, z), _pmul(self.den, o.den, z))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        f = self.field
        z = f.base.zero()
        return RationalFunction(f, _pmul(self.num, o.den, z), _pmul(self.den, o.num, z))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return (self.field.one() / self) ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.field.var, self.num, self.den))

    # -- structure ----------------------------------------------------

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self):
        """The base-field value of a constant rational function."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant in {self.field.var}")
        if not self.num:
            return self.field.base.zero()
        return self.num[0] / self.den[0]

    def order_at_zero(self) -> int:
        """Valuation at the origin: ord(num) - ord(den)."""
        if not self.num:
            raise ValueError("order_at_zero of the zero function")
        return _pvaluation(self.num) - _pvaluation(self.den)

    def eval_at_zero(self):
        """Value at 0; raises PoleError with the pole order if negative."""
        if not self.num:
            return self.field.base.zero()
        ord0 = self.order_at_zero()
        if ord0 < 0:
            raise PoleError(
                f"pole of order {-ord0} at {self.field.var}=0", order=ord0
            )
        if ord0 > 0:
            return self.field.base.zero()
        shift = _pvaluation(self.den)
        return self.num[shift] / self.den[shift]

    def subs(self, value):
        """Evaluate at a base-field point (raises PoleError on a pole)."""
        z = self.field.base.zero()
        den = _peval(self.den, value, z)
        if not den:
            raise PoleError(f"pole at {self.field.var}={value}")
        return _peval(self.num, value, z) / den

    def scale_variable(self, s):
        """Substitute var -> s*var for a nonzero base-field constant s."""
        if not s:
            raise ValueError("scale factor must be nonzero")
        def scaled(p):
            out, power = [], self.field.base.one()
            for c in p:
                out.append(c * power)
                power = power * s
            return _pnormalize(out)
        return RationalFunction(self.field, scaled(self.num), scaled(self.den))

    def map_coefficients(self, fn, new_field: "RationalFunctionField"):
        num = _pnormalize([fn(c) for c in self.num])
        den = _pnormalize([fn(c) for c in self.den])
        return RationalFunction(new_field, num, den)

    def __repr__(self):
        return f"RF({self})"

    def __str__(self):
        num = _pstr(self.num, self.field.var)
        if self.den == (self.field.base.one(),):
            return num
        return f"({num})/({_pstr(self.den, self.field.var)})"


def _pstr(p, var):
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if not c:
            continue
        cs = str(c)
        if k == 0:
            parts.append(cs)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            parts.append(mono if cs == "1" else f"{cs}*{mono}")
    return " + ".join(reversed(parts))


class RationalFunctionField:
    """The field base(var) of univariate rational functions."""

    def __init__(self, base, var: str):
        if var in base.variables():
            raise ValueError(f"symbol {var!r} already bound in {base}")
        self.base = base
        self.var = var

    def variables(self):
        return self.base.variables() + (self.var,)

    def zero(self):
        return RationalFunction(self, (), (self.base.one(),), reduce=False)

    def one(self):
        return RationalFunction(self, (self.base.one(),), (self.base.one(),), reduce=False)

    def gen(self):
        return RationalFunction(
            self, (self.base.zero(), self.base.one()), (self.base.one(),), reduce=False
        )

    def of(self, value):
        c = self.coerce(value)
        if c is None:
            raise TypeError(f"cannot coerce {value!r} into {self}")
        return c

    def coerce(self, value):
        if isinstance(value, RationalFunction) and value.field is self:
            return value
        if isinstance(value, RationalFunction) and value.field.var == self.var:
            # Same symbol over a coercible base (e.g. after extending the base).
            lifted_num = tuple(self.base.of(c) for c in value.num)
            lifted_den = tuple(self.base.of(c) for c in value.den)
            return RationalFunction(self, lifted_num, lifted_den, reduce=False)
        try:
            c = self.base.of(value)
        except TypeError:
            return None
        return RationalFunction(self, (c,) if c else (), (self.base.one(),), reduce=False)

    def is_element(self, value):
        return isinstance(value, RationalFunction) and value.field is self

    def from_coeffs(self, num: Iterable, den: Iterable = None):
        num = tuple(self.base.of(c) for c in num)
        den = (self.base.one(),) if den is None else tuple(self.base.of(c) for c in den)
        return RationalFunction(self, num, den)

    def _reduced(self, num, den):
        num, den = _pnormalize(num), _pnormalize(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return (), (self.base.one(),)
        one, zero = self.base.one(), self.base.zero()
        g = _pgcd(num, den, one, zero)
        if len(g) > 1:
            num, _ = _pdivmod(num, g, zero)
            den, _ = _pdivmod(den, g, zero)
        lead = den[-1]
        if lead != one:
            inv = one / lead
            num = _pscale(num, inv)
            den = _pscale(den, inv)
        return num, den

    def __repr__(self):
        return f"{self.base}({self.var})"


# ---------------------------------------------------------------------------
# Quotient extensions base[u]/(relation) for helper symbols.
# ---------------------------------------------------------------------------


class ExtElement:
    """An element of a quotient extension, as a reduced polynomial in u."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "QuotientField", coeffs: tuple):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", _pnormalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("ExtElement is immutable")

    def _lift(self, other):
        return self.field.coerce(other)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, _padd(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(self.field, _pneg(self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        f = self.field
        prod = _pmul(self.coeffs, o.coeffs, f.base.zero())
        _, rem = _pdivmod(prod, f.relation, f.base.zero())
        return ExtElement(f, rem)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        f = self.field
        if not self.coeffs:
            raise ZeroDivisionError(f"division by zero in {f}")
        one, zero = f.base.one(), f.base.zero()
        g, s, _ = _pxgcd(self.coeffs, f.relation, one, zero)
        if len(g) != 1:
            raise ZeroDivisorError(
                f"{self} is a zero divisor modulo {_pstr(f.relation, f.var)}"
            )
        inv = _pscale(s, one / g[0])
        _, rem = _pdivmod(inv, f.relation, zero)
        return ExtElement(f, rem)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.var, self.coeffs))

    def is_base(self) -> bool:
        """True when the element is free of the helper symbol."""
        return len(self.coeffs) <= 1

    def base_value(self):
        if not self.is_base():
            raise ValueError(f"{self} involves the helper symbol {self.field.var}")
        return self.coeffs[0] if self.coeffs else self.field.base.zero()

    def __repr__(self):
        return f"Ext({self})"

    def __str__(self):
        return _pstr(self.coeffs, self.field.var)


class QuotientField:
    """base[u]/(relation): a field when the relation is irreducible.

    The relation is normalized monic; elements are polynomials in u of
    degree below deg(relation).  Inversion uses the extended Euclidean
    algorithm and raises ZeroDivisorError when the relation factors.
    """

    def __init__(self, base, relation_coeffs: Sequence, var: str = "u"):
        if var in base.variables():
            raise ValueError(f"symbol {var!r} already bound in {base}")
        rel = _pnormalize(tuple(base.of(c) for c in relation_coeffs))
        if len(rel) < 2:
            raise ValueError("helper relation must have degree at least 1")
        lead = rel[-1]
        if lead != base.one():
            rel = _pscale(rel, base.one() / lead)
        self.base = base
        self.relation = rel
        self.var = var

    def degree(self) -> int:
        return len(self.relation) - 1

    def variables(self):
        return self.base.variables() + (self.var,)

    def zero(self):
        return ExtElement(self, ())

    def one(self):
        return ExtElement(self, (self.base.one(),))

    def gen(self):
        if self.degree() == 1:
            # u is congruent to the negated constant term.
            return ExtElement(self, (-self.relation[0],))
        return ExtElement(self, (self.base.zero(), self.base.one()))

    def of(self, value):
        c = self.coerce(value)
        if c is None:
            raise TypeError(f"cannot coerce {value!r} into {self}")
        return c

    def coerce(self, value):
        if isinstance(value, ExtElement) and value.field is self:
            return value
        try:
            c = self.base.of(value)
        except TypeError:
            return None
        return ExtElement(self, (c,) if c else ())

    def is_element(self, value):
        return isinstance(value, ExtElement) and value.field is self

    def __repr__(self):
        return f"{self.base}[{self.var}]/({_pstr(self.relation, self.var)})"


def tower(params: Sequence[str], base=QQI):
    """Stack rational-function fields for the given parameter names."""
    field = base
    for name in params:
        field = RationalFunctionField(field, name)
    return field


def lift_to(field, value):
    """Coerce a value living lower in a field tower up into ``field``.

    Walks down through RationalFunctionField/QuotientField layers until
    a layer accepts the value, then wraps it back up as constants.
    """
    c = field.coerce(value) if hasattr(field, "coerce") else None
    if c is not None:
        return c
    if isinstance(field, GaussianField):
        return field.of(value)
    lower = lift_to(field.base, value)
    return field.of(lower)
