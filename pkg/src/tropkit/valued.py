"""Valued scalars, Laurent polynomials over them, weights and initial forms.

Scalars are finite sums ``sum c_g t^g`` with rational exponents ``g`` and
rational coefficients; the valuation is the least exponent. The residue
field is modelled by the rationals.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping

from .linalg import dot, rational_vector, to_fraction


def _clean(terms):
    return {k: v for k, v in terms.items() if v != 0}


class ValuedScalar:
    """A finite generalized power series in ``t`` over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        t = {}
        for g, c in (terms or {}).items():
            g, c = to_fraction(g), to_fraction(c)
            t[g] = t.get(g, Fraction(0)) + c
        self.terms = dict(sorted(_clean(t).items()))

    @classmethod
    def constant(cls, c) -> "ValuedScalar":
        """Trivially valued scalar (a single term at exponent 0)."""
        return cls({0: c})

    @classmethod
    def t(cls, g=1, c=1) -> "ValuedScalar":
        return cls({g: c})

    @classmethod
    def coerce(cls, x) -> "ValuedScalar":
        if isinstance(x, ValuedScalar):
            return x
        if isinstance(x, (list, tuple)):
            if _is_pair(x):
                return cls({x[0]: x[1]})
            out = cls()
            for g, c in x:
                out = out + cls({g: c})
            return out
        return cls.constant(x)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_trivially_valued(self) -> bool:
        return all(g == 0 for g in self.terms)

    def valuation(self):
        """Least exponent; ``math.inf`` for zero."""
        return next(iter(self.terms)) if self.terms else math.inf

    def residue(self) -> Fraction:
        if not self.terms:
            raise ValueError("the zero scalar has no residue")
        return next(iter(self.terms.values()))

    def scale_valuation(self, s) -> "ValuedScalar":
        """Substitute ``t -> t^s``, multiplying the valuation by ``s > 0``."""
        s = to_fraction(s)
        return ValuedScalar({g * s: c for g, c in self.terms.items()})

    def __add__(self, other):
        other = ValuedScalar.coerce(other)
        t = dict(self.terms)
        for g, c in other.terms.items():
            t[g] = t.get(g, Fraction(0)) + c
        return ValuedScalar(t)

    __radd__ = __add__

    def __neg__(self):
        return ValuedScalar({g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-ValuedScalar.coerce(other))

    def __mul__(self, other):
        other = ValuedScalar.coerce(other)
        t = {}
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                t[g1 + g2] = t.get(g1 + g2, Fraction(0)) + c1 * c2
        return ValuedScalar(t)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = ValuedScalar.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        return f"ValuedScalar({_fmt_scalar(self)})"


def _is_pair(x):
    return len(x) == 2 and not isinstance(x[0], (list, tuple))


def _fmt_scalar(a: ValuedScalar) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for g, c in a.terms.items():
        if g == 0:
            parts.append(str(c))
        else:
            coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{coef}t^{g}" if g != 1 else f"{coef}t")
    return " + ".join(parts)


def _fmt_monomial(u, var_names):
    out = []
    for e, name in zip(u, var_names):
        if e == 1:
            out.append(name)
        elif e:
            out.append(f"{name}^{e}")
    return "*".join(out)


def _var_names(n):
    return ["x", "y", "z"][:n] if n <= 3 else [f"x{i + 1}" for i in range(n)]


class _LaurentBase:
    __slots__ = ("n", "terms")

    def _check_exponent(self, u):
        if len(u) != self.n:
            raise ValueError(f"exponent {u} does not have length {self.n}")
        if any(int(x) != x for x in u):
            raise ValueError(f"exponent {u} is not an integer vector")
        return tuple(int(x) for x in u)

    @property
    def exponents(self) -> list[tuple]:
        return list(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return type(self) is type(other) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, tuple(self.terms.items())))


class ResidueLaurentPolynomial(_LaurentBase):
    """Laurent polynomial over the residue field (rational coefficients)."""

    def __init__(self, n: int, terms: Mapping):
        self.n = n
        t = {}
        for u, c in terms.items():
            u = self._check_exponent(u)
            t[u] = t.get(u, Fraction(0)) + to_fraction(c)
        self.terms = dict(sorted(_clean(t).items()))

    def is_monomial(self) -> bool:
        if not self.terms:
            raise ValueError("the zero polynomial is not allowed here")
        return len(self.terms) == 1

    def to_valued(self) -> "ValuedLaurentPolynomial":
        """The same polynomial over the trivially valued field."""
        return ValuedLaurentPolynomial(self.n, {u: ValuedScalar.constant(c) for u, c in self.terms.items()})

    def __mul__(self, other):
        t = {}
        for u, a in self.terms.items():
            for w, b in other.terms.items():
                k = tuple(x + y for x, y in zip(u, w))
                t[k] = t.get(k, Fraction(0)) + a * b
        return ResidueLaurentPolynomial(self.n, t)

    def __add__(self, other):
        t = dict(self.terms)
        for u, c in other.terms.items():
            t[u] = t.get(u, Fraction(0)) + c
        return ResidueLaurentPolynomial(self.n, t)

    def scaled_equal(self, other) -> bool:
        """Equality up to multiplication by a nonzero constant times a monomial."""
        if self.n != other.n or len(self) != len(other) or not self.terms:
            return len(self) == len(other) == 0
        (u0, a0), (w0, b0) = next(iter(self.terms.items())), next(iter(other.terms.items()))
        shift = tuple(y - x for x, y in zip(u0, w0))
        ratio = b0 / a0
        for u, a in self.terms.items():
            k = tuple(x + s for x, s in zip(u, shift))
            if other.terms.get(k) != a * ratio:
                return False
        return True

    def __repr__(self):
        names = _var_names(self.n)
        if not self.terms:
            return "0"
        parts = []
        for u, c in self.terms.items():
            m = _fmt_monomial(u, names)
            parts.append(str(c) if not m else (m if c == 1 else f"{c}*{m}"))
        return " + ".join(parts)


class ValuedLaurentPolynomial(_LaurentBase):
    """``f = sum alpha_u x^u`` with valued-scalar coefficients."""

    def __init__(self, n: int, terms: Mapping):
        self.n = n
        t = {}
        for u, c in terms.items():
            u = self._check_exponent(u)
            c = ValuedScalar.coerce(c)
            t[u] = t[u] + c if u in t else c
        self.terms = {u: c for u, c in sorted(t.items()) if not c.is_zero}

    from_dict = classmethod(lambda cls, n, terms: cls(n, terms))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def heights(self) -> tuple[list[tuple], list[Fraction]]:
        """Exponents and coefficient valuations."""
        return list(self.terms), [c.valuation() for c in self.terms.values()]

    def _scaled(self, w):
        """Term values ``v(alpha_u) + <u, w>`` times a common positive integer ``K``."""
        cache = self.__dict__.get("_height_cache")
        if cache is None:
            vals = [c.valuation() for c in self.terms.values()]
            L = math.lcm(*(v.denominator for v in vals)) if vals else 1
            cache = (L, [(u, int(v * L)) for u, v in zip(self.terms, vals)])
            self._height_cache = cache
        L, rows = cache
        w = rational_vector(w)
        if len(w) != self.n:
            raise ValueError("weight vector has the wrong dimension")
        D = math.lcm(*(x.denominator for x in w)) if w else 1
        W = [int(x * D) for x in w]
        return D * L, [(u, h * D + L * sum(a * b for a, b in zip(u, W))) for u, h in rows]

    def omega_weight(self, w):
        """``min_u v(alpha_u) + <u, w>``; ``math.inf`` for the zero polynomial."""
        K, vals = self._scaled(w)
        if not vals:
            return math.inf
        return Fraction(min(x for _, x in vals), K)

    def initial_form(self, w) -> ResidueLaurentPolynomial:
        if not self.terms:
            raise ValueError("initial form of the zero polynomial is undefined")
        _, vals = self._scaled(w)
        m = min(x for _, x in vals)
        return ResidueLaurentPolynomial(self.n, {u: self.terms[u].residue() for u, x in vals if x == m})

    def trivialize(self) -> "ValuedLaurentPolynomial":
        """Replace every coefficient by its residue (trivial valuation)."""
        return ValuedLaurentPolynomial(
            self.n, {u: ValuedScalar.constant(c.residue()) for u, c in self.terms.items()}
        )

    def scale_valuation(self, s) -> "ValuedLaurentPolynomial":
        return ValuedLaurentPolynomial(self.n, {u: c.scale_valuation(s) for u, c in self.terms.items()})

    def __add__(self, other):
        t = dict(self.terms)
        for u, c in other.terms.items():
            t[u] = t[u] + c if u in t else c
        return ValuedLaurentPolynomial(self.n, t)

    def __neg__(self):
        return ValuedLaurentPolynomial(self.n, {u: -c for u, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ValuedLaurentPolynomial):
            c = ValuedScalar.coerce(other)
            return ValuedLaurentPolynomial(self.n, {u: a * c for u, a in self.terms.items()})
        t = {}
        for u, a in self.terms.items():
            for w, b in other.terms.items():
                k = tuple(x + y for x, y in zip(u, w))
                t[k] = t[k] + a * b if k in t else a * b
        return ValuedLaurentPolynomial(self.n, t)

    __rmul__ = __mul__

    def __repr__(self):
        names = _var_names(self.n)
        if not self.terms:
            return "0"
        parts = []
        for u, c in self.terms.items():
            m = _fmt_monomial(u, names)
            s = _fmt_scalar(c)
            if len(c.terms) > 1:
                s = f"({s})"
            if not m:
                parts.append(s)
            elif s == "1":
                parts.append(m)
            else:
                parts.append(f"{s}*{m}")
        return " + ".join(parts)


def valuation(a: ValuedScalar):
    return ValuedScalar.coerce(a).valuation()


def residue(a: ValuedScalar) -> Fraction:
    return ValuedScalar.coerce(a).residue()


def omega_weight(f: ValuedLaurentPolynomial, w):
    return f.omega_weight(w)


def initial_form(f: ValuedLaurentPolynomial, w) -> ResidueLaurentPolynomial:
    return f.initial_form(w)


def is_monomial(g: ResidueLaurentPolynomial) -> bool:
    return g.is_monomial()
