"""Exact scalar coefficient ring: Laurent polynomials in the model constants.

Every coefficient that appears anywhere in the symbolic layer is a
``ParamPoly``: a sparse Laurent polynomial with ``Fraction`` coefficients in
the fixed symbol alphabet

    a, lam, alpha, mu, beta   (equation coefficients)
    c                         (wave speed of the traveling frame)
    a0, a1, a2                (tanh-ansatz unknowns)

Negative exponents are allowed (needed for 1/beta in symbolic series
coefficients and for 1/a0 in solution-family constraints); everything else
treats these as ordinary polynomials. No floating point ever enters.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

PARAMS: tuple[str, ...] = ("a", "lam", "alpha", "mu", "beta", "c", "a0", "a1", "a2")
_INDEX = {name: i for i, name in enumerate(PARAMS)}
_NP = len(PARAMS)
_ZERO_EXP = (0,) * _NP

Rational = Union[int, Fraction]


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class ParamPoly:
    """Sparse exact Laurent polynomial in the parameter alphabet."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        # terms must already be canonical: no zero coefficients.
        self._terms: dict[tuple[int, ...], Fraction] = dict(terms) if terms else {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "ParamPoly":
        return _ZERO

    @staticmethod
    def one() -> "ParamPoly":
        return _ONE

    @staticmethod
    def rational(value: Rational) -> "ParamPoly":
        q = _as_fraction(value)
        if q == 0:
            return _ZERO
        return ParamPoly({_ZERO_EXP: q})

    @staticmethod
    def symbol(name: str) -> "ParamPoly":
        return ParamPoly.monomial({name: 1})

    @staticmethod
    def monomial(powers: Mapping[str, int], coeff: Rational = 1) -> "ParamPoly":
        q = _as_fraction(coeff)
        if q == 0:
            return _ZERO
        exp = [0] * _NP
        for name, e in powers.items():
            if name not in _INDEX:
                raise KeyError(f"unknown parameter symbol {name!r}")
            exp[_INDEX[name]] += e
        return ParamPoly({tuple(exp): q})

    @staticmethod
    def coerce(value: "ParamPoly | Rational") -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        return ParamPoly.rational(value)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ZERO_EXP in self._terms)

    def rational_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if self.is_rational():
            return self._terms[_ZERO_EXP]
        raise ValueError(f"not a rational constant: {self}")

    def term_count(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(abs(e) for e in exp) for exp in self._terms)

    def terms(self) -> Iterable[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._terms.items())

    def symbols(self) -> set[str]:
        found: set[str] = set()
        for exp in self._terms:
            for i, e in enumerate(exp):
                if e:
                    found.add(PARAMS[i])
        return found

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "ParamPoly | Rational") -> "ParamPoly":
        other = ParamPoly.coerce(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for exp, q in other._terms.items():
            s = out.get(exp)
            if s is None:
                out[exp] = q
            else:
                s = s + q
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return ParamPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly({exp: -q for exp, q in self._terms.items()})

    def __sub__(self, other: "ParamPoly | Rational") -> "ParamPoly":
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other: "ParamPoly | Rational") -> "ParamPoly":
        return ParamPoly.coerce(other) + (-self)

    def __mul__(self, other: "ParamPoly | Rational") -> "ParamPoly":
        if not isinstance(other, ParamPoly):
            q = _as_fraction(other)
            if q == 0:
                return _ZERO
            if q == 1:
                return self
            return ParamPoly({exp: c * q for exp, c in self._terms.items()})
        if not self._terms or not other._terms:
            return _ZERO
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, q1 in self._terms.items():
            for e2, q2 in other._terms.items():
                exp = tuple(map(sum, zip(e1, e2)))
                q = q1 * q2
                s = out.get(exp)
                if s is None:
                    out[exp] = q
                else:
                    s = s + q
                    if s:
                        out[exp] = s
                    else:
                        del out[exp]
        return ParamPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ParamPoly":
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers only defined for monomials")
            ((exp, q),) = self._terms.items()
            return ParamPoly({tuple(-n * 0 + e * n for e in exp): q**n})
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ParamPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ParamPoly.rational(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, name: str, value: "ParamPoly | Rational") -> "ParamPoly":
        """Replace a symbol by an exact value or expression.

        Occurrences must have non-negative exponents unless the replacement is
        itself an invertible monomial.
        """
        idx = _INDEX[name]
        value = ParamPoly.coerce(value)
        out = _ZERO
        for exp, q in self._terms.items():
            e = exp[idx]
            rest = ParamPoly({exp[:idx] + (0,) + exp[idx + 1 :]: q})
            if e == 0:
                out = out + rest
            else:
                out = out + rest * (value**e)
        return out

    def evaluate(self, bindings: Mapping[str, Rational]) -> Fraction:
        """Exact evaluation with every present symbol bound to a rational."""
        total = Fraction(0)
        for exp, q in self._terms.items():
            v = q
            for i, e in enumerate(exp):
                if e:
                    base = _as_fraction(bindings[PARAMS[i]])
                    v = v * base**e
            total += v
        return total

    # -- exact division (for fraction-free elimination) ----------------------

    def _leading(self) -> tuple[tuple[int, ...], Fraction]:
        exp = max(self._terms)
        return exp, self._terms[exp]

    def exact_div(self, divisor: "ParamPoly") -> "ParamPoly":
        """Exact division; raises ExactDivisionError on a nonzero remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero ParamPoly")
        if self.is_zero():
            return _ZERO
        if divisor.is_rational():
            q = divisor.rational_value()
            return ParamPoly({exp: c / q for exp, c in self._terms.items()})
        quotient: dict[tuple[int, ...], Fraction] = {}
        rem = self
        d_exp, d_coef = divisor._leading()
        while not rem.is_zero():
            r_exp, r_coef = rem._leading()
            q_exp = tuple(r - d for r, d in zip(r_exp, d_exp))
            q_coef = r_coef / d_coef
            quotient[q_exp] = quotient.get(q_exp, Fraction(0)) + q_coef
            rem = rem - ParamPoly({q_exp: q_coef}) * divisor
            if not rem.is_zero() and max(rem._terms) >= r_exp:
                raise ExactDivisionError(f"{self} not divisible by {divisor}")
        return ParamPoly({e: q for e, q in quotient.items() if q})

    # -- normalization helpers ----------------------------------------------

    def rational_content(self) -> Fraction:
        """Positive rational g such that self/g has coprime integer coefficients."""
        if not self._terms:
            return Fraction(1)
        nums = [abs(q.numerator) for q in self._terms.values()]
        dens = [q.denominator for q in self._terms.values()]
        return Fraction(math.gcd(*nums) if len(nums) > 1 else nums[0], math.lcm(*dens))

    def min_exponents(self) -> tuple[int, ...]:
        if not self._terms:
            return _ZERO_EXP
        return tuple(min(exp[i] for exp in self._terms) for i in range(_NP))

    def shift_exponents(self, shift: tuple[int, ...]) -> "ParamPoly":
        return ParamPoly(
            {tuple(e + s for e, s in zip(exp, shift)): q for exp, q in self._terms.items()}
        )

    def __float__(self) -> float:
        return float(self.rational_value())

    # -- printing ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = [_format_term(exp, q) for exp, q in self.terms()]
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ParamPoly({self})"


def _format_rational(q: Fraction) -> str:
    text = str(q)
    if q < 0 or q.denominator != 1:
        return f"({text})"
    return text


def _format_term(exp: tuple[int, ...], q: Fraction) -> str:
    factors = []
    for i, e in enumerate(exp):
        if e == 0:
            continue
        factors.append(PARAMS[i] if e == 1 else f"{PARAMS[i]}^{e}")
    if not factors:
        return _format_rational(q)
    if q == 1:
        return "*".join(factors)
    return "*".join([_format_rational(q)] + factors)


_ZERO = ParamPoly()
_ONE = ParamPoly({_ZERO_EXP: Fraction(1)})

# Convenience symbols used throughout the package.
A = ParamPoly.symbol("a")
LAM = ParamPoly.symbol("lam")
ALPHA = ParamPoly.symbol("alpha")
MU = ParamPoly.symbol("mu")
BETA = ParamPoly.symbol("beta")
C = ParamPoly.symbol("c")
A0 = ParamPoly.symbol("a0")
A1 = ParamPoly.symbol("a1")
A2 = ParamPoly.symbol("a2")
