"""Sparse multivariate polynomials and fraction-free determinants.

Everything here is exact: coefficients are Python ints or Fractions,
never floats.  The determinant routine is the Bareiss one-step
fraction-free elimination, which works over any integral domain whose
elements support +, -, * and exact division.  Matrix entries may be
ints, Fractions, or MultivariatePolynomial instances (mixed int/poly
is fine since ints embed as constants).
"""

from __future__ import annotations

from fractions import Fraction


class MultivariatePolynomial:
    """Polynomial in ``nvars`` variables with int or Fraction coefficients.

    Terms are stored as a dict mapping exponent tuples to nonzero
    coefficients.  The zero polynomial has an empty dict.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for expo, coef in terms.items():
                if coef:
                    if len(expo) != nvars:
                        raise ValueError("exponent tuple of wrong length")
                    self.terms[tuple(expo)] = coef

    @classmethod
    def constant(cls, value, nvars):
        if value:
            return cls(nvars, {(0,) * nvars: value})
        return cls(nvars)

    @classmethod
    def variable(cls, index, nvars):
        expo = [0] * nvars
        expo[index] = 1
        return cls(nvars, {tuple(expo): 1})

    def is_zero(self):
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, MultivariatePolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return MultivariatePolynomial.constant(other, self.nvars)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultivariatePolynomial.constant(other, self.nvars)
        if not isinstance(other, MultivariatePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for expo, coef in other.terms.items():
            s = out.get(expo, 0) + coef
            if s:
                out[expo] = s
            else:
                out.pop(expo, None)
        return MultivariatePolynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultivariatePolynomial(
            self.nvars, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(expo, 0) + c1 * c2
                if s:
                    out[expo] = s
                else:
                    del out[expo]
        return MultivariatePolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = MultivariatePolynomial.constant(1, self.nvars)
        for _ in range(n):
            result = result * self
        return result

    def leading_term(self):
        """(exponent, coefficient) maximal in graded lexicographic order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        expo = max(self.terms, key=lambda e: (sum(e), e))
        return expo, self.terms[expo]

    def exact_div(self, divisor):
        """Quotient self / divisor, assuming the division is exact.

        Repeated leading-term elimination in graded-lex order.  Raises
        ValueError if at any step the divisor's leading term does not
        divide the remainder's, which for a true divisor cannot happen.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        de, dc = divisor.leading_term()
        quotient = MultivariatePolynomial(self.nvars)
        remainder = self
        while not remainder.is_zero():
            re, rc = remainder.leading_term()
            step = tuple(a - b for a, b in zip(re, de))
            if any(x < 0 for x in step):
                raise ValueError("inexact polynomial division")
            if isinstance(rc, int) and isinstance(dc, int):
                q, r = divmod(rc, dc)
                if r:
                    raise ValueError("inexact coefficient division")
            else:
                q = Fraction(rc) / Fraction(dc)
            term = MultivariatePolynomial(self.nvars, {step: q})
            quotient = quotient + term
            remainder = remainder - term * divisor
        return quotient

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def weighted_degrees(self, weights):
        """Set of weighted degrees of the monomials under given weights."""
        return {
            sum(w * x for w, x in zip(weights, e)) for e in self.terms
        }

    def coefficient(self, expo):
        return self.terms.get(tuple(expo), 0)

    def evaluate(self, values):
        """Evaluate at a point; values is a sequence of length nvars."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = 0
        for expo, coef in self.terms.items():
            term = coef
            for v, p in zip(values, expo):
                if p:
                    term *= v**p
            total += term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            coef = self.terms[expo]
            factors = []
            for i, p in enumerate(expo):
                if p == 1:
                    factors.append(f"x{i}")
                elif p > 1:
                    factors.append(f"x{i}^{p}")
            if factors:
                body = "*".join(factors)
                if coef == 1:
                    parts.append(body)
                elif coef == -1:
                    parts.append(f"-{body}")
                else:
                    parts.append(f"{coef}*{body}")
            else:
                parts.append(str(coef))
        return " + ".join(parts).replace("+ -", "- ")


def _exact_quotient(numer, denom):
    # division guaranteed exact by the Bareiss identity
    if isinstance(numer, MultivariatePolynomial):
        return numer.exact_div(denom)
    if isinstance(denom, MultivariatePolynomial):
        # int / poly is only exact when denom is constant
        return MultivariatePolynomial.constant(numer, denom.nvars).exact_div(denom)
    if isinstance(numer, int) and isinstance(denom, int):
        q, r = divmod(numer, denom)
        assert r == 0, "Bareiss division left a remainder"
        return q
    return Fraction(numer) / Fraction(denom)


def det_fraction_free(rows):
    """Exact determinant by Bareiss elimination with row pivoting.

    Accepts a square list-of-lists whose entries are ints, Fractions,
    or MultivariatePolynomial values.  All intermediate divisions are
    exact, so no rounding ever occurs.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero_entry(m[k][k]):
            pivot_row = next(
                (i for i in range(k + 1, n) if not _is_zero_entry(m[i][k])), None
            )
            if pivot_row is None:
                return _zero_like(m[k][k])
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numer = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = _exact_quotient(numer, prev)
            m[i][k] = 0
        prev = m[k][k]
    result = m[n - 1][n - 1]
    if sign < 0:
        result = -result
    return result


def _is_zero_entry(x):
    if isinstance(x, MultivariatePolynomial):
        return x.is_zero()
    return x == 0


def _zero_like(x):
    if isinstance(x, MultivariatePolynomial):
        return MultivariatePolynomial(x.nvars)
    return 0
