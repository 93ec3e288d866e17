"""Exact scalar and polynomial arithmetic.

Everything downstream works over plain Python integers and
:class:`fractions.Fraction` (both are arbitrary precision), univariate
polynomials in the formal dimension variable ``N``, and multiplicative
formulas taken modulo nonzero rational squares.  Nothing in this module
is ever approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Rat = Union[int, Fraction]


class DegreeBoundError(ValueError):
    """Sampled data is not polynomial of the assumed degree."""


# ---------------------------------------------------------------------------
# integer factorization
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic Miller-Rabin witnesses for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")  # pragma: no cover


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer as {prime: exponent}."""
    if n <= 0:
        raise ValueError("factorint needs a positive integer")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 41
    while p * p <= n and p < 100_000:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    # anything that survives trial division is handled by rho splitting
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def squarefree_part(x: Rat) -> tuple[int, dict[int, int]]:
    """Square class of a nonzero rational.

    Returns the squarefree integer representing ``x`` modulo nonzero
    rational squares together with the prime factorization of
    ``|numerator * denominator|`` (after normalization).  The sign of
    ``x`` is preserved on the squarefree representative.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero has no square class")
    fact = factorint(abs(x.numerator) * x.denominator)
    sf = 1
    for p, e in fact.items():
        if e % 2:
            sf *= p
    return (sf if x > 0 else -sf), fact


# ---------------------------------------------------------------------------
# polynomials in N
# ---------------------------------------------------------------------------


def _as_fraction_tuple(coeffs: Iterable[Rat]) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial in N with exact rational coefficients.

    Coefficients are stored ascending by degree; the zero polynomial has
    an empty coefficient tuple.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[Rat] = ()):
        object.__setattr__(self, "coeffs", _as_fraction_tuple(coeffs))

    # -- basics ------------------------------------------------------------

    @staticmethod
    def const(c: Rat) -> "Poly":
        return Poly((c,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, value: Rat) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Poly | Rat") -> "Poly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly | Rat") -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Poly | Rat") -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "Poly | Rat") -> "Poly":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        out = Poly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.leading()
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            q = rem[-1] / lead
            quot[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= q * c
            rem.pop()
        return Poly(quot), Poly(rem)

    def divexact(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"inexact polynomial division: {self} / {other}")
        return q

    # -- structure ----------------------------------------------------------

    def content(self) -> Fraction:
        """gcd of the coefficients, signed by the leading coefficient."""
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
        g = Fraction(num, den)
        return g if self.leading() > 0 else -g

    def primitive(self) -> "Poly":
        c = self.content()
        if c == 0:
            return self
        return Poly(tuple(x / c for x in self.coeffs))

    def newton_coeffs(self) -> list[Fraction]:
        """Coefficients of this polynomial in the binomial basis C(N,k).

        ``p = sum_k a_k * C(N,k)`` with ``a_k`` the k-th forward
        difference of p at 0.  Integer-valued polynomials have integer
        a_k.
        """
        vals = [self(i) for i in range(len(self.coeffs) or 1)]
        out = []
        while vals:
            out.append(vals[0])
            vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
        return out

    @staticmethod
    def from_binomials(combo: Mapping[int, Rat]) -> "Poly":
        out = Poly()
        for k, a in combo.items():
            out = out + binomial_poly(k) * a
        return out

    # -- display ------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = _frac_str(abs(c))
            else:
                mono = "N" if i == 1 else f"N^{i}"
                term = mono if abs(c) == 1 else f"{_frac_str(abs(c))}*{mono}"
            parts.append(("- " if c < 0 else "+ " if parts else "") + term)
        return " ".join(parts).lstrip("+ ")

    def factored_str(self) -> str:
        """Product-of-linear-factors display, e.g. ``N*(N-1)/2``."""
        if self.is_zero():
            return "0"
        content, linear, residual = poly_factor_rational(self)
        pieces = []
        if abs(content.numerator) != 1:
            pieces.append(str(content.numerator))

        def root_order(fm):
            root = -fm[0].coeffs[0] / fm[0].coeffs[1]
            if root == 0:
                return (0, Fraction(0))
            return (1, root) if root > 0 else (2, -root)

        for fac, mult in sorted(linear, key=root_order):
            if fac.leading() != 1:
                s = f"({fac})"
            else:
                root = -fac.coeffs[0]
                if root == 0:
                    s = "N"
                elif root > 0:
                    s = f"(N-{root})"
                else:
                    s = f"(N+{-root})"
            pieces.append(s if mult == 1 else f"{s}^{mult}")
        if residual.degree > 0:
            pieces.append(f"({residual})")
        body = "*".join(pieces) if pieces else "1"
        if content.numerator < 0:
            body = "-" + body
        if content.denominator != 1:
            body += f"/{content.denominator}"
        return body


def _coerce(v: "Poly | Rat") -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly.const(v)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


POLY_N = Poly((0, 1))


@lru_cache(maxsize=None)
def binomial_poly(k: int) -> Poly:
    """The binomial coefficient C(N,k) as a polynomial in N."""
    if k < 0:
        return Poly()
    out = Poly.const(Fraction(1, math.factorial(k)))
    for i in range(k):
        out = out * Poly((-i, 1))
    return out


def poly_factor_rational(p: Poly) -> tuple[Fraction, list[tuple[Poly, int]], Poly]:
    """Split off the rational content and all rational linear factors.

    Returns ``(content, [(factor, multiplicity), ...], residual)`` with
    ``p == content * prod(factor**mult) * residual``, each factor a
    primitive integer polynomial ``N - root`` (monic), and the residual
    free of rational roots (monic).
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    content = p.content()
    prim = p.primitive()
    factors: list[tuple[Poly, int]] = []
    # integer-coefficient copy for rational root search
    while prim.degree > 0:
        root = _find_rational_root(prim)
        if root is None:
            break
        lin = Poly((-root, 1))
        mult = 0
        while True:
            q, r = divmod(prim, lin)
            if not r.is_zero():
                break
            prim = q
            mult += 1
        # rational (non-integer) roots keep the factor primitive: q*N - p
        if root.denominator != 1:
            lin = Poly((-root.numerator, root.denominator))
            content *= Fraction(1, root.denominator) ** mult
        factors.append((lin, mult))
    factors.sort(key=lambda t: (t[0].degree, tuple(t[0].coeffs)))
    # fold any scalar drift from deflation back into the content
    resid_content = prim.content()
    if resid_content not in (0, 1):
        content *= resid_content
        prim = prim.primitive()
    return content, factors, prim


def _find_rational_root(p: Poly) -> Fraction | None:
    # clear denominators
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    # strip powers of N
    if ints[0] == 0:
        return Fraction(0)
    a0, ad = abs(ints[0]), abs(ints[-1])
    for q in sorted(_divisors(ad)):
        for r in sorted(_divisors(a0)):
            for cand in (Fraction(r, q), Fraction(-r, q)):
                if p(cand) == 0:
                    return cand
    return None


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def interpolate(points: list[tuple[int, Rat]], degree_bound: int) -> Poly:
    """Exact polynomial through ``points`` with checked degree bound.

    Fits the unique polynomial of degree <= ``degree_bound`` through the
    first ``degree_bound + 1`` points (Newton divided differences) and
    verifies it against every remaining point.  At least
    ``degree_bound + 2`` points with distinct abscissae are required, so
    the fit is always cross-checked.
    """
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    if len(points) < degree_bound + 2:
        raise ValueError("need at least degree_bound + 2 sample points")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("sample abscissae must be distinct")
    fit = points[: degree_bound + 1]
    # divided difference table
    coefs = [Fraction(v) for _, v in fit]
    for j in range(1, len(fit)):
        for i in range(len(fit) - 1, j - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (fit[i][0] - fit[i - j][0])
    poly = Poly()
    base = Poly.const(1)
    for i, c in enumerate(coefs):
        poly = poly + base * c
        base = base * Poly((-fit[i][0], 1))
    for x, v in points[degree_bound + 1:]:
        if poly(x) != Fraction(v):
            raise DegreeBoundError("degree bound violated")
    return poly


# ---------------------------------------------------------------------------
# fraction-free determinants and exact rank
# ---------------------------------------------------------------------------


def bareiss_det(matrix: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def poly_matrix_rank(matrix: list[list[Poly]]) -> int:
    """Rank of a polynomial matrix over the rational function field."""
    m = [row[:] for row in matrix]
    rank = 0
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for col in range(cols):
        pivot = None
        for i in range(rank, rows):
            if not m[i][col].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, rows):
            if m[i][col].is_zero():
                continue
            factor = m[i][col]
            m[i] = [m[i][j] * pv - m[rank][j] * factor for j in range(cols)]
        rank += 1
        if rank == rows:
            break
    return rank


def poly_matrix_det(matrix: list[list[Poly]]) -> Poly:
    """Determinant of a small polynomial matrix (cofactor expansion)."""
    n = len(matrix)
    if n == 0:
        return Poly.const(1)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    out = Poly()
    for j in range(n):
        if matrix[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * poly_matrix_det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


# ---------------------------------------------------------------------------
# square-class formulas
# ---------------------------------------------------------------------------


def _poly_key(p: Poly) -> tuple[Fraction, ...]:
    return p.coeffs


@dataclass
class SquareClassFormula:
    """A product ``prod base^exponent(N) * det(B)^detB_exponent(N)``.

    Integer bases are primes; polynomial bases are primitive integer
    polynomials without rational roots beyond themselves (linear in
    everything this engine produces).  Exponents are integer-valued
    polynomials in N.  The ``unreduced`` flag marks formulas whose
    polynomial part could not be split into linear factors, in which
    case no square-class reduction was attempted on it.
    """

    prime_factors: dict[int, Poly] = field(default_factory=dict)
    poly_factors: dict[tuple[Fraction, ...], Poly] = field(default_factory=dict)
    detB_exponent: Poly = field(default_factory=Poly)
    unreduced: bool = False

    # -- construction -------------------------------------------------------

    @staticmethod
    def one() -> "SquareClassFormula":
        return SquareClassFormula()

    @staticmethod
    def from_integer(value: Rat, exponent: Poly) -> "SquareClassFormula":
        """value^exponent as a formula (value factored into primes)."""
        value = Fraction(value)
        if value <= 0:
            raise ValueError("only positive bases occur in these formulas")
        out = SquareClassFormula()
        num = factorint(value.numerator)
        den = factorint(value.denominator)
        for p, e in num.items():
            out._add_prime(p, exponent * e)
        for p, e in den.items():
            out._add_prime(p, exponent * (-e))
        return out

    def _add_prime(self, p: int, expo: Poly) -> None:
        cur = self.prime_factors.get(p, Poly()) + expo
        if cur.is_zero():
            self.prime_factors.pop(p, None)
        else:
            self.prime_factors[p] = cur

    def _add_poly(self, base: Poly, expo: Poly) -> None:
        key = _poly_key(base)
        cur = self.poly_factors.get(key, Poly()) + expo
        if cur.is_zero():
            self.poly_factors.pop(key, None)
        else:
            self.poly_factors[key] = cur

    def times(self, other: "SquareClassFormula", power: int = 1) -> "SquareClassFormula":
        """Product with other^power (power may be negative)."""
        out = self.copy()
        for p, e in other.prime_factors.items():
            out._add_prime(p, e * power)
        for key, e in other.poly_factors.items():
            out._add_poly(Poly(key), e * power)
        out.detB_exponent = out.detB_exponent + other.detB_exponent * power
        out.unreduced = out.unreduced or other.unreduced
        return out

    def with_poly_value(self, value: Poly, exponent: Poly) -> "SquareClassFormula":
        """Multiply by value(N)^exponent, splitting value into factors.

        The content goes in through the prime table; linear factors
        become polynomial bases.  A nonsplitting residual sets the
        ``unreduced`` flag and is carried as an opaque polynomial base.
        """
        out = self.copy()
        content, linear, residual = poly_factor_rational(value)
        if content < 0:
            raise ValueError("negative content in a Gram determinant")
        if content != 1:
            for p, e in factorint(content.numerator).items():
                out._add_prime(p, exponent * e)
            for p, e in factorint(content.denominator).items():
                out._add_prime(p, exponent * (-e))
        for fac, mult in linear:
            out._add_poly(fac, exponent * mult)
        if residual.degree > 0:
            out._add_poly(residual, exponent)
            out.unreduced = True
        return out

    def copy(self) -> "SquareClassFormula":
        return SquareClassFormula(
            dict(self.prime_factors),
            dict(self.poly_factors),
            self.detB_exponent,
            self.unreduced,
        )

    # -- reduction -----------------------------------------------------------

    def reduced(self) -> "SquareClassFormula":
        """Canonical square-class form.

        Every factor exponent is rewritten in the binomial basis C(N,k)
        and its integer coefficients are reduced mod 2 to {0,1}.  The
        det(B) exponent is exact bookkeeping and is left untouched.
        """
        out = SquareClassFormula(detB_exponent=self.detB_exponent, unreduced=self.unreduced)
        for p, e in self.prime_factors.items():
            r = _reduce_exponent(e)
            if not r.is_zero():
                out.prime_factors[p] = r
        for key, e in self.poly_factors.items():
            r = _reduce_exponent(e)
            if not r.is_zero():
                out.poly_factors[key] = r
        return out

    def reduced_key(self) -> tuple:
        """Hashable canonical form used for golden-table comparison."""
        r = self.reduced()
        primes = tuple(sorted((p, _binomial_ks(e)) for p, e in r.prime_factors.items()))
        polys = tuple(sorted((key, _binomial_ks(e)) for key, e in r.poly_factors.items()))
        return primes, polys

    def evaluate_class(self, n_value: int) -> int:
        """Squarefree representative at a concrete N (det(B) excluded)."""
        acc = Fraction(1)
        for p, e in self.prime_factors.items():
            if int(e(n_value)) % 2:
                acc *= p
        for key, e in self.poly_factors.items():
            if int(e(n_value)) % 2:
                v = Poly(key)(n_value)
                if v == 0:
                    raise ZeroDivisionError("formula degenerates at this N")
                acc *= v
        return squarefree_part(acc)[0]

    def is_square(self) -> bool:
        r = self.reduced()
        return not r.prime_factors and not r.poly_factors

    # -- display ------------------------------------------------------------

    def render_text(self, detb_name: str = "det(B)") -> str:
        parts = []
        for p in sorted(self.prime_factors):
            parts.append(_render_power(str(p), self.prime_factors[p]))
        for key in sorted(self.poly_factors):
            base = Poly(key)
            parts.append(_render_power(f"({base})", self.poly_factors[key]))
        if not self.detB_exponent.is_zero():
            es = str(self.detB_exponent)
            parts.append(detb_name if es == "1" else f"{detb_name}^({es})")
        return " * ".join(parts) if parts else "1"

    def render_latex(self) -> str:
        parts = []
        for p in sorted(self.prime_factors):
            parts.append(f"{p}^{{{_exponent_latex(self.prime_factors[p])}}}")
        for key in sorted(self.poly_factors):
            parts.append(f"({Poly(key)})^{{{_exponent_latex(self.poly_factors[key])}}}")
        if not self.detB_exponent.is_zero():
            parts.append(f"\\det(B)^{{{self.detB_exponent}}}")
        return " ".join(parts) if parts else "1"

    def to_json(self) -> dict:
        factors = []
        for p in sorted(self.prime_factors):
            factors.append({
                "base": str(p),
                "exponent_binomials": _binomial_combo_json(self.prime_factors[p]),
            })
        for key in sorted(self.poly_factors):
            factors.append({
                "base": str(Poly(key)),
                "exponent_binomials": _binomial_combo_json(self.poly_factors[key]),
            })
        return {
            "factors": factors,
            "detB_exponent": str(self.detB_exponent),
            "display": self.render_text(),
            "unreduced": self.unreduced,
        }


def _reduce_exponent(e: Poly) -> Poly:
    combo = {}
    for k, a in enumerate(e.newton_coeffs()):
        if a.denominator != 1:
            raise ValueError(f"exponent {e} is not integer-valued")
        if a.numerator % 2:
            combo[k] = 1
    return Poly.from_binomials(combo)


def _binomial_ks(e: Poly) -> tuple[int, ...]:
    return tuple(k for k, a in enumerate(e.newton_coeffs()) if a % 2)


def _exponent_str(e: Poly) -> str:
    """Exponent in C(N,k) notation when that is natural, else raw."""
    combo = e.newton_coeffs()
    if any(a.denominator != 1 for a in combo):
        return str(e)
    terms = []
    for k, a in enumerate(combo):
        a = a.numerator
        if a == 0:
            continue
        if k == 0:
            terms.append(str(a))
        elif k == 1:
            terms.append("N" if a == 1 else f"{a}*N")
        else:
            terms.append(f"C(N,{k})" if a == 1 else f"{a}*C(N,{k})")
    return "+".join(terms) if terms else "0"


def _render_power(base: str, e: Poly) -> str:
    es = _exponent_str(e)
    if es == "1":
        return base
    if "+" in es or "-" in es or "*" in es:
        es = f"({es})"
    return f"{base}^{es}"


def _exponent_latex(e: Poly) -> str:
    combo = e.newton_coeffs()
    if any(a.denominator != 1 for a in combo):
        return str(e)
    terms = []
    for k, a in enumerate(combo):
        a = a.numerator
        if a == 0:
            continue
        if k == 0:
            terms.append(str(a))
        elif k == 1:
            terms.append("N" if a == 1 else f"{a}N")
        else:
            bin_ = f"\\binom{{N}}{{{k}}}"
            terms.append(bin_ if a == 1 else f"{a}{bin_}")
    return "+".join(terms) if terms else "0"


def _binomial_combo_json(e: Poly) -> dict[str, str]:
    return {str(k): str(a) for k, a in enumerate(e.newton_coeffs()) if a != 0}
