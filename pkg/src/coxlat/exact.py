"""Exact integer polynomials and truncated formal power series.

A polynomial is a plain list of Python ints indexed by degree, with no
trailing zeros; the zero polynomial is the empty list.  Python's unbounded
integers provide the exact arithmetic.  A PowerSeries wraps a coefficient
tuple of fixed length order+1.  Division that would leave a fractional
coefficient raises NonIntegralCoefficient instead of silently promoting
to rationals: every series in scope is integral, so a fraction signals a
construction bug upstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NonIntegralCoefficient, OrderMismatch, ZeroConstantTerm

Poly = list  # list[int] indexed by degree, canonical (no trailing zeros)


def poly_trim(coeffs: Iterable[int]) -> Poly:
    """Strip trailing zeros, giving the canonical representative."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_deg(p: Sequence[int]) -> int:
    """Degree of a canonical polynomial; the zero polynomial reports -1."""
    return len(p) - 1


def poly_add(p: Sequence[int], q: Sequence[int]) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_neg(p: Sequence[int]) -> Poly:
    return [-c for c in p]


def poly_sub(p: Sequence[int], q: Sequence[int]) -> Poly:
    return poly_add(p, poly_neg(q))


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    """Exact product; deg(p*q) = deg p + deg q unless a factor is zero."""
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    # leading coefficients are nonzero over the integers, but trim anyway
    return poly_trim(out)


def poly_eval(p: Sequence[int], x: int) -> int:
    """Evaluate at an integer point by Horner's rule."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_to_string(p: Sequence[int], var: str = "t") -> str:
    """Signed monomials, highest degree first, e.g. ``t^2 - 2*t + 1``."""
    if not p:
        return "0"
    parts = []
    for d in range(len(p) - 1, -1, -1):
        c = p[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            t = var if d == 1 else f"{var}^{d}"
            body = t if mag == 1 else f"{mag}*{t}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class PowerSeries:
    """Formal power series truncated at a fixed order, exact coefficients.

    ``coeffs`` has length order+1; index = power of t.
    """

    coeffs: tuple

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) == 0:
            raise ValueError("a power series carries at least its order-0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def series_from_poly(p: Sequence[int], order: int) -> PowerSeries:
    """Truncate a polynomial to a series of the given order."""
    return PowerSeries(tuple(p[k] if k < len(p) else 0 for k in range(order + 1)))


def series_from_rational(num: Sequence[int], den: Sequence[int], order: int) -> PowerSeries:
    """Expand num/den as a power series up to the given order.

    Uses the linear recurrence den[0]*c[k] = num[k] - sum_j den[j]*c[k-j];
    raises ZeroConstantTerm if den(0) = 0 and NonIntegralCoefficient as soon
    as a coefficient fails to divide exactly.
    """
    num = poly_trim(num)
    den = poly_trim(den)
    if not den or den[0] == 0:
        raise ZeroConstantTerm("denominator has zero constant term")
    d0 = den[0]
    out = []
    for k in range(order + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        q, r = divmod(acc, d0)
        if r:
            raise NonIntegralCoefficient(f"coefficient of t^{k} is {acc}/{d0}")
        out.append(q)
    return PowerSeries(tuple(out))


def series_equal(a: PowerSeries, b: PowerSeries):
    """Compare two series of equal order.

    Returns (True, None) on equality, else (False, k) with k the smallest
    index where the coefficients differ.
    """
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    for k, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return False, k
    return True, None


def series_mul_poly(s: PowerSeries, p: Sequence[int]) -> PowerSeries:
    """Multiply a series by a polynomial, truncating at the series order."""
    n = s.order
    out = [0] * (n + 1)
    for j, c in enumerate(p):
        if c == 0 or j > n:
            continue
        for k in range(j, n + 1):
            out[k] += c * s.coeffs[k - j]
    return PowerSeries(tuple(out))
