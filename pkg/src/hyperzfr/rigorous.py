"""Directed-rounding helpers for certificate arithmetic.

Two independent routes to enclosures of natural logarithms:

* :func:`ln_interval` uses mpmath interval arithmetic (outward rounding at
  ``PREC_BITS`` bits). Certificates are issued with it.
* :func:`ln_bounds_rational` uses only :class:`fractions.Fraction` and an
  atanh series with an explicit tail bound. The certificate checker uses it,
  so a certificate never vouches for itself.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction

from mpmath import iv, libmp

PREC_BITS = 192
SIG_DIGITS = 20
EXACT_RADIUS_MAX_DELTA = 4096


@contextmanager
def _ivprec(bits: int):
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


def _iv(x):
    x = Fraction(x)
    return iv.mpf(x.numerator) / iv.mpf(x.denominator)


def _endpoints(r) -> tuple[Fraction, Fraction]:
    a, b = r._mpi_
    return Fraction(*libmp.to_rational(a)), Fraction(*libmp.to_rational(b))


def ln_interval(x, bits: int = PREC_BITS) -> tuple[Fraction, Fraction]:
    """Rational ``(lo, hi)`` with ``lo <= ln(x) <= hi``."""
    if Fraction(x) <= 0:
        raise ValueError("logarithm of a nonpositive number")
    with _ivprec(bits):
        return _endpoints(iv.log(_iv(x)))


def root_interval(x, q: int, bits: int = PREC_BITS) -> tuple[Fraction, Fraction]:
    """Enclosure of ``x ** (1/q)`` for ``x > 0``."""
    with _ivprec(bits):
        return _endpoints(iv.exp(iv.log(_iv(x)) / q))


def _decimal_scale(q: Fraction, sig: int) -> Fraction:
    e = math.floor(math.log10(q)) if q > 0 else 0
    return Fraction(10) ** (sig - 1 - e)


def round_up(q, sig: int = SIG_DIGITS) -> Fraction:
    """Smallest ``sig``-significant-digit decimal rational ``>= q`` (q > 0)."""
    q = Fraction(q)
    if q <= 0:
        return q
    s = _decimal_scale(q, sig)
    return Fraction(math.ceil(q * s)) / s


def round_down(q, sig: int = SIG_DIGITS) -> Fraction:
    """Largest ``sig``-significant-digit decimal rational ``<= q`` (q > 0)."""
    q = Fraction(q)
    if q <= 0:
        return q
    s = _decimal_scale(q, sig)
    return Fraction(math.floor(q * s)) / s


def fmt(q: Fraction) -> str:
    """``NUM/DEN`` (or ``NUM`` for integers)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# ----------------------------------------------------- pure-rational logarithm

def _atanh_bounds(z: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    # 0 <= z <= 1/3; partial sums are lower bounds, tail < z^(2J+3) / ((2J+3)(1-z^2))
    eps = Fraction(1, 1 << bits)
    z2 = z * z
    term = z
    total = Fraction(0)
    lost = Fraction(0)
    grid = 1 << (bits + 16)
    j = 0
    while True:
        total += term / (2 * j + 1)
        term *= z2
        tail = term / ((2 * j + 3) * (1 - z2))
        if tail < eps:
            return total, total + tail + lost
        j += 1
        # keep the partial sum small: truncate downward to a dyadic, track the loss
        if j % 8 == 0:
            total = Fraction(math.floor(total * grid), grid)
            lost += Fraction(1, grid)


def ln_bounds_rational(x, bits: int = 128) -> tuple[Fraction, Fraction]:
    """``(lo, hi)`` with ``lo <= ln(x) <= hi`` using rational arithmetic only."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("logarithm of a nonpositive number")
    m = x.numerator.bit_length() - x.denominator.bit_length()
    t = x / (Fraction(2) ** m)
    if t < 1:
        m -= 1
        t *= 2
    elif t >= 2:
        m += 1
        t /= 2
    a_lo, a_hi = _atanh_bounds(Fraction(1, 3), bits)
    ln2_lo, ln2_hi = 2 * a_lo, 2 * a_hi
    t_lo, t_hi = _atanh_bounds((t - 1) / (t + 1), bits)
    t_lo, t_hi = 2 * t_lo, 2 * t_hi
    if m >= 0:
        return m * ln2_lo + t_lo, m * ln2_hi + t_hi
    return m * ln2_hi + t_lo, m * ln2_lo + t_hi


# ---------------------------------------------------------- zero-free radii

def gmpst_radius(delta: int) -> Fraction:
    """``delta^delta / (delta+1)^(delta+1)``: hypergraph zero-free disk radius.

    Exact for ``delta <= EXACT_RADIUS_MAX_DELTA``; above that a
    ``SIG_DIGITS``-digit rational rounded down (a smaller radius is the
    conservative direction).
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    if delta <= EXACT_RADIUS_MAX_DELTA:
        return Fraction(delta ** delta, (delta + 1) ** (delta + 1))
    with _ivprec(PREC_BITS):
        r = iv.exp(delta * iv.log(iv.mpf(delta)) - (delta + 1) * iv.log(iv.mpf(delta + 1)))
        lo, _ = _endpoints(r)
    return round_down(lo)


def shearer_radius(delta: int) -> Fraction | None:
    """``(delta-1)^(delta-1) / delta^delta`` for graphs; ``None`` when ``delta < 1``."""
    if delta < 1:
        return None
    if delta <= EXACT_RADIUS_MAX_DELTA:
        return Fraction((delta - 1) ** (delta - 1), delta ** delta)
    with _ivprec(PREC_BITS):
        r = iv.exp((delta - 1) * iv.log(iv.mpf(delta - 1)) - delta * iv.log(iv.mpf(delta)))
        lo, _ = _endpoints(r)
    return round_down(lo)
