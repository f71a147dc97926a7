"""Real-root isolation by exact bisection, an Aberth-Ehrlich solver for all
complex roots, and conformance checks against known zero-free disks."""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .polynomial import IntPolynomial, evaluate_exact
from .rigorous import fmt, gmpst_radius, shearer_radius

GRID_POINTS = 1024
ABERTH_SEED = 20240101
ABERTH_MAX_ITER = 1000
NUMERIC_SLACK = 1e-6
STALL_ITER = 50


def sign_at(P: IntPolynomial, x) -> int:
    v = evaluate_exact(P, x)
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class RootBracket:
    """``[lo, hi]`` with a sign change of ``P``, or an exact root."""

    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int
    exact_root: Fraction | None = None

    @property
    def center(self) -> Fraction:
        if self.exact_root is not None:
            return self.exact_root
        return (self.lo + self.hi) / 2

    def to_dict(self) -> dict:
        d = {"lo": fmt(self.lo), "hi": fmt(self.hi), "sign_lo": self.sign_lo, "sign_hi": self.sign_hi}
        d["exact_root"] = None if self.exact_root is None else fmt(self.exact_root)
        return d


def _exact(x: Fraction) -> RootBracket:
    return RootBracket(x, x, 0, 0, x)


def _bisect(P, lo, hi, slo, shi, tol):
    while hi - lo > tol:
        mid = (lo + hi) / 2
        sm = sign_at(P, mid)
        if sm == 0:
            return _exact(mid)
        if sm == slo:
            lo, slo = mid, sm
        else:
            hi, shi = mid, sm
    return RootBracket(lo, hi, slo, shi)


def isolate_real_root(P: IntPolynomial, lo, hi, tol, grid: int = GRID_POINTS) -> RootBracket | None:
    """Bracket a real root of ``P`` in ``[lo, hi]`` to width ``<= tol``.

    Uses the endpoint sign change when there is one; otherwise scans ``grid``
    equally spaced points and refines the leftmost sign change. Roots of even
    multiplicity without a nearby sign change are not found.
    """
    lo, hi, tol = Fraction(lo), Fraction(hi), Fraction(tol)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if tol <= 0:
        raise ValueError("tol must be positive")
    slo, shi = sign_at(P, lo), sign_at(P, hi)
    if slo == 0:
        return _exact(lo)
    if shi == 0:
        return _exact(hi)
    if slo != shi:
        return _bisect(P, lo, hi, slo, shi, tol)
    step = (hi - lo) / (grid - 1)
    prev_x, prev_s = lo, slo
    for j in range(1, grid):
        x = hi if j == grid - 1 else lo + step * j
        s = sign_at(P, x)
        if s == 0:
            return _exact(x)
        if s != prev_s:
            return _bisect(P, prev_x, x, prev_s, s, tol)
        prev_x, prev_s = x, s
    return None


# ------------------------------------------------------------ complex roots

@dataclass(frozen=True)
class ComplexRoot:
    value: complex
    residual: float

    def to_dict(self) -> dict:
        return {"re": repr(self.value.real), "im": repr(self.value.imag), "residual": repr(self.residual)}


@dataclass
class ComplexRootResult:
    roots: list
    converged: bool
    iterations: int

    def to_dict(self) -> dict:
        return {"converged": self.converged, "iterations": self.iterations,
                "roots": [r.to_dict() for r in self.roots]}


def _trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    if not a:
        a.append(0)
    return a


def _deriv(a):
    return _trim([i * a[i] for i in range(1, len(a))] or [0])


def _sub(a, b):
    w = max(len(a), len(b))
    return _trim([(a[j] if j < len(a) else 0) - (b[j] if j < len(b) else 0) for j in range(w)])


def _primitive(a):
    """Integer polynomial divided by its content, leading coefficient positive."""
    g = 0
    for x in a:
        g = math.gcd(g, x)
    if g == 0:
        return [0]
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def _prem(a, b):
    # pseudo-remainder: lc(b)^t * a mod b, staying in Z[x]
    r = list(a)
    lb = b[-1]
    while len(r) >= len(b) and r != [0]:
        k = len(r) - len(b)
        f = r[-1]
        r = [x * lb for x in r]
        for i, bc in enumerate(b):
            r[k + i] -= f * bc
        r.pop()
        _trim(r)
    return r


def _gcd(a, b):
    """Primitive gcd in Z[x] by the primitive remainder sequence."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b != [0]:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r != [0] else [0])
    return [1] if len(a) == 1 else a


def _divexact(a, b):
    """``a / b`` when ``b`` divides ``a`` in Z[x]."""
    r = list(a)
    q = [0] * max(1, len(r) - len(b) + 1)
    while len(r) >= len(b) and r != [0]:
        k = len(r) - len(b)
        f, rem = divmod(r[-1], b[-1])
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = f
        for i, bc in enumerate(b):
            r[k + i] -= f * bc
        r.pop()
        _trim(r)
    if r != [0]:
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


_MOD_P = (1 << 61) - 1


def _gcd_degree_mod(a, b, p=_MOD_P):
    a = _trim([x % p for x in a])
    b = _trim([x % p for x in b])
    while b != [0]:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b) and a != [0]:
            k = len(a) - len(b)
            f = a[-1] * inv % p
            for i, bc in enumerate(b):
                a[k + i] = (a[k + i] - f * bc) % p
            a.pop()
            _trim(a)
        a, b = b, a
    return len(a) - 1


def squarefree_factors(P: IntPolynomial) -> list:
    """Yun's decomposition: ``[(factor, multiplicity), ...]`` with rational
    monic factors of positive degree, so ``P = c * prod factor^mult``.

    A gcd modulo a large prime settles the common square-free case; a
    trivial gcd there means a trivial gcd over Q, since the prime does not
    divide the leading coefficient.
    """
    f = _primitive(list(P.coeffs))
    out = []
    if len(f) < 2:
        return out

    def monic(a):
        return [Fraction(x, a[-1]) for x in a]

    df = _deriv(f)
    if f[-1] % _MOD_P and _gcd_degree_mod(f, df) == 0:
        return [(monic(f), 1)]
    a0 = _gcd(f, df)
    b = _divexact(f, a0)
    c = _divexact(df, a0)
    d = _sub(c, _deriv(b))
    i = 1
    while len(b) > 1:
        a = _gcd(b, d)
        if len(a) > 1:
            out.append((monic(a), i))
        b = _divexact(b, a)
        c = _divexact(d, a)
        d = _sub(c, _deriv(b))
        i += 1
    return out


def _scaled_coeffs(P: IntPolynomial) -> list:
    # divide by the largest coefficient exactly before going to floats
    big = max(abs(c) for c in P.coeffs)
    return [float(Fraction(c, big)) for c in P.coeffs]


def _horner2(c, z):
    p = 0j
    dp = 0j
    for a in reversed(c):
        dp = dp * z + p
        p = p * z + a
    return p, dp


def _residual(c, z) -> float:
    p = 0j
    scale = 0.0
    az = abs(z)
    for a in reversed(c):
        p = p * z + a
        scale = scale * az + abs(a)
    return abs(p) / scale if scale else abs(p)


def _aberth(c, tol, max_iter, seed):
    d = len(c) - 1
    # start on the circle of the geometric mean of the root moduli; the
    # Cauchy bound is far too large (and overflows) at high degree
    radius = (abs(c[0]) / abs(c[-1])) ** (1.0 / d) if c[0] else 1.0
    rng = random.Random(seed)
    theta0 = rng.uniform(0, 2 * math.pi / d)
    z = [radius * cmath.exp(1j * (theta0 + 2 * math.pi * j / d + rng.uniform(-0.1, 0.1) / d))
         for j in range(d)]
    converged = False
    it = 0
    best, best_it = math.inf, 0
    for it in range(1, max_iter + 1):
        biggest = 0.0
        for i in range(d):
            zi = z[i]
            p, dp = _horner2(c, zi)
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else complex(tol, tol)
            s = sum(1.0 / (zi - z[j]) for j in range(d) if j != i and zi != z[j])
            w = ratio / (1 - ratio * s)
            z[i] = zi - w
            biggest = max(biggest, abs(w) / max(1.0, abs(zi)))
        if not math.isfinite(biggest):
            break
        if biggest < tol:
            converged = True
            break
        if biggest < best / 2:
            best, best_it = biggest, it
        elif it - best_it > STALL_ITER:
            break
    return z, converged, it


def _dyadic(x: float, e: int) -> int:
    # x * 2^e as an exact integer; x must be a multiple of 2^-e
    num, den = x.as_integer_ratio()
    return num * ((1 << e) // den)


def _newton_ratio_exact(c, z: complex) -> complex:
    """``P(z)/P'(z)`` for integer coefficients ``c``, evaluated exactly at the
    double-precision point ``z`` and rounded once at the end."""
    e = max(x.as_integer_ratio()[1].bit_length() - 1 for x in (z.real, z.imag))
    a, b = _dyadic(z.real, e), _dyadic(z.imag, e)
    d = len(c) - 1
    # A = 2^(e(d-i)) p_i and D = 2^(e(d-i-1)) p'_i through the Horner recursion
    ar, ai = c[d], 0
    dr = di = 0
    for i in range(d - 1, -1, -1):
        dr, di = dr * a - di * b + ar, dr * b + di * a + ai
        ar, ai = ar * a - ai * b + (c[i] << (e * (d - i))), ar * b + ai * a
    if dr == 0 and di == 0:
        return complex(math.inf, 0)
    den = (dr * dr + di * di) << e
    # A / (D 2^e) = A conj(D) / (|D|^2 2^e); int / int rounds correctly
    return complex((ar * dr + ai * di) / den, (ai * dr - ar * di) / den)


def _aberth_exact(c, start, tol, max_iter):
    """The same iteration with Newton ratios from exact evaluation.

    Ill-conditioned high-degree factors stall in double precision with tiny
    backward residuals but wrong root positions, because rounding in the
    evaluation swamps the step; the iterates themselves stay doubles.
    """
    z = list(start)
    d = len(z)
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        biggest = 0.0
        for i in range(d):
            zi = z[i]
            ratio = _newton_ratio_exact(c, zi)
            if ratio == 0:
                continue
            s = sum(1.0 / (zi - z[j]) for j in range(d) if j != i and zi != z[j])
            w = ratio / (1 - ratio * s)
            z[i] = zi - w
            biggest = max(biggest, abs(w) / max(1.0, abs(zi)))
        if not math.isfinite(biggest):
            break
        if biggest < tol:
            converged = True
            break
    return z, converged, it


def complex_roots(P: IntPolynomial, tol: float = 1e-12, max_iter: int = ABERTH_MAX_ITER,
                  seed: int = ABERTH_SEED) -> ComplexRootResult:
    """All ``deg P`` roots, with multiplicity, by Aberth-Ehrlich iteration.

    Repeated roots are split off first by an exact square-free
    decomposition, so the iteration only ever sees simple roots. Each
    factor starts from roots of unity scaled by the geometric mean of its
    root moduli, with a
    fixed-seed angular perturbation. A factor that stalls in double
    precision is carried on with exactly evaluated Newton ratios.
    Each root carries its backward residual
    ``|P(z)| / sum |c_i| |z|^i`` with respect to ``P``.
    """
    if P.degree < 1:
        raise ValueError("complex_roots needs degree >= 1")
    c = _scaled_coeffs(P)
    z = []
    converged = True
    iters = 0
    for factor, mult in squarefree_factors(P):
        fc = [float(x) for x in factor]
        if len(fc) == 2:
            found, ok, it = [complex(-fc[0] / fc[1])], True, 0
        else:
            found, ok, it = _aberth(fc, tol, max_iter, seed)
            if not ok:
                lcm = math.lcm(*(x.denominator for x in factor))
                ic = _primitive([int(x * lcm) for x in factor])
                found, ok, more = _aberth_exact(ic, found, tol, max_iter)
                it += more
        converged &= ok
        iters = max(iters, it)
        z.extend(found * mult)
    roots = sorted((ComplexRoot(zi + 0j, _residual(c, zi)) for zi in z),
                   key=lambda r: (round(r.value.real, 9), round(r.value.imag, 9)))
    return ComplexRootResult(roots, converged, iters)


# ---------------------------------------------------------- ZFR conformance

@dataclass
class ZFRReport:
    delta: int
    gmpst_radius: Fraction
    shearer_radius: Fraction | None
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"delta": self.delta, "gmpst_radius": fmt(self.gmpst_radius),
                "shearer_radius": None if self.shearer_radius is None else fmt(self.shearer_radius),
                "checked": self.checked, "passed": self.passed,
                "violations": [str(v) for v in self.violations]}


def check_zfr_conformance(roots, delta: int, slack: float = NUMERIC_SLACK) -> ZFRReport:
    """Every root must lie outside the disk ``|z| < delta^delta/(delta+1)^(delta+1)``.

    Brackets are checked exactly (the smallest magnitude in the bracket);
    numeric roots (``complex`` or :class:`ComplexRoot`) with ``slack``.
    """
    radius = gmpst_radius(delta)
    rep = ZFRReport(delta, radius, shearer_radius(delta))
    for r in roots:
        rep.checked += 1
        if isinstance(r, RootBracket):
            if r.lo <= 0 <= r.hi:
                closest = Fraction(0)
            else:
                closest = min(abs(r.lo), abs(r.hi))
            if closest < radius:
                rep.violations.append(r)
        else:
            z = r.value if isinstance(r, ComplexRoot) else complex(r)
            if abs(z) < float(radius) - slack:
                rep.violations.append(r)
    return rep
