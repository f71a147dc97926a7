"""Root-interval certificates for Z_{S_H}.

If ``H`` has an odd number ``n >= 3`` of vertices and ``e(S) >= alpha |S|`` for
every vertex set ``S``, with ``3 ln n <= alpha <= n``, then Z_{S_H} is
negative at ``-3 ln(n)/alpha`` and so has a real root in
``[-3 ln(n)/alpha, 0]``. This module issues such certificates with
adversarially rounded rational bounds, chains them to the
``6k ln(Delta)/Delta`` bound for the counterexample family, and re-checks a
certificate from its JSON alone.

All logarithms are natural.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath import mp

from .construct import counterexample_base, find_prime_in, is_prime, s_transform
from .hypergraph import Hypergraph, degree_profile, is_linear, uniformity
from .rigorous import (
    fmt,
    gmpst_radius,
    ln_bounds_rational,
    ln_interval,
    parse_rational,
    root_interval,
    round_down,
    round_up,
    shearer_radius,
)

# Explicit mode materializes H_{k-1,Delta}; refuse beyond this many edges.
EDGE_CAP = 3_000_000


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    required: bool = True
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "pass": self.passed, "required": self.required}
        if self.detail:
            d["detail"] = self.detail
        return d


_FAILURE_TEXT = {
    "n_odd": "n must be odd",
    "n_at_least_3": "n must be at least 3",
    "alpha_ge_3ln_n": "alpha < 3 ln n",
    "alpha_le_n": "alpha > n",
    "lambda0_in_range": "lambda0 out of range",
    "lambda0_le_theorem_bound": "|lambda0| exceeds the theorem bound",
}


class HypothesisFailure(Exception):
    """A required hypothesis did not hold; no certificate was issued.

    This is a mathematical outcome, not a program error.
    """

    def __init__(self, checks, info=None):
        self.checks = list(checks)
        self.info = dict(info or {})
        self.failed = [c.name for c in self.checks if c.required and not c.passed]
        super().__init__("; ".join(_FAILURE_TEXT.get(f, f) for f in self.failed))

    @property
    def reasons(self) -> list:
        return [_FAILURE_TEXT.get(f, f) for f in self.failed]

    def to_dict(self) -> dict:
        d = {"status": "hypothesis-failure", "failed": self.failed, "reasons": self.reasons}
        d.update(self.info)
        d["checks"] = [c.to_dict() for c in self.checks]
        return d


@dataclass
class RootCertificate:
    """Z_{S_H} has a real root in ``[lambda0, 0]``."""

    mode: str
    n: int
    alpha: Fraction
    lambda0: Fraction
    hypothesis_evidence: dict
    checks: list
    theorem_bound: Fraction | None = None
    k: int | None = None
    delta: int | None = None
    p: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def interval(self) -> tuple:
        return (self.lambda0, Fraction(0))

    def to_dict(self) -> dict:
        d = {"status": "certified", "mode": self.mode}
        if self.k is not None:
            d.update(k=self.k, delta=self.delta, p=self.p)
        d.update(
            n=self.n,
            alpha=fmt(self.alpha),
            lambda0=fmt(self.lambda0),
            interval=[fmt(self.lambda0), "0"],
        )
        if self.theorem_bound is not None:
            d["theorem_bound"] = fmt(self.theorem_bound)
        d["hypothesis_evidence"] = self.hypothesis_evidence
        d.update(self.extra)
        d["checks"] = [c.to_dict() for c in self.checks]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


# ------------------------------------------------------------------- alpha

def alpha_from_degrees(H: Hypergraph) -> Fraction:
    """``min_degree / uniformity``: a sound lower bound on ``e(S)/|S|``.

    Each edge meeting ``S`` is counted at most ``u`` times in
    ``sum_{v in S} deg(v)``.
    """
    u = uniformity(H)
    if u is None:
        if H.edges:
            raise ValueError("alpha_from_degrees needs a uniform hypergraph")
        return Fraction(0)
    return Fraction(degree_profile(H).min_degree, u)


# ----------------------------------------------------------- lemma certificate

def _lemma_checks(n: int, alpha: Fraction):
    """Return (checks, three_ln_n_upper, lambda0 or None)."""
    alpha = Fraction(alpha)
    checks = [
        Check("n_odd", n % 2 == 1),
        Check("n_at_least_3", n >= 3),
    ]
    three_ln_hi = None
    lam0 = None
    if n >= 1:
        _, ln_hi = ln_interval(n)
        three_ln_hi = 3 * ln_hi
        checks.append(Check("alpha_ge_3ln_n", alpha >= three_ln_hi,
                            detail=f"3 ln n <= {float(three_ln_hi):.12g}"))
    else:
        checks.append(Check("alpha_ge_3ln_n", False, detail="n < 1"))
    checks.append(Check("alpha_le_n", alpha <= n))
    if alpha > 0 and three_ln_hi is not None and n >= 2:
        lam0 = -round_up(three_ln_hi / alpha)
        checks.append(Check("lambda0_in_range", -1 <= lam0 < 0))
    else:
        checks.append(Check("lambda0_in_range", False, detail="alpha must be positive"))
    return checks, three_ln_hi, lam0


def certify_root_interval(n: int, alpha, *, evidence: dict | None = None) -> RootCertificate:
    """Certify a real root of Z_{S_H} in ``[lambda0, 0]``.

    Valid for any ``H`` on ``n`` vertices with ``e(S) >= alpha |S|`` for all
    ``S``; that premise is the caller's responsibility. ``lambda0`` is
    ``-3 ln(n)/alpha`` rounded toward minus infinity, so the certified
    interval contains the exact one. Raises :class:`HypothesisFailure`.
    """
    alpha = Fraction(alpha)
    checks, three_ln_hi, lam0 = _lemma_checks(n, alpha)
    info = {"n": n, "alpha": fmt(alpha)}
    if lam0 is not None:
        info["lambda0"] = fmt(lam0)
    if not all(c.passed for c in checks if c.required):
        raise HypothesisFailure(checks, info)
    ev = dict(evidence or {})
    ev["alpha"] = fmt(alpha)
    ev["alpha_vs_3logn"] = {"alpha": fmt(alpha), "three_ln_n_upper": fmt(round_up(three_ln_hi))}
    return RootCertificate(mode="lemma", n=n, alpha=alpha, lambda0=lam0,
                           hypothesis_evidence=ev, checks=checks)


# ------------------------------------------------------ inequality chain

@dataclass
class InequalityReport:
    """Exact evaluation of the bound ``sum_S |...| <= sum_j C(n,j) alpha^j n^(-3j)``.

    ``tbar`` is kept as an unreduced numerator/denominator pair because the
    reduced fraction is expensive at large ``n``.
    """

    n: int
    alpha: Fraction
    tbar_num: int
    tbar_den: int
    holds: bool
    majorant: Fraction | None = None
    final_bound: Fraction | None = None

    @property
    def tbar(self) -> Fraction:
        return Fraction(self.tbar_num, self.tbar_den)

    def to_dict(self) -> dict:
        d = {"n": self.n, "alpha": fmt(self.alpha), "tbar_lt_1": self.holds,
             "tbar_approx": float(Fraction(self.tbar_num, self.tbar_den)) if self.n <= 2000 else None}
        if self.majorant is not None:
            d["majorant"] = fmt(self.majorant)
            d["final_bound"] = fmt(self.final_bound)
        return d


def verify_inequality_chain(n: int, alpha, majorant: bool = True) -> InequalityReport:
    """Compute ``T = sum_{j=1}^n C(n,j) alpha^j n^(-3j)`` exactly and test ``T < 1``.

    By the binomial theorem ``T = (1 + alpha/n^3)^n - 1``. With
    ``majorant=True`` also returns ``sum_{j=1}^n (alpha/n^2)^j / j!`` and
    ``(1/n) sum_{j=1}^n 1/j!``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    a, b = alpha.numerator, alpha.denominator
    base = b * n ** 3
    den = base ** n
    num = (base + a) ** n - den
    rep = InequalityReport(n=n, alpha=alpha, tbar_num=num, tbar_den=den, holds=num < den)
    if majorant:
        y = alpha / n ** 2
        m = Fraction(0)
        f = Fraction(0)
        # Horner from the top: sum_{j>=1} y^j/j! = y(1 + y/2(1 + y/3(...)))
        for j in range(n, 0, -1):
            m = y / j * (1 + m)
            f = Fraction(1, j) * (1 + f)
        rep.majorant = m
        rep.final_bound = f / n
    return rep


# ------------------------------------------------------ counterexample family

def _theorem_checks(k: int, delta: int, n: int, alpha: Fraction, lam0: Fraction | None):
    checks = [Check("delta_gt_100k2", delta > 100 * k * k, required=False,
                    detail=f"delta={delta}, 100k^2={100 * k * k}")]
    ln_d_lo, ln_d_hi = ln_interval(delta)
    ln_n_lo, ln_n_hi = ln_interval(n)
    ln_2dk_lo, ln_2dk_hi = ln_interval(2 * delta * k)
    theorem_bound = round_up(6 * k * ln_d_hi / delta)
    if delta > 1 and alpha > 0:
        mid_lo = Fraction(3 * (k - 1)) * ln_2dk_lo / (delta - 1)
        mid_hi = Fraction(3 * (k - 1)) * ln_2dk_hi / (delta - 1)
        checks.append(Check("chain_step1", 3 * ln_n_hi / alpha <= mid_lo, required=False,
                            detail="3 ln n/alpha <= 3(k-1) ln(2 Delta k)/(Delta-1)"))
        checks.append(Check("chain_step2", mid_hi <= 6 * k * ln_d_lo / delta, required=False,
                            detail="3(k-1) ln(2 Delta k)/(Delta-1) <= 6k ln Delta/Delta"))
    else:
        checks.append(Check("chain_step1", False, required=False))
        checks.append(Check("chain_step2", False, required=False))
    checks.append(Check("lambda0_le_theorem_bound", lam0 is not None and -lam0 <= theorem_bound))
    return checks, theorem_bound


def certify_counterexample(k: int, delta: int, mode: str = "analytic",
                           edge_cap: int = EDGE_CAP) -> RootCertificate:
    """Certificate for ``S_H``, ``H`` the odd-trimmed ``H_{k-1,delta}``.

    ``explicit`` builds ``H`` and measures its degrees; ``analytic`` uses
    only the prime ``p`` and the structural facts (``n = (k-1)p`` or one
    less, minimum degree ``delta`` or ``delta - 1``).
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if delta < max(2, k - 1):
        raise ValueError(f"delta must be >= max(2, k-1), got {delta}")
    if mode == "explicit":
        p = find_prime_in(delta)
        if p * delta > edge_cap:
            raise ValueError(f"explicit mode would materialize {p * delta} edges (cap {edge_cap}); use analytic mode")
        H, meta = counterexample_base(k, delta)
        prof = degree_profile(H)
        SH = s_transform(H)
        sh_prof = degree_profile(SH)
        n = H.n
        alpha = alpha_from_degrees(H)
        evidence = {
            "uniformity": uniformity(H),
            "min_degree": prof.min_degree,
            "max_degree": prof.max_degree,
            "removed_vertex": meta.removed_vertex,
            "sg_uniformity": uniformity(SH),
            "sg_linear": is_linear(SH),
            "sg_max_degree": sh_prof.max_degree,
            "sg_vertices": SH.n,
        }
    elif mode == "analytic":
        p = find_prime_in(delta)
        n = (k - 1) * p
        trimmed = n % 2 == 0
        if trimmed:
            n -= 1
        min_deg = delta - 1 if trimmed else delta
        alpha = Fraction(min_deg, k - 1)
        evidence = {
            "uniformity": k - 1,
            "min_degree": min_deg,
            "max_degree": delta,
            "removed_vertex": n if trimmed else None,
        }
    else:
        raise ValueError(f"mode must be 'explicit' or 'analytic', got {mode!r}")

    lemma_checks, three_ln_hi, lam0 = _lemma_checks(n, alpha)
    thm_checks, theorem_bound = _theorem_checks(k, delta, n, alpha, lam0)
    checks = lemma_checks + thm_checks
    info = {"mode": mode, "k": k, "delta": delta, "p": p, "n": n, "alpha": fmt(alpha),
            "theorem_bound": fmt(theorem_bound)}
    if lam0 is not None:
        info["lambda0"] = fmt(lam0)
    if not all(c.passed for c in checks if c.required):
        raise HypothesisFailure(checks, info)
    evidence["alpha"] = fmt(alpha)
    evidence["alpha_vs_3logn"] = {"alpha": fmt(alpha), "three_ln_n_upper": fmt(round_up(three_ln_hi))}
    return RootCertificate(mode=mode, n=n, alpha=alpha, lambda0=lam0,
                           hypothesis_evidence=evidence, checks=checks,
                           theorem_bound=theorem_bound, k=k, delta=delta, p=p)


# ------------------------------------------------------ conjecture comparison

@dataclass(frozen=True)
class SweepRow:
    k: int
    delta: int
    p: int
    n: int
    alpha: Fraction
    certified_bound: Fraction
    theorem_bound: Fraction
    conjectured_radius: Fraction
    gmpst_radius: Fraction
    shearer_radius: Fraction | None
    falsified: bool
    lambda0_abs: Fraction
    ratio: str

    FIELDS = ("k", "delta", "p", "n", "alpha", "certified_bound", "theorem_bound",
              "conjectured_radius", "gmpst_radius", "shearer_radius", "falsified",
              "lambda0_abs", "ratio")

    def as_strings(self) -> list:
        out = []
        for name in self.FIELDS:
            v = getattr(self, name)
            if isinstance(v, bool):
                out.append("true" if v else "false")
            elif isinstance(v, Fraction):
                out.append(fmt(v))
            elif v is None:
                out.append("")
            else:
                out.append(str(v))
        return out


def compare_bounds(k: int, delta: int, C) -> SweepRow:
    """Compare the certified root bound with the conjectured zero-free radius
    ``C * delta^(-1/(k-1))``.

    ``certified_bound`` is the certificate's rounded-up ``6k ln Delta/Delta``;
    ``lambda0_abs`` is the tighter ``|lambda0|``. ``falsified`` is decided
    exactly: ``certified_bound^(k-1) * delta < C^(k-1)``.
    """
    C = Fraction(C)
    if C <= 0:
        raise ValueError("C must be positive")
    cert = certify_counterexample(k, delta, mode="analytic")
    bound = cert.theorem_bound
    q = k - 1
    r_lo, _ = root_interval(Fraction(1, delta), q)
    conj = round_down(C * r_lo)
    falsified = bound ** q * delta < C ** q
    with mp.workprec(200):
        ratio = mp.mpf(bound.numerator) / bound.denominator / (mp.mpf(C.numerator) / C.denominator * mp.power(delta, mp.mpf(-1) / q))
        ratio_s = mp.nstr(ratio, 15)
    return SweepRow(k=k, delta=delta, p=cert.p, n=cert.n, alpha=cert.alpha,
                    certified_bound=bound, theorem_bound=bound, conjectured_radius=conj,
                    gmpst_radius=gmpst_radius(delta), shearer_radius=shearer_radius(delta),
                    falsified=falsified, lambda0_abs=-cert.lambda0, ratio=ratio_s)


# ------------------------------------------------------ independent checker

def check_certificate(doc) -> list:
    """Re-verify a certificate record using rational arithmetic only.

    Accepts the dict (or JSON text) produced by :meth:`RootCertificate.to_dict`.
    Shares no logarithm code with the issuer. Returns a list of
    :class:`Check`; the certificate is valid iff all pass.
    """
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    out = []
    n = int(doc["n"])
    alpha = parse_rational(doc["alpha"])
    lam0 = parse_rational(doc["lambda0"])
    out.append(Check("status_certified", doc.get("status") == "certified"))
    out.append(Check("n_odd", n % 2 == 1))
    out.append(Check("n_at_least_3", n >= 3))
    out.append(Check("interval_matches",
                     [parse_rational(x) for x in doc["interval"]] == [lam0, Fraction(0)]))
    if n < 3:
        return out
    _, ln_n_hi = ln_bounds_rational(n)
    out.append(Check("alpha_ge_3ln_n", alpha >= 3 * ln_n_hi))
    out.append(Check("alpha_le_n", alpha <= n))
    out.append(Check("lambda0_in_range", -1 <= lam0 < 0))
    # lambda0 <= -3 ln(n)/alpha  <=>  |lambda0| * alpha >= 3 ln n
    out.append(Check("lambda0_le_minus_3ln_n_over_alpha", -lam0 * alpha >= 3 * ln_n_hi))
    if "theorem_bound" in doc:
        k = int(doc["k"])
        delta = int(doc["delta"])
        p = int(doc["p"])
        bound = parse_rational(doc["theorem_bound"])
        _, ln_d_hi = ln_bounds_rational(delta)
        out.append(Check("theorem_bound_ge_6k_ln_delta_over_delta", bound * delta >= 6 * k * ln_d_hi))
        out.append(Check("lambda0_le_theorem_bound", -lam0 <= bound))
        out.append(Check("p_prime_in_range", is_prime(p) and delta <= p <= 2 * delta))
        out.append(Check("n_matches_construction", n in ((k - 1) * p, (k - 1) * p - 1)))
        ev = doc.get("hypothesis_evidence", {})
        if "min_degree" in ev and "uniformity" in ev:
            out.append(Check("alpha_matches_degrees",
                             alpha == Fraction(int(ev["min_degree"]), int(ev["uniformity"]))))
    return out
