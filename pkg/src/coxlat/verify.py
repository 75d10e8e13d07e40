"""Machine verification of the series and Coxeter-element identities.

Each check produces a VerificationReport; a failing report always carries
a witness (the first discrepant index with the two values).  The checks
are pure, so a caller may fan them out over inputs freely; run_suite
evaluates the whole built-in roster plus seeded random Fuchsian tuples in
a deterministic order.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .exact import PowerSeries, series_equal, series_from_rational
from .lattice import (
    asym_form_matrix,
    char_poly,
    coxeter_inverse_matrix,
    coxeter_matrix,
    coxeter_via_form,
    identity_matrix,
    mat_det,
    mat_mul,
    mat_transpose,
    quotient_by_radical,
    radical_basis,
    reflection_matrix,
    reflection_product,
)
from .series import RootedLattice, divisor_degree, hilbert_P, hilbert_Q, poincare_direct
from .star import (
    OrbitInvariants,
    SingularityKind,
    StarLattices,
    build,
    catalog,
    catalog_names,
    fuchsian_invariants,
    validate,
)

DEFAULT_ORDER = 200
DEFAULT_SEED = 271828
DEFAULT_RANDOM_COUNT = 50


@dataclass
class VerificationReport:
    """Outcome of one named check on one input."""

    check: str
    subject: str
    passed: bool
    order: int
    witness: dict | None
    elapsed: float

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "subject": self.subject,
            "status": "pass" if self.passed else "fail",
            "order": self.order,
            "witness": self.witness,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }

    def row(self) -> str:
        status = "pass" if self.passed else "FAIL"
        witness = "-" if self.witness is None else _witness_text(self.witness)
        return (
            f"{self.check:<18} {self.subject:<24} {status:<5} "
            f"order={self.order:<4} {self.elapsed * 1000:7.1f} ms  {witness}"
        )


def _witness_text(witness: dict) -> str:
    parts = [f"{k}={v}" for k, v in witness.items()]
    return " ".join(parts)


def subject_of(inv: OrbitInvariants, kind: SingularityKind) -> str:
    return f"{kind.value}({','.join(str(a) for a in inv.alphas)})"


class _StarData:
    """Lazily shared Coxeter matrices and characteristic polynomials."""

    def __init__(self, lats: StarLattices, subject: str | None = None):
        self.lats = lats
        self.subject = subject or subject_of(lats.invariants, lats.kind)
        self._cox = {}
        self._delta = {}

    def lattice(self, which: str):
        return getattr(self.lats, which)

    def coxeter(self, which: str):
        if which not in self._cox:
            self._cox[which] = coxeter_matrix(self.lattice(which))
        return self._cox[which]

    def delta(self, which: str):
        if which not in self._delta:
            self._delta[which] = char_poly(self.coxeter(which))
        return self._delta[which]


def _series_witness(identity: str, lhs: PowerSeries, rhs: PowerSeries):
    ok, k = series_equal(lhs, rhs)
    if ok:
        return None
    return {"identity": identity, "index": k, "expected": rhs[k], "got": lhs[k]}


def _matrix_witness(identity: str, got, expected):
    for i, (row_g, row_e) in enumerate(zip(got, expected)):
        for j, (x, y) in enumerate(zip(row_g, row_e)):
            if x != y:
                return {"identity": identity, "index": [i, j], "expected": y, "got": x}
    return None


def _value_witness(identity: str, index, got, expected):
    if got == expected:
        return None
    return {"identity": identity, "index": index, "expected": expected, "got": got}


# ---------------------------------------------------------------------------
# the four checks


def _theorem_report(data: _StarData, order: int) -> VerificationReport:
    t0 = time.perf_counter()
    kind = data.lats.kind
    top = "minus" if kind is SingularityKind.KLEINIAN else "plus"
    quotient = series_from_rational(data.delta(top), data.delta("zero"), order)
    direct = poincare_direct(data.lats.invariants, kind, order)
    witness = _series_witness(f"{top}/zero == direct", quotient, direct)
    return VerificationReport(
        "theorem", data.subject, witness is None, order, witness, time.perf_counter() - t0
    )


def _orbit_series_report(data: _StarData, order: int) -> VerificationReport:
    t0 = time.perf_counter()
    lats = data.lats
    root = [0] * lats.zero.rank
    root[lats.center] = 1
    rl = RootedLattice(lats.zero, tuple(root))
    witness = _series_witness(
        "Q == minus/zero",
        hilbert_Q(rl, order),
        series_from_rational(data.delta("minus"), data.delta("zero"), order),
    )
    if witness is None:
        shifted = list(hilbert_P(rl, order).coeffs)
        if order >= 1:
            shifted[1] += 1
        witness = _series_witness(
            "P + t == plus/zero",
            PowerSeries(tuple(shifted)),
            series_from_rational(data.delta("plus"), data.delta("zero"), order),
        )
    return VerificationReport(
        "orbit-series", data.subject, witness is None, order, witness, time.perf_counter() - t0
    )


def _orbit_report(data: _StarData, k_max: int) -> VerificationReport:
    """Checks on the radical quotient of V_zero.

    (a) the induced reflections in E and E-u compose to the identity,
    (b) the induced Coxeter element factors through the arm chains,
    (c) each arm factor moves the class of E with period exactly alpha_i,
    (d) the orbit sums reproduce 1 + deg D^(k) for both divisor patterns.
    """
    t0 = time.perf_counter()
    lats = data.lats
    inv = lats.invariants
    quo = quotient_by_radical(lats.zero)
    rank = quo.lattice.rank

    def report(witness):
        return VerificationReport(
            "orbit-formulas", data.subject, witness is None, k_max, witness,
            time.perf_counter() - t0,
        )

    s_center = quo.induced(reflection_matrix(lats.zero, lats.center))
    s_f = quo.induced(reflection_matrix(lats.zero, lats.f_index))
    witness = _matrix_witness(
        "s_E s_{E-u} == id", mat_mul(s_center, s_f), identity_matrix(rank)
    )
    if witness:
        return report(witness)

    tau0 = quo.induced(data.coxeter("zero"))
    product = identity_matrix(rank)
    for start, stop in lats.arms:
        factor = quo.induced(reflection_product(lats.zero, range(start, stop)))
        product = mat_mul(product, factor)
    witness = _matrix_witness("tau_0 == tau_1 ... tau_r", tau0, product)
    if witness:
        return report(witness)

    e_bar = quo.project([1 if i == lats.center else 0 for i in range(lats.zero.rank)])
    for arm_index, ((start, stop), alpha) in enumerate(zip(lats.arms, inv.alphas), start=1):
        factor = quo.induced(reflection_product(lats.zero, range(start, stop)))
        v = e_bar[:]
        period = None
        for k in range(1, alpha + 1):
            v = [sum(x * y for x, y in zip(row, v)) for row in factor]
            if v == e_bar:
                period = k
                break
        witness = _value_witness(f"arm {arm_index} period on class of E", alpha, period, alpha)
        if witness:
            return report(witness)

    gram = quo.lattice.gram_rows()
    pair_e = [sum(e * g for e, g in zip(e_bar, col)) for col in zip(*gram)]
    tau0_inv = quo.induced(coxeter_inverse_matrix(lats.zero))
    forward = e_bar[:]          # tau_0^l e, starting at l = 0
    partial = [0] * rank        # sum_{l<k} tau_0^l e
    backward = e_bar[:]         # tau_0^{-l} e
    back_sum = 0                # sum_{1<=l<=k} <e, tau_0^{-l} e>
    for k in range(1, k_max + 1):
        partial = [s + f for s, f in zip(partial, forward)]
        forward = [sum(x * y for x, y in zip(row, forward)) for row in tau0]
        fuchs = 1 + sum(p * s for p, s in zip(pair_e, partial))
        witness = _value_witness(
            "orbit sum == 1 + deg D_Fuchs",
            k,
            fuchs,
            1 + divisor_degree(inv, SingularityKind.FUCHSIAN, k),
        )
        if witness:
            return report(witness)
        backward = [sum(x * y for x, y in zip(row, backward)) for row in tau0_inv]
        back_sum += sum(p * b for p, b in zip(pair_e, backward))
        witness = _value_witness(
            "orbit sum == 1 + deg D_Klein",
            k,
            1 - back_sum,
            1 + divisor_degree(inv, SingularityKind.KLEINIAN, k),
        )
        if witness:
            return report(witness)
    return report(None)


def _identities_report(data: _StarData) -> VerificationReport:
    t0 = time.perf_counter()
    lats = data.lats

    def report(witness):
        return VerificationReport(
            "identities", data.subject, witness is None, 0, witness,
            time.perf_counter() - t0,
        )

    for which in ("minus", "zero", "plus"):
        lat = data.lattice(which)
        tau = data.coxeter(which)
        form = asym_form_matrix(lat)
        witness = _matrix_witness(f"coxeter({which}) == -A^-1 A^t", tau, coxeter_via_form(form))
        if witness:
            return report(witness)
        minus_a_tau = [[-x for x in row] for row in mat_mul(form, tau)]
        witness = _matrix_witness(f"(y,x) == -(x,tau y) on {which}", mat_transpose(form), minus_a_tau)
        if witness:
            return report(witness)
        delta = data.delta(which)
        witness = _value_witness(f"char poly of {which} has constant term 1", 0, delta[0], 1)
        if witness:
            return report(witness)
        n = len(delta) - 1
        eps = delta[n]
        palindromic = eps in (1, -1) and all(delta[i] == eps * delta[n - i] for i in range(n + 1))
        if not palindromic:
            bad = next(i for i in range(n + 1) if delta[i] != eps * delta[n - i])
            return report(
                {"identity": f"char poly of {which} palindromic up to sign",
                 "index": bad, "expected": eps * delta[n - bad], "got": delta[bad]}
            )
        witness = _value_witness(
            f"det tau == (-1)^rank on {which}", lat.rank, mat_det(tau), (-1) ** lat.rank
        )
        if witness:
            return report(witness)

    rad = radical_basis(lats.zero)
    u = list(lats.u_zero)
    ok = len(rad) == 1 and (rad[0] == u or rad[0] == [-x for x in u])
    if not ok:
        return report(
            {"identity": "radical of V_zero is rank 1 spanned by u",
             "index": len(rad), "expected": u, "got": rad}
        )
    return report(None)


# ---------------------------------------------------------------------------
# public wrappers


def verify_theorem(inv: OrbitInvariants, order: int = DEFAULT_ORDER) -> VerificationReport:
    """Poincare series == quotient of characteristic polynomials."""
    return _theorem_report(_StarData(build(inv)), order)


def verify_orbit_series(inv: OrbitInvariants, order: int = DEFAULT_ORDER) -> VerificationReport:
    """Q = Delta_minus/Delta_zero and P + t = Delta_plus/Delta_zero, at a = E."""
    return _orbit_series_report(_StarData(build(inv)), order)


def verify_orbit_formulas(inv: OrbitInvariants, k_max: int = DEFAULT_ORDER) -> VerificationReport:
    """Factorisation, periodicity and divisor-degree displays on the quotient."""
    return _orbit_report(_StarData(build(inv)), k_max)


def verify_identities(inv: OrbitInvariants) -> VerificationReport:
    """Structural identities of the three lattices and their Coxeter elements."""
    return _identities_report(_StarData(build(inv)))


def verify_lattices(lats: StarLattices, order: int = DEFAULT_ORDER,
                    subject: str | None = None) -> list:
    """All four checks against caller-supplied lattices (shared work)."""
    data = _StarData(lats, subject)
    return [
        _theorem_report(data, order),
        _orbit_series_report(data, order),
        _orbit_report(data, order),
        _identities_report(data),
    ]


def verify_all(inv: OrbitInvariants, order: int = DEFAULT_ORDER) -> list:
    """All four checks for one input."""
    return verify_lattices(build(inv), order)


# ---------------------------------------------------------------------------
# input roster


def random_fuchsian_invariants(rng: random.Random, r: int | None = None) -> OrbitInvariants:
    """A random valid genus-0 Fuchsian tuple with r in {3,4,5}, alpha <= 12."""
    while True:
        arms = r if r is not None else rng.choice((3, 4, 5))
        alphas = sorted(rng.randint(2, 12) for _ in range(arms))
        if sum(Fraction(1, a) for a in alphas) < arms - 2:
            return fuchsian_invariants(alphas)


def suite_inputs(n_random: int = DEFAULT_RANDOM_COUNT, seed: int = DEFAULT_SEED) -> list:
    """Deterministic roster: catalog entries, then seeded random Fuchsian tuples.

    Returns (subject, invariants) pairs.
    """
    inputs = [(name, catalog(name)) for name in catalog_names()]
    rng = random.Random(seed)
    for i in range(n_random):
        inv = random_fuchsian_invariants(rng)
        inputs.append((f"random#{i + 1}:{subject_of(inv, validate(inv))}", inv))
    return inputs


def run_suite(order: int = DEFAULT_ORDER, n_random: int = DEFAULT_RANDOM_COUNT,
              seed: int = DEFAULT_SEED) -> list:
    """Run all four checks over the whole roster, in input order."""
    reports = []
    for subject, inv in suite_inputs(n_random, seed):
        data = _StarData(build(inv), subject)
        reports.append(_theorem_report(data, order))
        reports.append(_orbit_series_report(data, order))
        reports.append(_orbit_report(data, order))
        reports.append(_identities_report(data))
    return reports
