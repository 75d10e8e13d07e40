"""Poincare series: divisor-degree counts and Coxeter-orbit pairings.

Two independent routes to the same generating function.  The direct route
counts sections of the divisors D^(k) on a genus-0 base via the dimension
formula dim L(D) = 1 + deg D.  The lattice route pairs a distinguished
root a with its orbit under the Coxeter element tau, building the two
Hilbert-Poincare series

    P coefficient k : 1 + sum_{l=0}^{k-1} <a, tau^l a>   =  (a, tau^k a)
    Q coefficient k : 1 - sum_{l=1}^{k}  <a, tau^-l a>   =  (a, tau^-k a)

where (-,-) is the upper-triangular form with tau = -A^{-1}A^t.  Both
evaluations are carried out and compared on every call; a disagreement
raises RouteMismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NegativeDimension, NotARoot, RouteMismatch
from .exact import PowerSeries
from .lattice import Lattice, asym_form_matrix, coxeter_inverse_matrix, coxeter_matrix, mat_vec
from .star import OrbitInvariants, SingularityKind


@dataclass(frozen=True)
class RootedLattice:
    """A lattice with a distinguished root a, given by coordinates."""

    lattice: Lattice
    root: tuple

    def __post_init__(self):
        object.__setattr__(self, "root", tuple(self.root))
        if len(self.root) != self.lattice.rank:
            raise ValueError("root coordinate length does not match rank")
        norm = self.lattice.pairing(self.root, self.root)
        if norm != -2:
            raise NotARoot(f"distinguished vector has self-pairing {norm}, not -2")

    @classmethod
    def at_basis_index(cls, lat: Lattice, i: int) -> "RootedLattice":
        v = [0] * lat.rank
        v[i] = 1
        return cls(lat, tuple(v))


def divisor_degree(inv: OrbitInvariants, kind: SingularityKind, k: int) -> int:
    """deg D^(k) for weight k.

    Kleinian: k(2-r) + sum floor(k/alpha_i)          (deg D_0 = 2 - r)
    Fuchsian: -2k + sum floor(k(alpha_i-1)/alpha_i)  (deg D_0 = 2g - 2 = -2)
    """
    if kind is SingularityKind.KLEINIAN:
        return k * (2 - inv.r) + sum(k // a for a in inv.alphas)
    return -2 * k + sum((k * (a - 1)) // a for a in inv.alphas)


def poincare_direct(inv: OrbitInvariants, kind: SingularityKind, order: int) -> PowerSeries:
    """Series of graded dimensions dim L(D^(k)) for k = 0..order.

    dim L(D^(k)) = 1 + deg D^(k), except the Fuchsian k = 1 coefficient
    which is dim L(D_0) = g = 0.  A negative 1 + deg anywhere else means
    the genus-0 vanishing hypothesis fails for this input.
    """
    coeffs = []
    for k in range(order + 1):
        if kind is SingularityKind.FUCHSIAN and k == 1:
            coeffs.append(0)
            continue
        dim = 1 + divisor_degree(inv, kind, k)
        if dim < 0:
            raise NegativeDimension(f"1 + deg D^({k}) = {dim} < 0")
        coeffs.append(dim)
    return PowerSeries(tuple(coeffs))


def _pairing_row(lat: Lattice, a: Sequence[int]):
    """The functional <a, -> as a row vector."""
    return [sum(ai * g for ai, g in zip(a, col)) for col in zip(*lat.gram)]


def _form_row(form, a: Sequence[int]):
    """The functional (a, -) as a row vector, for the triangular form."""
    return [sum(ai * f for ai, f in zip(a, col)) for col in zip(*form)]


def hilbert_P(rl: RootedLattice, order: int) -> PowerSeries:
    """P series of (V, a): coefficient k is 1 + sum_{l<k} <a, tau^l a>."""
    lat = rl.lattice
    tau = coxeter_matrix(lat)
    pair_a = _pairing_row(lat, rl.root)
    form_a = _form_row(asym_form_matrix(lat), rl.root)
    coeffs = []
    v = list(rl.root)
    acc = 1
    for k in range(order + 1):
        form_value = sum(x * y for x, y in zip(form_a, v))
        if form_value != acc:
            raise RouteMismatch(f"P coefficient {k}: orbit sum {acc} vs form value {form_value}")
        coeffs.append(acc)
        acc += sum(x * y for x, y in zip(pair_a, v))
        v = mat_vec(tau, v)
    return PowerSeries(tuple(coeffs))


def hilbert_Q(rl: RootedLattice, order: int) -> PowerSeries:
    """Q series of (V, a): coefficient k is 1 - sum_{1<=l<=k} <a, tau^-l a>.

    The sum genuinely starts at l = 1; starting it at 0 would make the
    constant coefficient 3 instead of (a, a) = 1.
    """
    lat = rl.lattice
    tau_inv = coxeter_inverse_matrix(lat)
    pair_a = _pairing_row(lat, rl.root)
    form_a = _form_row(asym_form_matrix(lat), rl.root)
    coeffs = []
    v = list(rl.root)
    acc = 1
    for k in range(order + 1):
        form_value = sum(x * y for x, y in zip(form_a, v))
        if form_value != acc:
            raise RouteMismatch(f"Q coefficient {k}: orbit sum {acc} vs form value {form_value}")
        coeffs.append(acc)
        v = mat_vec(tau_inv, v)
        acc -= sum(x * y for x, y in zip(pair_a, v))
    return PowerSeries(tuple(coeffs))
