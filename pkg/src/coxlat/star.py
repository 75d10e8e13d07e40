"""Star-shaped root lattices from orbit invariants.

The orbit invariants {g; b; (alpha_1,beta_1),...,(alpha_r,beta_r)} of a
genus-0 graded surface singularity determine a star of (-2)-curves: r
chains of lengths alpha_i - 1 attached to a central vertex E.  This module
validates the invariants (Kleinian vs Fuchsian pattern), builds the star
lattice and its two extensions

    V_minus : the bare star, basis (arm chains..., E)
    V_zero  : V_minus extended by an orthogonal isotropic u, basis (..., E-u)
    V_plus  : V_minus extended by a hyperbolic plane <u, w>, basis (..., E-u, u-w)

and decodes Gram matrices back into invariants for the JSON interfaces.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import GorensteinViolation, NeitherKind, NotAStarLattice, UnknownName
from .lattice import Lattice


class SingularityKind(enum.Enum):
    KLEINIAN = "kleinian"
    FUCHSIAN = "fuchsian"

    @property
    def gorenstein_r(self) -> int:
        """The integer R with R*beta_i = 1 mod alpha_i: -1 Kleinian, +1 Fuchsian."""
        return -1 if self is SingularityKind.KLEINIAN else 1


@dataclass(frozen=True)
class OrbitInvariants:
    """The tuple {g; b; (alpha_1,beta_1),...,(alpha_r,beta_r)}.

    Pairs are kept sorted by (alpha, beta); each pair needs
    0 < beta < alpha and gcd(alpha, beta) = 1.
    """

    genus: int
    b: int
    pairs: tuple

    def __post_init__(self):
        pairs = tuple(sorted((int(a), int(b)) for a, b in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        for a, b in pairs:
            if a < 2:
                raise ValueError(f"alpha must be >= 2, got {a}")
            if not 0 < b < a:
                raise ValueError(f"beta must satisfy 0 < beta < alpha, got ({a},{b})")
            if math.gcd(a, b) != 1:
                raise ValueError(f"alpha and beta must be coprime, got ({a},{b})")

    @property
    def r(self) -> int:
        return len(self.pairs)

    @property
    def alphas(self) -> tuple:
        return tuple(a for a, _ in self.pairs)

    def vdeg(self) -> Fraction:
        """Virtual degree -b + sum beta_i/alpha_i of the orbit line bundle."""
        return Fraction(-self.b) + sum((Fraction(b, a) for a, b in self.pairs), Fraction(0))

    def describe(self) -> str:
        pairs = ",".join(f"({a},{b})" for a, b in self.pairs)
        return f"{{{self.genus}; {self.b}; {pairs}}}"

    def to_json(self) -> dict:
        return {"g": self.genus, "b": self.b, "pairs": [list(p) for p in self.pairs]}


def kleinian_invariants(alphas: Sequence[int]) -> OrbitInvariants:
    """Kleinian pattern {0; 2; (alpha_i, alpha_i - 1)}."""
    return OrbitInvariants(0, 2, tuple((a, a - 1) for a in alphas))


def fuchsian_invariants(alphas: Sequence[int]) -> OrbitInvariants:
    """Genus-0 Fuchsian pattern {0; r-2; (alpha_i, 1)}."""
    return OrbitInvariants(0, len(alphas) - 2, tuple((a, 1) for a in alphas))


def _reciprocal_sum(alphas: Sequence[int]) -> Fraction:
    return sum((Fraction(1, a) for a in alphas), Fraction(0))


def classify_alphas(alphas: Sequence[int]) -> SingularityKind:
    """Kind from the ramification indices alone, by the sum-of-reciprocals test."""
    s = _reciprocal_sum(alphas)
    r = len(alphas)
    if s > r - 2:
        return SingularityKind.KLEINIAN
    if s < r - 2:
        return SingularityKind.FUCHSIAN
    raise NeitherKind(
        f"sum of 1/alpha equals r - 2 = {r - 2} for alpha={tuple(alphas)}; boundary case"
    )


def validate(inv: OrbitInvariants) -> SingularityKind:
    """Classify validated orbit invariants as Kleinian or Fuchsian.

    Kleinian: b = 2, every beta_i = alpha_i - 1, sum 1/alpha_i > r - 2.
    Fuchsian: b = r - 2, every beta_i = 1,       sum 1/alpha_i < r - 2.
    The Gorenstein relations R*beta_i = 1 mod alpha_i and
    R*vdeg = 2 - 2g - r + sum 1/alpha_i are re-checked for the matched kind.
    """
    if inv.genus != 0:
        raise NeitherKind(f"only genus 0 is supported, got g={inv.genus}")
    r = inv.r
    s = _reciprocal_sum(inv.alphas)
    if inv.b == 2 and all(b == a - 1 for a, b in inv.pairs) and s > r - 2:
        kind = SingularityKind.KLEINIAN
    elif inv.b == r - 2 and all(b == 1 for a, b in inv.pairs) and s < r - 2:
        kind = SingularityKind.FUCHSIAN
    else:
        raise NeitherKind(f"invariants {inv.describe()} match neither pattern")
    big_r = kind.gorenstein_r
    for a, b in inv.pairs:
        if (big_r * b) % a != 1 % a:
            raise GorensteinViolation(f"R*beta = {big_r * b} is not 1 mod {a}")
    if big_r * inv.vdeg() != 2 - 2 * inv.genus - r + s:
        raise GorensteinViolation(
            f"R*vdeg = {big_r * inv.vdeg()} != 2 - 2g - r + sum 1/alpha = {2 - r + s}"
        )
    return kind


# ---------------------------------------------------------------------------
# lattice construction


@dataclass(frozen=True)
class StarLattices:
    """The lattices V_minus, V_zero, V_plus of one star, with bookkeeping.

    ``arms`` holds the index span [start, stop) of each chain in the minus
    basis; ``center`` is the index of E (always last in the minus basis).
    """

    invariants: OrbitInvariants
    kind: SingularityKind
    minus: Lattice
    zero: Lattice
    plus: Lattice
    center: int
    arms: tuple

    @property
    def f_index(self) -> int:
        """Index of E-u in the zero (and plus) basis."""
        return self.minus.rank

    @property
    def h_index(self) -> int:
        """Index of u-w in the plus basis."""
        return self.minus.rank + 1

    @property
    def u_zero(self) -> tuple:
        """Coordinates of the isotropic u = E - (E-u) in the zero basis."""
        v = [0] * self.zero.rank
        v[self.center] = 1
        v[self.f_index] = -1
        return tuple(v)


def star_minus_lattice(alphas: Sequence[int]):
    """Gram matrix of the bare star: chains of length alpha_i - 1, center E last.

    Returns (lattice, arms, center).
    """
    labels = []
    arms = []
    for i, a in enumerate(alphas, start=1):
        start = len(labels)
        labels.extend(f"E{i}^{j}" for j in range(1, a))
        arms.append((start, len(labels)))
    center = len(labels)
    labels.append("E")
    n = len(labels)
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = -2
    for start, stop in arms:
        for i in range(start, stop - 1):
            gram[i][i + 1] = gram[i + 1][i] = 1
        gram[stop - 1][center] = gram[center][stop - 1] = 1
    return Lattice(tuple(labels), tuple(tuple(row) for row in gram)), tuple(arms), center


def extend_star(minus: Lattice):
    """Adjoin E-u and then u-w to a lattice whose last basis vector is E.

    E-u pairs with everything exactly as E does except <E-u, E-u> = -2 and
    <E-u, E> = -2 (u is isotropic and orthogonal to the star); u-w pairs
    only with E-u, value 1.  Returns (zero, plus).
    """
    n = minus.rank
    center = n - 1
    e_row = list(minus.gram[center])
    zero_gram = [list(row) + [e_row[i]] for i, row in enumerate(minus.gram)]
    f_row = e_row + [-2]
    f_row[center] = -2
    zero_gram.append(f_row)
    zero = Lattice(minus.labels + ("E-u",), tuple(tuple(r) for r in zero_gram))

    plus_gram = [list(row) + [0] for row in zero_gram]
    h_row = [0] * (n + 2)
    h_row[n] = 1  # pairs with E-u only
    h_row[n + 1] = -2
    plus_gram[n][n + 1] = 1
    plus_gram.append(h_row)
    plus = Lattice(zero.labels + ("u-w",), tuple(tuple(r) for r in plus_gram))
    return zero, plus


def build(inv: OrbitInvariants) -> StarLattices:
    """Validate the invariants and construct V_minus, V_zero, V_plus."""
    kind = validate(inv)
    minus, arms, center = star_minus_lattice(inv.alphas)
    zero, plus = extend_star(minus)
    return StarLattices(inv, kind, minus, zero, plus, center, arms)


def lattices_from_minus(minus: Lattice, inv: OrbitInvariants, kind: SingularityKind,
                        arms: tuple, center: int) -> StarLattices:
    """Assemble StarLattices around a caller-supplied minus lattice."""
    zero, plus = extend_star(minus)
    return StarLattices(inv, kind, minus, zero, plus, center, arms)


def decode_star(lat: Lattice):
    """Read the arm structure off a star Gram matrix.

    Expects the central vertex last, each arm a contiguous chain ordered
    from its free end toward the center, self-pairings -2 and off-diagonal
    pairings 0 or 1.  Returns (alphas, arms) in basis order; raises
    NotAStarLattice (with the offending index) otherwise.
    """
    n = lat.rank
    if n == 0:
        raise NotAStarLattice("empty Gram matrix", index=0)
    center = n - 1
    for i in range(n):
        if lat.gram[i][i] != -2:
            raise NotAStarLattice(f"vertex {i} has self-pairing {lat.gram[i][i]}", index=i)
        for j in range(i + 1, n):
            if lat.gram[i][j] not in (0, 1):
                raise NotAStarLattice(f"pairing <{i},{j}> = {lat.gram[i][j]} not in {{0,1}}", index=i)
    arms = []
    i = 0
    while i < center:
        j = i
        while j + 1 < center and lat.gram[j][j + 1] == 1:
            j += 1
        if lat.gram[j][center] != 1:
            raise NotAStarLattice(
                f"chain ending at vertex {j} is not attached to the center", index=j
            )
        for k in range(i, j):
            if lat.gram[k][center] != 0:
                raise NotAStarLattice(
                    f"interior chain vertex {k} touches the center", index=k
                )
        arms.append((i, j + 1))
        i = j + 1
    # no pairings other than consecutive-in-chain and chain-end-to-center
    for a_start, a_stop in arms:
        for i in range(a_start, a_stop):
            for j in range(i + 1, center):
                expected = 1 if (j == i + 1 and j < a_stop) else 0
                if lat.gram[i][j] != expected:
                    raise NotAStarLattice(
                        f"unexpected pairing <{i},{j}> = {lat.gram[i][j]}", index=i
                    )
    alphas = [stop - start + 1 for start, stop in arms]
    return alphas, tuple(arms)


def invariants_from_star(lat: Lattice) -> tuple:
    """Decode a star Gram matrix and classify it.

    Returns (invariants, kind, arms).  The kind is decided by the
    sum-of-reciprocals test on the decoded ramification indices.
    """
    alphas, arms = decode_star(lat)
    kind = classify_alphas(alphas)
    if kind is SingularityKind.KLEINIAN:
        inv = kleinian_invariants(alphas)
    else:
        inv = fuchsian_invariants(alphas)
    validate(inv)
    return inv, kind, arms


# ---------------------------------------------------------------------------
# catalog and JSON interface

_CATALOG_NAMES = (
    ["A1"]
    + [f"A{2 * a - 1}" for a in range(2, 7)]
    + [f"D{n + 2}" for n in range(2, 11)]
    + ["E6", "E7", "E8", "E12"]
)

_EXCEPTIONAL = {
    "E6": ("kleinian", (2, 3, 3)),
    "E7": ("kleinian", (2, 3, 4)),
    "E8": ("kleinian", (2, 3, 5)),
    "E12": ("fuchsian", (2, 3, 7)),
}


def catalog(name: str) -> OrbitInvariants:
    """Named entries: A1, A{2a-1}, D{n}, E6, E7, E8 (Kleinian), E12 (Fuchsian).

    Even-index A types are deliberately absent: their weights and degree
    are not determined by the star data alone.
    """
    if name in _EXCEPTIONAL:
        kind, alphas = _EXCEPTIONAL[name]
        return kleinian_invariants(alphas) if kind == "kleinian" else fuchsian_invariants(alphas)
    m = re.fullmatch(r"A(\d+)", name)
    if m:
        idx = int(m.group(1))
        if idx == 1:
            return kleinian_invariants(())
        if idx % 2 == 1 and idx >= 3:
            a = (idx + 1) // 2
            return kleinian_invariants((a, a))
        raise UnknownName(
            f"{name!r}: even-index A types have no canonical orbit invariants here"
        )
    m = re.fullmatch(r"D(\d+)", name)
    if m:
        idx = int(m.group(1))
        if idx >= 4:
            return kleinian_invariants((2, 2, idx - 2))
        raise UnknownName(f"{name!r}: D types start at D4")
    raise UnknownName(f"no catalog entry named {name!r}")


def catalog_names() -> list:
    """The built-in roster used by `verify --all`."""
    return list(_CATALOG_NAMES)


def invariants_from_json(obj: dict) -> OrbitInvariants:
    """Parse either the full record {"g","b","pairs"} or the shorthand
    {"kind": "kleinian"|"fuchsian", "alpha": [...]}."""
    if not isinstance(obj, dict):
        raise ValueError("expected a JSON object")
    if "kind" in obj:
        kind = str(obj["kind"]).lower()
        alphas = [int(a) for a in obj.get("alpha", ())]
        if kind == "kleinian":
            return kleinian_invariants(alphas)
        if kind == "fuchsian":
            return fuchsian_invariants(alphas)
        raise ValueError(f"unknown kind {obj['kind']!r}")
    if "pairs" in obj:
        return OrbitInvariants(
            int(obj.get("g", 0)), int(obj["b"]), tuple((int(a), int(b)) for a, b in obj["pairs"])
        )
    raise ValueError("invariants JSON needs either 'kind'+'alpha' or 'g','b','pairs'")
