"""⊕-sign types and dominant regions of the Catalan arrangement, with exact witnesses.

A point x of the dominant chamber is handled through its ω̌-coordinates
c_j = (x, α_j); then (β, x) = Σ_j β_j c_j for β on the simple-root basis.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from weylcat.bijection import DEFAULT_BUDGET, BudgetExceeded
from weylcat.poset import enumerate_antichains


@dataclass(frozen=True)
class SignType:
    rs: object
    plus: frozenset

    @property
    def assignment(self):
        return {r: "+" if r in self.plus else "0" for r in self.rs.positive_roots}

    def symbols(self):
        """Symbols in positive-root order, e.g. "00+"."""
        return "".join("+" if r in self.plus else "0" for r in self.rs.positive_roots)


@dataclass(frozen=True)
class RegionWitness:
    """An exact point of X_A together with the sides it must lie on."""

    rs: object
    point: tuple  # root coordinates
    coweight: tuple  # (x, α_j)
    above: frozenset  # roots with (β, x) > 1; the rest satisfy 0 < (β, x) < 1

    def pairing(self, beta):
        return sum(b * c for b, c in zip(beta, self.coweight))

    def holds(self):
        if any(c <= 0 for c in self.coweight):
            return False
        for beta in self.rs.positive_roots:
            p = self.pairing(beta)
            if beta in self.above:
                if not p > 1:
                    return False
            elif not 0 < p < 1:
                return False
        return True


def ideal_to_signtype(ideal):
    return SignType(ideal.rs, ideal.phi)


def _satisfies(rs, c, phi):
    if any(x <= 0 for x in c):
        return False
    for beta in rs.positive_roots:
        p = sum(b * x for b, x in zip(beta, c))
        if (beta in phi and p <= 1) or (beta not in phi and p >= 1):
            return False
    return True


def _greedy(rs, ideal):
    """Push from the alcove barycenter along ω̌-directions until each antichain root clears 1."""
    n = rs.rank
    h = rs.coxeter_number
    start = [Fraction(1, m * (n + 1)) for m in rs.marks]
    below = [b for b in rs.positive_roots if b not in ideal.phi]
    for eps in (Fraction(1, 2 * h), Fraction(1, 4 * h * h)):
        c = list(start)
        for alpha in ideal.antichain:
            gap = 1 - sum(a * x for a, x in zip(alpha, c))
            if gap < 0:
                continue
            for j in sorted(range(n), key=lambda j: -alpha[j]):
                if not alpha[j]:
                    continue
                trial = list(c)
                trial[j] += (gap + eps) / alpha[j]
                if all(sum(b * x for b, x in zip(beta, trial)) < 1 for beta in below):
                    c = trial
                    break
            else:
                break
        else:
            if _satisfies(rs, c, ideal.phi):
                return tuple(c)
    return None


def _linear_program(rs, ideal):
    """Maximize the common slack t of all strict constraints, then round to rationals."""
    from scipy.optimize import linprog

    n = rs.rank
    rows, rhs = [], []
    for beta in rs.positive_roots:
        if beta in ideal.phi:
            rows.append([-b for b in beta] + [1])  # β·c ≥ 1 + t
            rhs.append(-1)
        else:
            rows.append(list(beta) + [1])  # β·c ≤ 1 − t
            rhs.append(1)
    for j in range(n):
        rows.append([-int(i == j) for i in range(n)] + [1])  # c_j ≥ t
        rhs.append(0)
    res = linprog(
        [0] * n + [-1], A_ub=rows, b_ub=rhs, bounds=[(None, None)] * n + [(None, 1)], method="highs"
    )
    if not res.success or res.x[-1] <= 0:
        return None
    slack = res.x[-1]
    spread = max(sum(beta) for beta in rs.positive_roots)
    den = ceil(4 * spread / slack)
    c = tuple(Fraction(round(x * den), den) for x in res.x[:n])
    return c if _satisfies(rs, c, ideal.phi) else None


def region_witness(ideal):
    """An exact rational point of the region X_A of the ideal's antichain A."""
    rs = ideal.rs
    c = _greedy(rs, ideal)
    if c is None:
        c = _linear_program(rs, ideal)
    if c is None:
        raise AssertionError(f"no witness found for antichain {ideal.antichain}")
    point = rs.to_root_coords(rs.from_coweight_coords(c))
    return RegionWitness(rs, point, c, ideal.phi)


def count_regions(rs, budget=DEFAULT_BUDGET):
    """Number of ideals whose region admits a verified witness."""
    ideals = enumerate_antichains(rs)
    cost = len(ideals) * len(rs.positive_roots) * rs.rank
    if cost > budget:
        raise BudgetExceeded(cost, budget)
    return sum(1 for i in ideals if region_witness(i).holds())
