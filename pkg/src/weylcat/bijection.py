"""Ideals ↔ elements w_i ↔ lattice points of D ↔ lattice points of C̄_{h+1} ↔ W-orbits.

Every lattice vector here is an integer tuple on the simple-coroot basis.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from weylcat import _linalg
from weylcat.affine import (
    AffineWeylElement,
    from_inversions,
    is_ideal_element,
)
from weylcat.poset import l_set

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    def __init__(self, cost, budget):
        super().__init__(f"estimated cost {cost} exceeds budget {budget}")
        self.cost = cost
        self.budget = budget


def ideal_to_w(ideal):
    """The element w_i with N(w_i) = L_i."""
    w = from_inversions(ideal.rs, l_set(ideal))
    if not is_ideal_element(w):
        raise AssertionError(f"w for {ideal.antichain} fails the ideal-element test")
    return w


def in_d(rs, sigma):
    """σ ∈ Q̌ with (σ, α_i) ≤ 1 for all i and (σ, θ) ≥ −2."""
    if not rs.in_coroot_lattice(sigma):
        return False
    if any(p > 1 for p in rs.coweight_coords(sigma)):
        return False
    return rs.root_coroot_pairing(rs.theta, sigma) >= -2


def f_map(w):
    """t_τ v ↦ v⁻¹(τ)."""
    if not is_ideal_element(w):
        raise ValueError(f"{w!r} is not of the form w_i")
    return w.v.inverse.act_coroot(w.tau)


@lru_cache(maxsize=None)
def alcove_barycenter(rs):
    """Barycenter of C_1 on the root basis: (o_1 + ... + o_n)/(n+1), o_i = ω̌_i/m_i."""
    n = rs.rank
    coweight = tuple(Fraction(1, m * (n + 1)) for m in rs.marks)
    return rs.to_root_coords(rs.from_coweight_coords(coweight))


def f_inverse(rs, sigma):
    """The w_i with F(w_i) = σ: t_{v(σ)} v for the v taking σ + C_1 into C_∞."""
    sigma = tuple(sigma)
    if not in_d(rs, sigma):
        raise ValueError(f"{sigma} is not in D")
    sigma = _linalg.as_int(sigma)
    point = tuple(a + b for a, b in zip(rs.to_root_coords(sigma), alcove_barycenter(rs)))
    v, _, regular = rs.dominant_representative(point)
    if not regular:
        raise AssertionError("interior alcove point landed on a wall")
    return AffineWeylElement(v.act_coroot(sigma), v)


def coweight_index(rs):
    """None when ρ̌ ∈ Q̌, otherwise the unique j ∈ J with ρ̌ − (h+1)ω̌_j ∈ Q̌ (1-based)."""
    if rs.in_coroot_lattice(rs.rho_check):
        return None
    k = rs.coxeter_number + 1
    hits = [
        j
        for j in rs.J
        if rs.in_coroot_lattice(
            tuple(r - k * c for r, c in zip(rs.rho_check, rs.fundamental_coweights[j - 1]))
        )
    ]
    if len(hits) != 1:
        raise AssertionError(f"expected a unique j for {rs.name}, found {hits}")
    return hits[0]


@lru_cache(maxsize=None)
def normalizer(rs):
    """The affine element g with g(X) = C̄_{h+1}, X the simplex containing D.

    g = w_0 t_{−ρ̌} when ρ̌ ∈ Q̌, else w_0^j t_{−ρ̌+(h+1)ω̌_j}.
    """
    j = coweight_index(rs)
    if j is None:
        u = rs.longest_element()
        shift = tuple(-c for c in rs.rho_check)
    else:
        u = rs.longest_element(set(range(1, rs.rank + 1)) - {j})
        k = rs.coxeter_number + 1
        shift = tuple(
            -r + k * c for r, c in zip(rs.rho_check, rs.fundamental_coweights[j - 1])
        )
    shift = _linalg.as_int(shift)
    # w t_μ = t_{w(μ)} w
    return AffineWeylElement(u.act_coroot(shift), u)


def d_simplex_vertices(rs):
    """Vertices ρ̌ and ρ̌ − (h+1)o_i of X (coroot coordinates, rational)."""
    k = rs.coxeter_number + 1
    out = [rs.rho_check]
    for i, m in enumerate(rs.marks):
        out.append(
            tuple(r - Fraction(k, m) * c for r, c in zip(rs.rho_check, rs.fundamental_coweights[i]))
        )
    return out


def alcove_vertices(rs, k):
    """Vertices 0 and k·o_i of C̄_k (coroot coordinates, rational)."""
    out = [(Fraction(0),) * rs.rank]
    for i, m in enumerate(rs.marks):
        out.append(tuple(Fraction(k, m) * c for c in rs.fundamental_coweights[i]))
    return out


def ideal_to_representative(ideal):
    """Image of the ideal in C̄_{h+1} ∩ Q̌: g(F(w_i))."""
    return normalizer(ideal.rs).act_coroot_point(f_map(ideal_to_w(ideal)))


def enumerate_alcove_lattice(rs, k):
    """Q̌ ∩ C̄_k, sorted lexicographically on coroot coordinates.

    Walks nonnegative ω̌-coordinates a with Σ m_i a_i ≤ k and keeps the
    points whose coroot coordinates are integral.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = rs.rank
    det = abs(rs.index)
    adj = [[int(x * det) for x in row] for row in rs.fundamental_coweights]
    marks = rs.marks
    out = []

    def walk(i, left, acc):
        if i == n:
            if all(x % det == 0 for x in acc):
                out.append(tuple(x // det for x in acc))
            return
        for a in range(left // marks[i] + 1):
            walk(i + 1, left - a * marks[i], [x + a * y for x, y in zip(acc, adj[i])])

    walk(0, k, [0] * n)
    return sorted(out)


def enumerate_d(rs):
    """D = g⁻¹(C̄_{h+1} ∩ Q̌), sorted."""
    ginv = normalizer(rs).inverse
    return sorted(ginv.act_coroot_point(x) for x in enumerate_alcove_lattice(rs, rs.coxeter_number + 1))


def count_formula(rs):
    """∏(h + e_i + 1) / |W| with |W| = ∏(e_i + 1)."""
    h = rs.coxeter_number
    num = prod(h + e + 1 for e in rs.exponents)
    den = prod(e + 1 for e in rs.exponents)
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"non-exact division {num}/{den}: exponents are wrong")
    return q


def orbit_cost(rs, k):
    return k**rs.rank * rs.order


def count_orbits_direct(rs, k, budget=DEFAULT_BUDGET):
    """Number of W-orbits on Q̌/kQ̌, by connected components of the generator graph."""
    if k < 1:
        raise ValueError("k must be positive")
    cost = orbit_cost(rs, k)
    if cost > budget:
        raise BudgetExceeded(cost, budget)
    n = rs.rank
    size = k**n
    residues = np.indices((k,) * n).reshape(n, -1).T
    src = []
    dst = []
    for s in rs.simple_reflections:
        image = residues @ np.array(s.coroot_matrix, dtype=np.int64).T % k
        src.append(np.arange(size))
        dst.append(np.ravel_multi_index(image.T, (k,) * n))
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(size, size))
    count, _ = connected_components(graph, directed=False)
    return int(count)


def coprime_to_index(rs, k):
    return gcd(k, rs.index) == 1
