"""The root poset: antichains, dual order ideals, lower central series, L-sets."""

from dataclasses import dataclass, field
from functools import cached_property

from weylcat.affine import AffineRoot
from weylcat.rootsys import RootSystemError


def leq(rs, alpha, beta):
    """α ≤ β in the root poset: β − α has nonnegative simple-root coordinates."""
    for r in (alpha, beta):
        if not rs.is_positive_root(r):
            raise RootSystemError(f"{tuple(r)} is not a positive root of {rs.name}")
    return all(b >= a for a, b in zip(alpha, beta))


def _masks(rs):
    """Bitmasks over positive-root indices: strict up-sets and comparability."""
    roots = rs.positive_roots
    up = []
    comparable = []
    for a in roots:
        u = 0
        c = 0
        for j, b in enumerate(roots):
            ge = all(y >= x for x, y in zip(a, b))
            le = all(y <= x for x, y in zip(a, b))
            if ge:
                u |= 1 << j
            if ge or le:
                c |= 1 << j
        up.append(u)
        comparable.append(c)
    return up, comparable


@dataclass(frozen=True)
class Ideal:
    """An ad-nilpotent ideal, stored as the dual order ideal Φ and its antichain."""

    rs: object = field(compare=False, repr=False)
    phi: frozenset
    antichain: tuple

    def __post_init__(self):
        minimal = _minimal(self.rs, self.phi)
        if minimal != tuple(self.antichain):
            raise ValueError("antichain does not match the minimal elements of phi")
        if _upward_closure(self.rs, self.antichain) != self.phi:
            raise ValueError("phi is not upward closed")

    @classmethod
    def from_antichain(cls, rs, antichain):
        antichain = [tuple(a) for a in antichain]
        for a in antichain:
            if not rs.is_positive_root(a):
                raise RootSystemError(f"{a} is not a positive root of {rs.name}")
        for i, a in enumerate(antichain):
            for b in antichain[i + 1:]:
                if a == b or leq(rs, a, b) or leq(rs, b, a):
                    raise ValueError(f"{a} and {b} are comparable")
        phi = _upward_closure(rs, antichain)
        return cls(rs, phi, _minimal(rs, phi))

    @classmethod
    def from_phi(cls, rs, phi):
        phi = frozenset(tuple(r) for r in phi)
        return cls(rs, phi, _minimal(rs, phi))

    @property
    def sorted_phi(self):
        return tuple(sorted(self.phi, key=self.rs.root_index.__getitem__))

    @cached_property
    def is_abelian(self):
        return not any(
            tuple(x + y for x, y in zip(a, b)) in self.rs.roots for a in self.phi for b in self.phi
        )

    @cached_property
    def lower_series(self):
        return lower_series(self)


def _upward_closure(rs, roots):
    return frozenset(
        b for b in rs.positive_roots if any(all(y >= x for x, y in zip(a, b)) for a in roots)
    )


def _minimal(rs, phi):
    out = [
        a
        for a in phi
        if not any(b != a and all(y <= x for x, y in zip(a, b)) for b in phi)
    ]
    return tuple(sorted(out, key=rs.root_index.__getitem__))


def enumerate_antichains(rs):
    """Every antichain of (Δ⁺, ≤) exactly once, paired with its upward closure.

    Ideals come ordered by |Φ|, ties broken by the sorted root indices of the
    antichain; for A2 and B2 this is the i_1, i_2, ... labelling of the
    worked examples.
    """
    roots = rs.positive_roots
    up, comparable = _masks(rs)
    n = len(roots)
    found = []

    def dfs(start, chosen, blocked, phi_mask):
        found.append((tuple(chosen), phi_mask))
        for j in range(start, n):
            if not blocked >> j & 1:
                chosen.append(j)
                dfs(j + 1, chosen, blocked | comparable[j], phi_mask | up[j])
                chosen.pop()

    dfs(0, [], 0, 0)
    found.sort(key=lambda item: (item[1].bit_count(), item[0]))
    out = []
    for idx, mask in found:
        phi = frozenset(roots[j] for j in range(n) if mask >> j & 1)
        out.append(_trusted_ideal(rs, phi, tuple(roots[j] for j in idx)))
    return out


def _trusted_ideal(rs, phi, antichain):
    # skips the consistency checks of __post_init__; callers guarantee them
    ideal = object.__new__(Ideal)
    object.__setattr__(ideal, "rs", rs)
    object.__setattr__(ideal, "phi", phi)
    object.__setattr__(ideal, "antichain", antichain)
    return ideal


def count_antichains(rs):
    """Number of antichains, without materializing the ideals."""
    _, comparable = _masks(rs)
    n = len(comparable)

    def dfs(start, blocked):
        total = 1
        for j in range(start, n):
            if not blocked >> j & 1:
                total += dfs(j + 1, blocked | comparable[j])
        return total

    return dfs(0, 0)


def lower_series(ideal):
    """Levels Φ^1 ⊋ Φ^2 ⊋ ... with Φ^{k+1} = (Φ^k + Φ) ∩ Δ⁺, last level nonempty."""
    rs = ideal.rs
    phi = ideal.phi
    levels = []
    current = phi
    while current:
        levels.append(current)
        current = frozenset(
            s
            for a in current
            for b in phi
            if (s := tuple(x + y for x, y in zip(a, b))) in rs.root_index
        )
    return levels


def l_set(ideal):
    """The affine roots −β + kδ for β ∈ Φ^k."""
    return frozenset(
        AffineRoot(tuple(-c for c in beta), k)
        for k, level in enumerate(lower_series(ideal), start=1)
        for beta in level
    )


def count_abelian(rs):
    return sum(1 for i in enumerate_antichains(rs) if i.is_abelian)
