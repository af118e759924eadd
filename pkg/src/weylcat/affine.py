"""The affine Weyl group as pairs t_τ·v, acting on affine roots β + kδ.

τ lives on the simple-coroot basis, v is a finite :class:`WeylElement`.
Affine simple reflections are indexed 0..n with s_0 = t_θ̌ s_θ.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache

from weylcat import _linalg
from weylcat.rootsys import RootSystemError


class AffineRoot(tuple):
    """β + kδ with β a root (simple-root coordinates) and k the δ-level."""

    __slots__ = ()

    def __new__(cls, root, level):
        return tuple.__new__(cls, (tuple(root), int(level)))

    @property
    def root(self):
        return self[0]

    @property
    def level(self):
        return self[1]

    @property
    def is_positive(self):
        root, k = self
        if k > 0:
            return True
        return k == 0 and any(c > 0 for c in root)

    def __repr__(self):
        return f"AffineRoot({self[0]}, {self[1]})"


class NotBiconvexError(ValueError):
    """Raised when a set of affine roots is not the inversion set of any element."""


def simple_affine_roots(rs):
    """α_0 = −θ + δ followed by α_1..α_n."""
    n = rs.rank
    out = [AffineRoot(tuple(-c for c in rs.theta), 1)]
    out += [AffineRoot(tuple(int(i == j) for j in range(n)), 0) for i in range(n)]
    return tuple(out)


@dataclass(frozen=True)
class AffineWeylElement:
    """t_τ·v with τ in the coroot lattice (coroot coordinates) and v in W."""

    tau: tuple
    v: object

    @property
    def rs(self):
        return self.v.rs

    def __mul__(self, other):
        tau = tuple(a + b for a, b in zip(self.tau, self.v.act_coroot(other.tau)))
        return AffineWeylElement(tau, self.v * other.v)

    @cached_property
    def inverse(self):
        vinv = self.v.inverse
        return AffineWeylElement(tuple(-c for c in vinv.act_coroot(self.tau)), vinv)

    def act(self, a):
        """Image of the affine root a: root part v(β), level k − (v(β), τ)."""
        root, k = a
        image = self.v(root)
        return AffineRoot(image, k - self.rs.root_coroot_pairing(image, self.tau))

    def act_point(self, x):
        """Affine-transformation action x ↦ v(x) + τ on V (root coordinates)."""
        shift = self.rs.to_root_coords(self.tau)
        return tuple(a + b for a, b in zip(self.v(x), shift))

    def act_coroot_point(self, c):
        """Same action, for a point given on the coroot basis."""
        return tuple(a + b for a, b in zip(self.v.act_coroot(c), self.tau))

    @cached_property
    def word(self):
        """A reduced word in 0..n, read off by repeated left descents.

        Descents are tried in the order 1..n, then 0, so the word agrees with
        the one recorded by :func:`from_inversions`.
        """
        simple = simple_affine_roots(self.rs)
        gens = generators(self.rs)
        order = _descent_order(self.rs)
        u = self.inverse
        word = []
        while True:
            for i in order:
                if not u.act(simple[i]).is_positive:
                    word.append(i)
                    u = u * gens[i]
                    break
            else:
                return tuple(word)

    @property
    def length(self):
        return len(self.word)

    @property
    def is_identity(self):
        return not any(self.tau) and self.v.is_identity

    def __repr__(self):
        return f"AffineWeylElement(tau={self.tau}, v={self.v.word})"


def _descent_order(rs):
    return tuple(range(1, rs.rank + 1)) + (0,)


def identity(rs):
    return AffineWeylElement((0,) * rs.rank, rs.identity)


@lru_cache(maxsize=None)
def generators(rs):
    """(s_0, s_1, ..., s_n) as pairs."""
    n = rs.rank
    theta_check = _linalg.as_int(rs.coroot(rs.theta))
    out = [AffineWeylElement(theta_check, rs.reflection(rs.theta))]
    out += [AffineWeylElement((0,) * n, rs.s(i)) for i in range(1, n + 1)]
    return tuple(out)


def translation(rs, tau):
    tau = _linalg.as_int(tau)
    if len(tau) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates, got {len(tau)}")
    return AffineWeylElement(tau, rs.identity)


def from_word(rs, word):
    gens = generators(rs)
    w = identity(rs)
    for i in word:
        if not 0 <= i <= rs.rank:
            raise RootSystemError(f"affine simple index {i} out of range 0..{rs.rank}")
        w = w * gens[i]
    return w


def act(w, a):
    return w.act(a)


def inversion_set(w):
    """N(w) = {α > 0 : w⁻¹(α) < 0}, by telescoping along a reduced word."""
    simple = simple_affine_roots(w.rs)
    gens = generators(w.rs)
    prefix = identity(w.rs)
    out = set()
    for i in w.word:
        out.add(prefix.act(simple[i]))
        prefix = prefix * gens[i]
    return frozenset(out)


def inversion_set_by_levels(w, bound=None):
    """N(w) by scanning β + kδ, −β + kδ for 0 ≤ k ≤ bound; a check on :func:`inversion_set`."""
    rs = w.rs
    if bound is None:
        bound = w.length
    winv = w.inverse
    out = set()
    for beta in rs.positive_roots:
        neg = tuple(-c for c in beta)
        for k in range(bound + 1):
            for a in (AffineRoot(beta, k), AffineRoot(neg, k)):
                if a.is_positive and not winv.act(a).is_positive:
                    out.add(a)
    return frozenset(out)


def _simple_reflect(rs, i, a):
    """s_i applied to an affine root, with the generator formulas inlined."""
    root, k = a
    if i == 0:
        c = _theta_pairing(rs, root)
        return AffineRoot(tuple(b - c * t for b, t in zip(root, rs.theta)), k + c)
    c = rs.coroot_pairing(root, i)
    image = list(root)
    image[i - 1] -= c
    return AffineRoot(image, k)


def _theta_pairing(rs, root):
    # <β, θ̌> = (β, θ) since (θ, θ) = 2
    return int(rs.pairing(root, rs.theta))


def from_inversions(rs, roots):
    """The unique w with N(w) equal to ``roots``; NotBiconvexError if none exists.

    Peels off one simple affine root at a time, trying α_1..α_n before α_0;
    the result does not depend on the choice, only the recorded word does.
    """
    target = frozenset(AffineRoot(*a) for a in roots)
    for a in target:
        if not a.is_positive:
            raise NotBiconvexError(f"{a} is not a positive affine root")
    simple = simple_affine_roots(rs)
    order = _descent_order(rs)
    remaining = set(target)
    word = []
    while remaining:
        for i in order:
            a = simple[i]
            if a in remaining:
                break
        else:
            raise NotBiconvexError("no simple affine root in a nonempty set")
        remaining.discard(a)
        remaining = {_simple_reflect(rs, i, b) for b in remaining}
        if not all(b.is_positive for b in remaining):
            raise NotBiconvexError("reflection left the positive affine roots")
        word.append(i)
    w = from_word(rs, word)
    if inversion_set(w) != target:
        raise NotBiconvexError("reconstructed element has a different inversion set")
    return w


def is_ideal_element(w):
    """Descent test: w⁻¹(α_i) > 0 for finite simple roots, and every simple
    affine root sent below zero lands on β − δ with β ∈ Δ⁺."""
    rs = w.rs
    simple = simple_affine_roots(rs)
    winv = w.inverse
    if any(not winv.act(a).is_positive for a in simple[1:]):
        return False
    for a in simple:
        image = w.act(a)
        if not image.is_positive:
            if image.level != -1 or not rs.is_positive_root(image.root):
                return False
    return True


def is_ideal_element_geometric(w):
    """Alcove test on (τ, v): w̄(C_1) in the dominant chamber, (τ, v(α_i)) ≤ 1, (τ, v(θ)) ≥ −2."""
    rs = w.rs
    winv = w.inverse
    if any(not winv.act(a).is_positive for a in simple_affine_roots(rs)[1:]):
        return False
    for i in range(1, rs.rank + 1):
        if rs.root_coroot_pairing(w.v.column(i), w.tau) > 1:
            return False
    return rs.root_coroot_pairing(w.v(rs.theta), w.tau) >= -2
