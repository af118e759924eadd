"""Simple root systems from Dynkin data, normalized so the highest root has (θ,θ)=2.

Coordinates conventions used throughout the package:

* roots and points of V are vectors on the simple-root basis α_1..α_n;
* coroot-lattice vectors (translations, lattice points) are vectors on the
  simple-coroot basis α̌_1..α̌_n, where α̌_i = 2α_i/(α_i,α_i).

Simple indices are 1-based in every public signature (Bourbaki numbering);
index 0 is reserved for the affine simple root.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import prod
from typing import NamedTuple

from weylcat import _linalg

VALID_RANKS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class RootSystemError(ValueError):
    pass


def _dynkin(letter, n):
    """Squared lengths of simple roots and the bonds, 0-based, Bourbaki order."""
    lengths = [Fraction(2)] * n
    edges = [(i, i + 1) for i in range(n - 1)]
    if letter == "B":
        lengths[n - 1] = Fraction(1)
    elif letter == "C":
        lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
    elif letter == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif letter == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    elif letter == "F":
        lengths = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
    elif letter == "G":
        lengths = [Fraction(2, 3), Fraction(2)]
    return lengths, edges


def validate_type(letter, rank):
    if not isinstance(letter, str) or letter.upper() not in VALID_RANKS:
        raise RootSystemError(f"unknown type {letter!r}: expected one of A, B, C, D, E, F, G")
    letter = letter.upper()
    if isinstance(rank, bool) or not isinstance(rank, int):
        raise RootSystemError(f"rank must be an integer, got {rank!r}")
    lo, hi = VALID_RANKS[letter]
    if rank < lo or (hi is not None and rank > hi):
        bound = f"{lo} <= n <= {hi}" if hi is not None else f"n >= {lo}"
        if lo == hi:
            bound = f"n = {lo}"
        raise RootSystemError(f"type {letter} requires {bound}, got n = {rank}")
    return letter, rank


class DominantResult(NamedTuple):
    v: "WeylElement"
    point: tuple
    regular: bool


class RootSystem:
    """Immutable tables for one simple type. Use :func:`build` to obtain one."""

    def __init__(self, letter, rank):
        letter, n = validate_type(letter, rank)
        self.type_letter = letter
        self.rank = n
        lengths, edges = _dynkin(letter, n)
        gram = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            gram[i][i] = lengths[i]
        for i, j in edges:
            gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) / 2
        self.gram = tuple(tuple(r) for r in gram)
        self.d = tuple(x / 2 for x in lengths)
        self.cartan = tuple(
            tuple(int(2 * gram[i][j] / gram[i][i]) for j in range(n)) for i in range(n)
        )
        self.coroot_scale = tuple(int(2 / x) for x in lengths)

        self.positive_roots = self._close_roots()
        self.root_index = {r: i for i, r in enumerate(self.positive_roots)}
        self.roots = frozenset(self.positive_roots) | frozenset(
            tuple(-c for c in r) for r in self.positive_roots
        )
        self.theta = self.positive_roots[-1]
        self.marks = self.theta
        self.coxeter_number = sum(self.theta) + 1
        self.exponents = self._exponents()
        self.order = prod(e + 1 for e in self.exponents)

        self._cartan_inv = _linalg.inverse(self.cartan)
        self.fundamental_coweights = self._cartan_inv  # rows, coroot coords
        self.index = int(_linalg.determinant(self.cartan))
        self.J = tuple(i + 1 for i, m in enumerate(self.marks) if m == 1)
        self.rho_check = tuple(sum(col) for col in zip(*self._cartan_inv))

        if self.pairing(self.theta, self.theta) != 2:
            raise AssertionError("highest root normalization failed")

    def __repr__(self):
        return f"RootSystem({self.type_letter}{self.rank})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.type_letter, self.rank) == (
            other.type_letter,
            other.rank,
        )

    def __hash__(self):
        return hash((self.type_letter, self.rank))

    @property
    def name(self):
        return f"{self.type_letter}{self.rank}"

    # -- construction -------------------------------------------------

    def _close_roots(self):
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    down = list(beta)
                    p = 0
                    while True:
                        down[i] -= 1
                        if tuple(down) in found:
                            p += 1
                        else:
                            break
                    if p - self.coroot_pairing(beta, i + 1) > 0:
                        up = list(beta)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            layer = nxt
        # height first, then α_1-heavy roots first
        return tuple(sorted(found, key=lambda r: (sum(r), tuple(-c for c in r))))

    def _exponents(self):
        by_height = {}
        for r in self.positive_roots:
            by_height[sum(r)] = by_height.get(sum(r), 0) + 1
        top = max(by_height)
        exps = []
        for k in range(1, top + 1):
            exps += [k] * (by_height.get(k, 0) - by_height.get(k + 1, 0))
        return tuple(exps)

    # -- arithmetic ---------------------------------------------------

    def pairing(self, x, y):
        """(x, y) for x, y on the simple-root basis."""
        g = self.gram
        return sum(
            (x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank) if x[i] and y[j]),
            Fraction(0),
        )

    def coroot_pairing(self, x, i):
        """<x, α̌_i> for x on the root basis; i is 1-based."""
        row = self.cartan[i - 1]
        return sum(a * c for a, c in zip(row, x))

    def root_coroot_pairing(self, x, tau):
        """(x, τ) for x on the root basis and τ on the coroot basis."""
        return sum(t * self.coroot_pairing(x, i + 1) for i, t in enumerate(tau) if t)

    def to_root_coords(self, c):
        return tuple(k * x for k, x in zip(self.coroot_scale, c))

    def to_coroot_coords(self, x):
        return tuple(Fraction(v) / k for k, v in zip(self.coroot_scale, x))

    def coroot(self, alpha):
        """Coroot α̌ of a root α, on the coroot basis."""
        scale = 2 / self.pairing(alpha, alpha)
        return self.to_coroot_coords(tuple(scale * a for a in alpha))

    def height(self, root):
        return sum(root)

    def is_root(self, x):
        return tuple(x) in self.roots

    def is_positive_root(self, x):
        return tuple(x) in self.root_index

    def in_coroot_lattice(self, c):
        return _linalg.is_integral(c)

    def coweight_coords(self, c):
        """Pairings (c, α_i) of a coroot-basis vector: its coordinates on the ω̌ basis."""
        return tuple(
            sum(c[k] * self.cartan[k][i] for k in range(self.rank)) for i in range(self.rank)
        )

    def from_coweight_coords(self, a):
        """Coroot-basis vector with the given ω̌ coordinates."""
        inv = self._cartan_inv
        return tuple(
            sum(a[i] * inv[i][l] for i in range(self.rank)) for l in range(self.rank)
        )

    def reflect(self, alpha, x):
        """s_α(x) = x - (x, α̌) α, exact."""
        alpha = tuple(alpha)
        if alpha not in self.roots:
            raise RootSystemError(f"{alpha} is not a root of {self.name}")
        c = 2 * self.pairing(x, alpha) / self.pairing(alpha, alpha)
        return tuple(xi - c * ai for xi, ai in zip(x, alpha))

    # -- Weyl group -----------------------------------------------------

    @cached_property
    def identity(self):
        n = self.rank
        return WeylElement(self, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @cached_property
    def simple_reflections(self):
        """Tuple indexed 0..n-1 holding s_1..s_n."""
        out = []
        n = self.rank
        for i in range(n):
            cols = []
            for j in range(n):
                e = [int(k == j) for k in range(n)]
                e[i] -= self.cartan[i][j]
                cols.append(e)
            out.append(WeylElement(self, _linalg.transpose(cols)))
        return tuple(out)

    def s(self, i):
        return self.simple_reflections[i - 1]

    def reflection(self, alpha):
        n = self.rank
        cols = [
            self.reflect(alpha, tuple(int(k == j) for k in range(n))) for j in range(n)
        ]
        return WeylElement(self, tuple(tuple(int(x) for x in row) for row in _linalg.transpose(cols)))

    def from_word(self, word):
        w = self.identity
        for i in word:
            if not 1 <= i <= self.rank:
                raise RootSystemError(f"simple index {i} out of range 1..{self.rank}")
            w = w * self.s(i)
        return w

    def longest_element(self, subset=None):
        """Longest element of the parabolic subgroup on ``subset`` (1-based)."""
        subset = sorted(range(1, self.rank + 1) if subset is None else set(subset))
        for i in subset:
            if not 1 <= i <= self.rank:
                raise RootSystemError(f"simple index {i} out of range 1..{self.rank}")
        w = self.identity
        grew = True
        while grew:
            grew = False
            for i in subset:
                if not _is_negative(w.column(i)):
                    w = w * self.s(i)
                    grew = True
        return w

    def dominant_representative(self, x):
        """Greedy descent to the closed dominant chamber; returns (v, v(x), regular)."""
        x = tuple(Fraction(c) for c in x)
        v = self.identity
        n = self.rank
        while True:
            for i in range(n):
                if sum(self.gram[i][j] * x[j] for j in range(n)) < 0:
                    x = self.s(i + 1)(x)
                    v = self.s(i + 1) * v
                    break
            else:
                break
        regular = all(sum(self.gram[i][j] * x[j] for j in range(n)) != 0 for i in range(n))
        return DominantResult(v, x, regular)

    def weyl_group(self):
        """All elements of W by breadth-first closure (small ranks only)."""
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.simple_reflections:
                    u = w * s
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return seen


def _is_negative(vec):
    return any(c < 0 for c in vec)


@dataclass(frozen=True)
class WeylElement:
    """Finite Weyl group element, identified by its matrix on simple-root coordinates."""

    rs: RootSystem = field(compare=False, repr=False)
    matrix: tuple

    def __call__(self, x):
        return _linalg.matvec(self.matrix, x)

    def __mul__(self, other):
        return WeylElement(self.rs, _linalg.matmul(self.matrix, other.matrix))

    def column(self, i):
        """w(α_i), 1-based."""
        return tuple(row[i - 1] for row in self.matrix)

    @cached_property
    def coroot_matrix(self):
        k = self.rs.coroot_scale
        n = self.rs.rank
        return tuple(
            tuple(self.matrix[i][j] * k[j] // k[i] for j in range(n)) for i in range(n)
        )

    def act_coroot(self, c):
        """Action on a vector given on the simple-coroot basis."""
        return _linalg.matvec(self.coroot_matrix, c)

    @cached_property
    def word(self):
        """A reduced word (list of 1-based simple indices), via right descents."""
        rev = []
        w = self
        while True:
            for i in range(1, self.rs.rank + 1):
                if _is_negative(w.column(i)):
                    rev.append(i)
                    w = w * self.rs.s(i)
                    break
            else:
                break
        return tuple(reversed(rev))

    @property
    def length(self):
        return sum(1 for r in self.rs.positive_roots if _is_negative(self(r)))

    @cached_property
    def inverse(self):
        u = self.rs.identity
        for i in reversed(self.word):
            u = u * self.rs.s(i)
        return u

    @property
    def is_identity(self):
        return self == self.rs.identity


@lru_cache(maxsize=None)
def build(type_letter, rank):
    """Construct (and cache) the root system of the given type and rank."""
    letter, rank = validate_type(type_letter, rank)
    return RootSystem(letter, rank)


def pairing(rs, x, y):
    return rs.pairing(x, y)


def reflect(rs, alpha, x):
    return rs.reflect(alpha, x)


def longest_element(rs, subset=None):
    return rs.longest_element(subset)


def dominant_representative(rs, x):
    return rs.dominant_representative(x)
