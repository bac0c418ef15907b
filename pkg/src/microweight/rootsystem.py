"""Root systems of types A, B, C, D, E6, E7 in exact ambient coordinates.

Each system is realized in the standard epsilon-coordinates: A_m in
dimension m+1, B_m/C_m/D_m in dimension m, E6 and E7 inside dimension 8.
Weights are plain tuples of Fractions in ambient coordinates; conversions
to and from simple-root coordinates are exact.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial

from . import linalg
from .linalg import dot, neg, scale, sub, vec, zero_vec

TYPE_LABELS = ("A", "B", "C", "D", "E6", "E7")

HALF = Fraction(1, 2)


class RootSystemError(ValueError):
    """Invalid type/rank combination or malformed construction input."""


class NotARootError(ValueError):
    """A vector used as a reflection axis is not a root of the system."""


class SpanError(ValueError):
    """A vector lies outside the rational span of the simple roots."""


class RootSystem:
    """A realized root system: simple roots, all roots, pairing data.

    Immutable after construction; safe to share between threads.
    """

    def __init__(self, type_label, rank, ambient_dim, simple_roots, positive_roots):
        self.type_label = type_label
        self.rank = rank
        self.ambient_dim = ambient_dim
        self.simple_roots = tuple(simple_roots)
        self.positive_roots = tuple(sorted(positive_roots))
        self.roots = self.positive_roots + tuple(neg(r) for r in self.positive_roots)
        self._root_set = frozenset(self.roots)
        self.root_norms = {r: dot(r, r) for r in self.roots}
        if len(self.simple_roots) != rank:
            raise RootSystemError("simple root count does not match rank")
        if linalg.rank(self.simple_roots) != rank:
            raise RootSystemError("simple roots are not linearly independent")

    def __repr__(self):
        return f"RootSystem({self.type_label}{self.rank})"

    def __eq__(self, other):
        return (isinstance(other, RootSystem)
                and (self.type_label, self.rank) == (other.type_label, other.rank))

    def __hash__(self):
        return hash((self.type_label, self.rank))

    def is_root(self, v):
        return tuple(v) in self._root_set

    def zero(self):
        return zero_vec(self.ambient_dim)


def _simple_a(m):
    dim = m + 1
    return [_unit_diff(i, i + 1, dim) for i in range(m)]


def _unit(i, dim):
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim))


def _unit_diff(i, j, dim):
    return tuple(Fraction(1) if k == i else Fraction(-1) if k == j else Fraction(0)
                 for k in range(dim))


def _roots_a(m):
    dim = m + 1
    return [_unit_diff(i, j, dim) for i in range(dim) for j in range(i + 1, dim)]


def _roots_b(m):
    pos = [_unit(i, m) for i in range(m)]
    for i, j in combinations(range(m), 2):
        pos.append(_unit_diff(i, j, m))
        pos.append(linalg.add(_unit(i, m), _unit(j, m)))
    return pos


def _roots_c(m):
    pos = [scale(2, _unit(i, m)) for i in range(m)]
    for i, j in combinations(range(m), 2):
        pos.append(_unit_diff(i, j, m))
        pos.append(linalg.add(_unit(i, m), _unit(j, m)))
    return pos


def _roots_d(m):
    pos = []
    for i, j in combinations(range(m), 2):
        pos.append(_unit_diff(i, j, m))
        pos.append(linalg.add(_unit(i, m), _unit(j, m)))
    return pos


def _e_half_family(fixed, free_count, parity):
    """Vectors 1/2*(fixed part + sum_{i<free_count} s_i e_i) with the number
    of minus signs among the free coordinates congruent to ``parity`` mod 2."""
    out = []
    for signs in product((1, -1), repeat=free_count):
        if sum(1 for s in signs if s == -1) % 2 != parity:
            continue
        v = list(fixed)
        for i, s in enumerate(signs):
            v[i] = Fraction(s, 2)
        out.append(tuple(v))
    return out


def _all_roots_e7():
    roots = []
    for i, j in combinations(range(6), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            roots.append(tuple(v))
    base = [Fraction(0)] * 8
    base[6], base[7] = HALF, -HALF
    half = _e_half_family(base, 6, 1)
    roots.extend(half)
    roots.extend(neg(v) for v in half)
    e78 = [Fraction(0)] * 8
    e78[6], e78[7] = Fraction(1), Fraction(-1)
    roots.append(tuple(e78))
    roots.append(neg(tuple(e78)))
    return roots


def _all_roots_e6():
    roots = []
    for i, j in combinations(range(5), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            roots.append(tuple(v))
    base = [Fraction(0)] * 8
    base[5], base[6], base[7] = -HALF, -HALF, HALF
    half = _e_half_family(base, 5, 0)
    roots.extend(half)
    roots.extend(neg(v) for v in half)
    return roots


def _simple_e7():
    a1 = vec([HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF])
    a2 = vec([1, 1, 0, 0, 0, 0, 0, 0])
    a3 = vec([-1, 1, 0, 0, 0, 0, 0, 0])
    a4 = vec([0, -1, 1, 0, 0, 0, 0, 0])
    a5 = vec([0, 0, -1, 1, 0, 0, 0, 0])
    a6 = vec([0, 0, 0, -1, 1, 0, 0, 0])
    a7 = vec([0, 0, 0, 0, -1, 1, 0, 0])
    return [a1, a2, a3, a4, a5, a6, a7]


def _simple_e6():
    return _simple_e7()[:6]


_VALID_RANKS = {
    "A": lambda m: m >= 1,
    "B": lambda m: m >= 2,
    "C": lambda m: m >= 2,
    "D": lambda m: m >= 3,
    "E6": lambda m: m == 6,
    "E7": lambda m: m == 7,
}


@lru_cache(maxsize=None)
def build_root_system(type_label, rank):
    """Construct the root system of the given type and rank.

    Raises RootSystemError when the rank is out of range for the type.
    """
    if type_label not in TYPE_LABELS:
        raise RootSystemError(f"unknown type label {type_label!r}")
    if not _VALID_RANKS[type_label](rank):
        raise RootSystemError(f"rank {rank} is out of range for type {type_label}")
    if type_label == "A":
        return RootSystem("A", rank, rank + 1, _simple_a(rank), _roots_a(rank))
    if type_label == "B":
        simple = [_unit_diff(i, i + 1, rank) for i in range(rank - 1)]
        simple.append(_unit(rank - 1, rank))
        return RootSystem("B", rank, rank, simple, _roots_b(rank))
    if type_label == "C":
        simple = [_unit_diff(i, i + 1, rank) for i in range(rank - 1)]
        simple.append(scale(2, _unit(rank - 1, rank)))
        return RootSystem("C", rank, rank, simple, _roots_c(rank))
    if type_label == "D":
        simple = [_unit_diff(i, i + 1, rank) for i in range(rank - 1)]
        simple.append(linalg.add(_unit(rank - 2, rank), _unit(rank - 1, rank)))
        return RootSystem("D", rank, rank, simple, _roots_d(rank))
    if type_label == "E6":
        simple = _simple_e6()
        all_roots = _all_roots_e6()
    else:
        simple = _simple_e7()
        all_roots = _all_roots_e7()
    positive = [r for r in all_roots if _is_nonnegative_combo(simple, r)]
    if 2 * len(positive) != len(all_roots):
        raise RootSystemError("positivity split failed")  # construction bug guard
    return RootSystem(type_label, rank, 8, simple, positive)


def _is_nonnegative_combo(simple, v):
    coeffs = linalg.solve_in_basis(simple, v)
    return coeffs is not None and all(c >= 0 for c in coeffs)


def pairing(system, x, alpha):
    """Exact value of (x, alpha-check) = 2(x, alpha)/(alpha, alpha)."""
    alpha = tuple(alpha)
    if not system.is_root(alpha):
        raise NotARootError(f"{alpha} is not a root of {system}")
    return 2 * dot(tuple(x), alpha) / system.root_norms[alpha]


def reflect(system, alpha, x):
    """Reflection of x in the hyperplane orthogonal to the root alpha."""
    alpha = tuple(alpha)
    if not system.is_root(alpha):
        raise NotARootError(f"{alpha} is not a root of {system}")
    return sub(tuple(x), scale(pairing(system, x, alpha), alpha))


def to_simple_root_coords(system, x):
    """Coordinates of x with respect to the simple roots; exact.

    Raises SpanError when x is outside the span (possible whenever the
    ambient dimension exceeds the rank).
    """
    coeffs = linalg.solve_in_basis(system.simple_roots, tuple(x))
    if coeffs is None:
        raise SpanError(f"{x} is not in the span of the simple roots of {system}")
    return coeffs


def from_simple_root_coords(system, coeffs):
    coeffs = tuple(Fraction(c) for c in coeffs)
    if len(coeffs) != system.rank:
        raise ValueError("coefficient vector length does not match the rank")
    out = system.zero()
    for c, a in zip(coeffs, system.simple_roots):
        out = linalg.add(out, scale(c, a))
    return out


def reflection_matrix_table(system):
    """Table of images of simple roots under simple reflections.

    Entry (i, j) (0-based) is the reflection of the j-th simple root in
    the i-th simple root.
    """
    n = system.rank
    return tuple(
        tuple(reflect(system, system.simple_roots[i], system.simple_roots[j])
              for j in range(n))
        for i in range(n)
    )


def cartan_matrix(system):
    """Entries (i, j) = (alpha_j, alpha_i-check)."""
    return tuple(
        tuple(pairing(system, aj, ai) for aj in system.simple_roots)
        for ai in system.simple_roots
    )


def weyl_group_order(system):
    """Order of the Weyl group, from the closed-form table per type."""
    m = system.rank
    if system.type_label == "A":
        return factorial(m + 1)
    if system.type_label in ("B", "C"):
        return 2 ** m * factorial(m)
    if system.type_label == "D":
        return 2 ** (m - 1) * factorial(m)
    if system.type_label == "E6":
        return 51840
    return 2903040
