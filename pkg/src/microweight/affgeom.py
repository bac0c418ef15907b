"""Exact affine geometry on finite rational point configurations.

Covers collinearity scans, cube-vertex coordinate checks, the separating
hyperplane partition of the 56-point weight system, and detection of
point sets affinely isomorphic to that weight system.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm

from . import linalg
from .linalg import add, dot, mat_vec, neg, scale, sub, vec
from .rootsystem import build_root_system, to_simple_root_coords
from .weylorbit import fundamental_weight, orbit, orbit_words
from .rootsystem import reflect


class DetectionInconclusive(RuntimeError):
    """Backtracking search hit the node-expansion cap before deciding."""


class Configuration:
    """A finite set of distinct rational points of common dimension.

    Affine dimension, barycenter and antipodal symmetry are computed on
    construction and cached; instances are immutable.
    """

    def __init__(self, points):
        pts = [vec(p) for p in points]
        if not pts:
            raise ValueError("a configuration needs at least one point")
        dim = len(pts[0])
        if any(len(p) != dim for p in pts):
            raise ValueError("points have inconsistent dimensions")
        if len(set(pts)) != len(pts):
            raise ValueError("configuration points must be distinct")
        self.points = tuple(sorted(pts))
        self.dim = dim
        n = Fraction(len(pts))
        sums = [sum((p[i] for p in pts), Fraction(0)) for i in range(dim)]
        self.barycenter = tuple(s / n for s in sums)
        base = self.points[0]
        self.affine_dimension = linalg.rank([sub(p, base) for p in self.points[1:]])
        mirrored = {sub(scale(2, self.barycenter), p) for p in self.points}
        self.antipodal = mirrored == set(self.points)

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"Configuration({len(self.points)} points, dim {self.dim})"


def affine_dimension(config):
    return config.affine_dimension


def _primitive_direction(v):
    """Scale a nonzero rational vector to a primitive integer vector,
    normalized up to sign (first nonzero entry positive)."""
    mult = lcm(*(f.denominator for f in v)) if len(v) > 1 else v[0].denominator
    ints = [int(f * mult) for f in v]
    g = gcd(*ints) if len(ints) > 1 else abs(ints[0])
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def collinear_triple_count(config):
    """Exact number of unordered collinear triples in the configuration."""
    pts = config.points
    total = 0
    for p in pts:
        dirs = Counter()
        for q in pts:
            if q != p:
                dirs[_primitive_direction(sub(q, p))] += 1
        total += sum(k * (k - 1) // 2 for k in dirs.values())
    # every collinear triple is seen once from each of its three points
    assert total % 3 == 0
    return total // 3


def _collinear(a, b, c):
    """Exact test: rank of the two difference vectors is at most 1."""
    u, v = sub(b, a), sub(c, a)
    for (i, j) in combinations(range(len(u)), 2):
        if u[i] * v[j] != u[j] * v[i]:
            return False
    return True


def no_three_collinear(config):
    """(True, None) when no three distinct points are collinear, else
    (False, lexicographically-first witness triple)."""
    if collinear_triple_count(config) == 0:
        return True, None
    pts = config.points
    for a, b, c in combinations(pts, 3):
        if _collinear(a, b, c):
            return False, (a, b, c)
    raise AssertionError("positive triple count but no witness found")


def is_pm1_in_basis(config, basis, origin):
    """True iff every point is origin plus a {-1,+1} combination of the
    independent basis vectors."""
    basis = [vec(b) for b in basis]
    if linalg.rank(basis) != len(basis):
        raise ValueError("basis vectors are linearly dependent")
    origin = vec(origin)
    for p in config.points:
        coeffs = linalg.solve_in_basis(basis, sub(p, origin))
        if coeffs is None or any(c not in (1, -1) for c in coeffs):
            return False
    return True


# ---------------------------------------------------------------------------
# the canonical 56-point weight system in integer simple-root coordinates


@lru_cache(maxsize=1)
def omega56():
    """The 56-point minuscule E7 weight system, doubled and written in
    simple-root coordinates so that every entry is an integer."""
    system = build_root_system("E7", 7)
    orb = orbit(system, fundamental_weight(system, 7))
    pts = []
    for x in orb.support:
        coords = to_simple_root_coords(system, scale(2, x))
        assert linalg.is_integral(coords)
        pts.append(tuple(int(c) for c in coords))
    return frozenset(pts)


@lru_cache(maxsize=1)
def omega56_configuration():
    return Configuration(omega56())


# ---------------------------------------------------------------------------
# separating hyperplane partition


@lru_cache(maxsize=1)
def _orbit_words_from_top():
    system = build_root_system("E7", 7)
    return orbit_words(system, fundamental_weight(system, 7))


@dataclass(frozen=True)
class SeparationReport:
    functional: tuple        # ambient coefficient vector of the linear functional
    constant: Fraction
    level_counts: dict       # functional value -> number of weights

    def evaluate(self, x):
        return dot(self.functional, vec(x)) + self.constant


def _last_coordinate_dual(system):
    """Vector d in the span of the simple roots with (d, alpha_j) equal to
    1 for the last simple root and 0 otherwise, so (d, x) extracts the last
    simple-root coordinate of any x in the span."""
    gram = [[dot(ai, aj) for aj in system.simple_roots] for ai in system.simple_roots]
    rhs = [Fraction(0)] * system.rank
    rhs[-1] = Fraction(1)
    t = linalg.solve_square(gram, rhs)
    d = system.zero()
    for c, a in zip(t, system.simple_roots):
        d = add(d, scale(c, a))
    return d


def separation_partition(weights, w):
    """Level counts of the transported top-coordinate functional on the
    56-point weight system.

    The functional realizing the 1/27/27/1 partition for the highest
    weight is the last simple-root coordinate (doubled); for any other
    orbit element it is transported along the reflection word reaching
    that element.  Values are reported on the doubled weight coordinates.
    """
    system = build_root_system("E7", 7)
    words = _orbit_words_from_top()
    if set(weights.support) != set(words):
        raise ValueError("weights must be the minuscule E7 weight system")
    w = vec(w)
    if w not in weights:
        raise ValueError(f"{w} is not an element of the weight system")
    d = _last_coordinate_dual(system)
    for i in words[w]:
        d = reflect(system, system.simple_roots[i], d)
    functional = scale(2, d)
    counts = Counter(dot(functional, x) for x in weights.support)
    return SeparationReport(functional, Fraction(0), dict(counts))


# ---------------------------------------------------------------------------
# detection of configurations affinely isomorphic to the weight system


@dataclass(frozen=True)
class AffineMap:
    """f(x) = matrix . x + translation, exact rationals."""
    matrix: tuple       # rows, shape 7 x ambient_dim
    translation: tuple  # length 7

    def apply(self, x):
        return add(mat_vec(self.matrix, vec(x)), self.translation)


def _difference_counter(points):
    c = Counter()
    for a in points:
        for b in points:
            if a != b:
                c[sub(a, b)] += 1
    return c


@lru_cache(maxsize=1)
def _target_data():
    target = tuple(sorted(vec(p) for p in omega56()))
    diffs = _difference_counter(target)
    sigs = {p: tuple(sorted(diffs[sub(p, q)] for q in target if q != p))
            for p in target}
    return target, diffs, sigs


def _greedy_independent(points, k):
    chosen = []
    for p in points:
        if linalg.rank(chosen + [p]) == len(chosen) + 1:
            chosen.append(p)
            if len(chosen) == k:
                return chosen
    return None


def detect_e7_config(config, node_cap=10 ** 7):
    """Search for an exact affine isomorphism carrying the configuration
    onto the canonical 56-point weight system.

    Returns an AffineMap on success and None when the configuration is
    provably not of that type.  Raises DetectionInconclusive if the
    backtracking search exceeds ``node_cap`` candidate expansions (never
    observed on genuine instances; the invariant prefilters do the work).
    """
    target, target_diffs, target_sigs = _target_data()
    target_set = set(target)
    if len(config) != len(target):
        return None
    if config.affine_dimension != 7:
        return None
    if not config.antipodal:
        return None
    if collinear_triple_count(config) != collinear_triple_count(
            omega56_configuration()):
        return None

    center = config.barycenter
    pts = tuple(sorted(sub(p, center) for p in config.points))
    pts_set = set(pts)
    diffs = _difference_counter(pts)
    if sorted(diffs.values()) != sorted(target_diffs.values()):
        return None
    sigs = {p: tuple(sorted(diffs[sub(p, q)] for q in pts if q != p)) for p in pts}
    if sorted(sigs.values()) != sorted(target_sigs.values()):
        return None

    basis = _greedy_independent(list(pts), 7)
    if basis is None:
        return None
    coords = [linalg.solve_in_basis(basis, p) for p in pts]

    nodes = 0

    def compatible(candidate, assigned):
        bnew = basis[len(assigned)]
        for i, qi in enumerate(assigned):
            bi = basis[i]
            if diffs[sub(bnew, bi)] != target_diffs.get(sub(candidate, qi), 0):
                return False
        for i, qi in enumerate(assigned):
            bi = basis[i]
            for j, qj in enumerate(assigned):
                if i == j:
                    continue
                bj = basis[j]
                probe = add(sub(bnew, bi), bj)
                image = add(sub(candidate, qi), qj)
                if (probe in pts_set) != (image in target_set):
                    return False
            probe = sub(add(bi, bi), bnew)  # reflection of bnew through bi
            image = sub(add(qi, qi), candidate)
            if (probe in pts_set) != (image in target_set):
                return False
        return True

    def verify(assigned):
        image = set()
        for kappa in coords:
            y = (Fraction(0),) * 7
            for c, q in zip(kappa, assigned):
                if c:
                    y = add(y, scale(c, q))
            image.add(y)
        return image == target_set

    def search(assigned, used):
        nonlocal nodes
        level = len(assigned)
        bnew = basis[level]
        sig = sigs[bnew]
        for candidate in target:
            if candidate in used:
                continue
            if target_sigs[candidate] != sig:
                continue
            nodes += 1
            if nodes > node_cap:
                raise DetectionInconclusive(
                    f"node cap {node_cap} exceeded during matching")
            if not compatible(candidate, assigned):
                continue
            assigned.append(candidate)
            used.add(candidate)
            if len(assigned) == 7:
                if verify(assigned):
                    return list(assigned)
            else:
                result = search(assigned, used)
                if result is not None:
                    return result
            assigned.pop()
            used.remove(candidate)
        return None

    images = search([], set())
    if images is None:
        return None

    # assemble the explicit matrix: coordinate extraction in the chosen
    # basis followed by the assigned images
    d = config.dim
    bt_b = [[dot(bi, bj) for bj in basis] for bi in basis]
    inv = linalg.invert(bt_b)
    # K = (B^T B)^{-1} B^T, shape 7 x d
    k_rows = []
    for r in range(7):
        row = [Fraction(0)] * d
        for c, b in zip(inv[r], basis):
            for idx in range(d):
                row[idx] += c * b[idx]
        k_rows.append(tuple(row))
    matrix = []
    for out_idx in range(7):
        row = [Fraction(0)] * d
        for k in range(7):
            coeff = images[k][out_idx]
            if coeff:
                for idx in range(d):
                    row[idx] += coeff * k_rows[k][idx]
        matrix.append(tuple(row))
    matrix = tuple(matrix)
    translation = neg(mat_vec(matrix, center))
    return AffineMap(matrix, translation)
