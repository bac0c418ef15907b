"""Block-structured exponent-lattice model of eigenvalue sets.

Multiplicative eigenvalue groups are torsion-free of finite rank, so they
embed in Z^r and every multiplicative identity becomes exact integer
arithmetic.  A point carries one scalar block (always exponent 1 on
construction) and two factor blocks; products of factor sets, the
shifted-difference statistic, scalar-square recovery, the conjugation
involution and the line/difference sets all live here.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .affgeom import Configuration, detect_e7_config, no_three_collinear


class StructureError(ValueError):
    """Input violates the product-decomposition hypotheses."""


@dataclass(frozen=True)
class BlockStructure:
    """Dimensions of the three lattice blocks: scalar (always 1), first
    factor, second factor."""
    d1: int
    d2: int

    @property
    def total_dim(self):
        return 1 + self.d1 + self.d2

    def scalar(self, point):
        return point[0]

    def block1(self, point):
        return tuple(point[1:1 + self.d1])

    def block2(self, point):
        return tuple(point[1 + self.d1:])

    def assemble(self, scalar, b1, b2):
        if len(b1) != self.d1 or len(b2) != self.d2:
            raise StructureError("block lengths do not match the structure")
        return (scalar,) + tuple(b1) + tuple(b2)


@dataclass
class EigenSet:
    """A multiset of lattice points with the declared block structure,
    together with the factor sets it was built from."""
    structure: BlockStructure
    elements: Counter
    factor1: frozenset = field(default_factory=frozenset)
    factor2: frozenset = field(default_factory=frozenset)

    def __len__(self):
        return sum(self.elements.values())

    def support(self):
        return tuple(sorted(self.elements))

    def __contains__(self, p):
        return tuple(p) in self.elements


def build_delta(d1_points, d2_points):
    """Product set with scalar exponent 1 on every element."""
    d1_points = frozenset(tuple(int(x) for x in p) for p in d1_points)
    d2_points = frozenset(tuple(int(x) for x in p) for p in d2_points)
    if not d1_points or not d2_points:
        raise StructureError("both factor sets must be nonempty")
    d1 = len(next(iter(d1_points)))
    d2 = len(next(iter(d2_points)))
    if any(len(p) != d1 for p in d1_points) or any(len(p) != d2 for p in d2_points):
        raise StructureError("factor points have inconsistent dimensions")
    structure = BlockStructure(d1, d2)
    elements = Counter((1,) + a + b for a, b in product(d1_points, d2_points))
    return EigenSet(structure, elements, d1_points, d2_points)


def inverse_closed(points):
    """True iff the set is closed under negation."""
    pts = {tuple(p) for p in points}
    return pts == {tuple(-x for x in p) for p in pts}


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b, strict=True))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b, strict=True))


def t_eta_count(delta, eta):
    """Number of elements d of the multiset (with multiplicity) for which
    eta - d is again an element."""
    eta = tuple(eta)
    if len(eta) != delta.structure.total_dim:
        raise StructureError("eta does not match the lattice dimension")
    return sum(mult for d, mult in delta.elements.items()
               if _sub(eta, d) in delta.elements)


def sum_set(delta):
    """All pairwise sums of elements (as a set)."""
    support = delta.support()
    return {_add(a, b) for a in support for b in support}


def invariant_level_sets(delta):
    """Partition of the pairwise-sum set by the shifted-difference count."""
    levels = {}
    for eta in sum_set(delta):
        levels.setdefault(t_eta_count(delta, eta), set()).add(eta)
    return levels


def recover_lambda_sq(delta):
    """The unique pairwise sum whose shifted-difference count equals the
    total multiplicity; equals twice the scalar unit for any product set
    with negation-closed factors."""
    total = len(delta)
    hits = [eta for eta in sum_set(delta) if t_eta_count(delta, eta) == total]
    if len(hits) != 1:
        raise StructureError(
            f"expected exactly one full-count sum, found {len(hits)}; "
            "the factor sets are not negation-closed")
    return hits[0]


def weil_involution(delta, x):
    """Identity on the scalar block, negation on both factor blocks."""
    x = tuple(x)
    s = delta.structure
    if len(x) != s.total_dim:
        raise StructureError("point does not match the lattice dimension")
    return s.assemble(s.scalar(x),
                      tuple(-v for v in s.block1(x)),
                      tuple(-v for v in s.block2(x)))


def line_set(delta):
    """All ordered triples of distinct elements (d1, mid, d2) with
    2*mid = d1 + d2, multiplicities ignored."""
    support = delta.support()
    members = set(support)
    out = []
    for d1 in support:
        for mid in support:
            if mid == d1:
                continue
            d2 = _sub(tuple(2 * x for x in mid), d1)
            if d2 != d1 and d2 != mid and d2 in members:
                out.append((d1, mid, d2))
    return out


def b_set(delta):
    """Differences endpoint-minus-midpoint over all line triples; closed
    under negation by construction."""
    out = set()
    for d1, mid, d2 in line_set(delta):
        out.add(_sub(d1, mid))
        out.add(_sub(d2, mid))
    return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violations: tuple
    detail: str = ""


def fiber_constancy_check(delta):
    """Every line triple must project to a single point of the second
    factor block.

    Precondition: the second factor has no collinear triples (it is a
    cube-vertex set); violated preconditions are rejected with a witness.
    """
    s = delta.structure
    if s.d2 > 0:
        cfg2 = Configuration(delta.factor2)
        ok2, witness = no_three_collinear(cfg2)
        if not ok2:
            raise StructureError(
                f"second factor contains a collinear triple: {witness}")
    violations = []
    for d1, mid, d2 in line_set(delta):
        p = s.block2(mid)
        if s.block2(d1) != p or s.block2(d2) != p:
            violations.append((d1, mid, d2))
    return Verdict(not violations, tuple(violations))


def _fibers(delta):
    """Group the support by second-block value."""
    s = delta.structure
    fibers = {}
    for p in delta.support():
        fibers.setdefault(s.block2(p), []).append(p)
    return fibers


def e7_fiber_projection_check(delta):
    """Detect 56-point weight-system configurations on the canonical
    second-block fibers and check the projection and difference-set claims.

    For every fiber carrying such a configuration: the second-block
    projection is a single point by construction of the fiber, and the
    set of pairwise differences (the zero element included) must vanish
    on both the scalar and second-factor blocks.  A structural error is
    raised if no fiber carries the configuration.
    """
    s = delta.structure
    fibers = _fibers(delta)
    found = []
    violations = []
    for b2, members in sorted(fibers.items()):
        pts = [s.block1(p) for p in members]
        if len(set(pts)) != len(pts):
            violations.append(("duplicate-projection", b2))
            continue
        if len(pts) != 56:
            continue
        mapping = detect_e7_config(Configuration(pts))
        if mapping is None:
            continue
        diffs = {(0,) + _sub(a, b) + (0,) * s.d2
                 for a in pts for b in pts}
        for d in diffs:
            if s.scalar(d) != 0 or any(v != 0 for v in s.block2(d)):
                violations.append(("difference-off-block", d))
        if not inverse_closed(diffs) or (0,) * s.total_dim not in diffs:
            violations.append(("difference-set-shape", b2))
        found.append((b2, mapping, frozenset(diffs)))
    if not found:
        raise StructureError("no weight-system configuration found on any fiber")
    detail = f"{len(found)} fiber configuration(s) detected"
    return Verdict(not violations, tuple(violations), detail), found
