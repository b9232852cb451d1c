"""Quadratic transforms and base-point constellations of monomial ideals.

Chart ``i`` of the blow-up of the origin has coordinates x_i and
y_j = x_j / x_i (j != i).  A monomial x^a becomes x_i^{|a|} y^{a'}, and the
transform divides by x_i^{o(I)}, so exponent ``a`` maps to ``|a| - o(I)`` in
slot ``i`` and keeps ``a_j`` elsewhere.

Base points of a monomial ideal are torus-fixed, so every base point on
an exceptional divisor is the origin of some chart: the transform is
again a monomial ideal, and its zero set on the divisor {x_i = 0} is a
union of coordinate subspaces, which is finite only if it is the origin.
The recursion therefore visits chart origins only and stops with
:class:`NotFinitelySupported` as soon as a transform is neither the unit
ideal nor primary to the chart's maximal ideal.

Chart indices are 0-based throughout.
"""

from dataclasses import dataclass, field

from .errors import DepthExceeded, NotFinitelySupported, NotMPrimary, UnitIdeal
from .monomial import MonomialIdeal, is_mprimary, order

DEFAULT_MAX_DEPTH = 64


@dataclass(frozen=True)
class ChartTransform:
    chart: int
    ideal: MonomialIdeal

    @property
    def is_unit(self):
        return self.ideal.is_unit


def chart_transform(I, i):
    """Transform of I in chart i (x_i exceptional)."""
    if not 0 <= i < I.dim:
        raise IndexError(f"chart {i} out of range for dimension {I.dim}")
    o = order(I)
    gens = []
    for g in I.gens:
        e = list(g)
        e[i] = sum(g) - o
        gens.append(tuple(e))
    return MonomialIdeal(gens, I.dim)


def all_chart_transforms(I):
    return [ChartTransform(i, chart_transform(I, i)) for i in range(I.dim)]


def _missing_direction(J):
    pure = J.pure_powers()
    return next(j for j, p in enumerate(pure) if p is None)


@dataclass
class ConstellationNode:
    path: tuple
    order: int
    local_ideal: MonomialIdeal
    children: list = field(default_factory=list)
    residue_degree: int = 1

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def to_dict(self):
        return {
            "path": list(self.path),
            "order": self.order,
            "residue_degree": self.residue_degree,
            "generators": [list(g) for g in self.local_ideal.gens],
            "children": [c.to_dict() for c in self.children],
        }


@dataclass
class Constellation:
    root: ConstellationNode
    dim: int

    @property
    def node_count(self):
        return sum(1 for _ in self.root.walk())

    def nodes(self):
        return list(self.root.walk())

    def to_dict(self):
        return {"dim": self.dim, "node_count": self.node_count, "root": self.root.to_dict()}


def _build(J, path, max_depth):
    if len(path) > max_depth:
        raise DepthExceeded(f"constellation deeper than {max_depth} along {list(path)}")
    node = ConstellationNode(path=path, order=order(J), local_ideal=J)
    for i in range(J.dim):
        T = chart_transform(J, i)
        if T.is_unit:
            continue
        if not is_mprimary(T):
            raise NotFinitelySupported(path + (i,), _missing_direction(T), T)
        node.children.append(_build(T, path + (i,), max_depth))
    return node


def constellation(I, max_depth=DEFAULT_MAX_DEPTH):
    """Tree of base points of the M-primary monomial ideal I."""
    if I.is_unit:
        raise UnitIdeal("the unit ideal has no base points")
    if not is_mprimary(I):
        raise NotMPrimary("constellations need an M-primary ideal")
    return Constellation(_build(I, (), max_depth), I.dim)


def point_basis(c):
    """Orders of all base points, sorted descending."""
    return sorted((n.order for n in c.root.walk()), reverse=True)


@dataclass(frozen=True)
class SupportCheck:
    finitely_supported: bool
    path: tuple = None
    direction: int = None


def is_finitely_supported(I, max_depth=DEFAULT_MAX_DEPTH):
    try:
        constellation(I, max_depth)
    except NotFinitelySupported as exc:
        return SupportCheck(False, exc.path, exc.direction)
    return SupportCheck(True)


def compare_closure_point_basis(I):
    """Point bases of I and of its closure, side by side."""
    from .newton import closure

    own = point_basis(constellation(I))
    closed = point_basis(constellation(closure(I)))
    return {"ideal": own, "closure": closed, "agree": own == closed}
