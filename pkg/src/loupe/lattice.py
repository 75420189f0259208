"""Inclusion lattices of subloop families.

A family of certified subloops, together with the trivial subloop and the
whole loop, is closed under pairwise intersection; joins are then the least
family member containing the union.  Modularity and distributivity are
decided both by the defining equations and by searching for the two
forbidden five-element sublattices (pentagon and diamond).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .config import DEFAULT_CAPS, Caps
from .core import FiniteLoop, SubLoop
from .errors import CapExceeded, ClosureBlowup
from .identities import Verdict


@dataclass(frozen=True)
class InclusionLattice:
    """Nodes (element tuples) ordered by inclusion, with meet/join tables."""

    labels: tuple[str, ...]
    nodes: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.nodes)

    def leq(self, i: int, j: int) -> bool:
        return self.meet[i][j] == i

    def node_name(self, i: int) -> str:
        members = self.nodes[i]
        return "{" + ",".join(self.labels[x] for x in members) + "}"

    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges (i, j) with i covered by j, in node order."""
        out = []
        for i in range(self.size):
            for j in range(self.size):
                if i == j or not self.leq(i, j):
                    continue
                if not any(
                    k != i and k != j and self.leq(i, k) and self.leq(k, j)
                    for k in range(self.size)
                ):
                    out.append((i, j))
        return out


def build_lattice(
    L: FiniteLoop, family, caps: Caps = DEFAULT_CAPS
) -> InclusionLattice:
    """Close a family of subloops into a bounded inclusion lattice.

    The node set is the family plus bottom {e} and top L, closed under
    pairwise intersection; the join of two nodes is the intersection of all
    their common upper bounds, which the meet closure guarantees is itself a
    node.
    """
    nodes: set[frozenset[int]] = {frozenset({0}), frozenset(range(L.size))}
    for S in family:
        nodes.add(S.as_set() if isinstance(S, SubLoop) else frozenset(S))
    changed = True
    while changed:
        changed = False
        for a, b in combinations(sorted(nodes, key=sorted), 2):
            cap_set = a & b
            if cap_set not in nodes:
                nodes.add(cap_set)
                changed = True
                if len(nodes) > caps.lattice_build:
                    raise ClosureBlowup("lattice nodes", len(nodes), caps.lattice_build)
    ordered = sorted(nodes, key=lambda s: (len(s), sorted(s)))
    index = {s: i for i, s in enumerate(ordered)}
    n = len(ordered)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i, a in enumerate(ordered):
        for j, b in enumerate(ordered):
            meet[i][j] = index[a & b]
            union = a | b
            best = frozenset(range(L.size))
            for c in ordered:
                if union <= c and len(c) < len(best):
                    best = c
            join[i][j] = index[best]
    return InclusionLattice(
        labels=L.labels,
        nodes=tuple(tuple(sorted(s)) for s in ordered),
        meet=tuple(tuple(r) for r in meet),
        join=tuple(tuple(r) for r in join),
    )


def check_modular(lat: InclusionLattice) -> Verdict:
    """x <= z implies x v (y ^ z) = (x v y) ^ z; witness = violating triple."""
    n = lat.size
    for x in range(n):
        for z in range(n):
            if not lat.leq(x, z):
                continue
            for y in range(n):
                if lat.join[x][lat.meet[y][z]] != lat.meet[lat.join[x][y]][z]:
                    return Verdict(False, (x, y, z))
    return Verdict(True)


def _is_sublattice(lat: InclusionLattice, subset: tuple[int, ...]) -> bool:
    inside = set(subset)
    return all(
        lat.meet[a][b] in inside and lat.join[a][b] in inside
        for a in subset
        for b in subset
    )


def _shape(lat: InclusionLattice, subset: tuple[int, ...]) -> str | None:
    """Classify a 5-element sublattice as pentagon or diamond, else None."""
    inside = list(subset)
    bot = min(inside, key=lambda i: sum(lat.leq(j, i) for j in inside))
    top = max(inside, key=lambda i: sum(lat.leq(j, i) for j in inside))
    for i in inside:
        if not (lat.leq(bot, i) and lat.leq(i, top)):
            return None
    mids = [i for i in inside if i != bot and i != top]
    if len(mids) != 3:
        return None
    rel = [
        (a, b)
        for a in mids
        for b in mids
        if a != b and lat.leq(a, b)
    ]
    for a, b in rel:
        c = next(m for m in mids if m not in (a, b))
        if (
            lat.meet[a][c] == bot
            and lat.meet[b][c] == bot
            and lat.join[a][c] == top
            and lat.join[b][c] == top
        ):
            return "pentagon"
        return None
    if all(
        lat.meet[a][b] == bot and lat.join[a][b] == top
        for a in mids
        for b in mids
        if a != b
    ):
        return "diamond"
    return None


def find_forbidden_sublattice(
    lat: InclusionLattice, shape: str, caps: Caps = DEFAULT_CAPS
) -> tuple[int, ...] | None:
    """First induced 5-element sublattice of the given shape, or None."""
    if shape not in ("pentagon", "diamond"):
        raise ValueError("shape must be 'pentagon' or 'diamond'")
    if lat.size > caps.lattice_nodes:
        raise CapExceeded("lattice size", lat.size, caps.lattice_nodes)
    for subset in combinations(range(lat.size), 5):
        if _is_sublattice(lat, subset) and _shape(lat, subset) == shape:
            return subset
    return None


def check_distributive(lat: InclusionLattice, caps: Caps = DEFAULT_CAPS) -> Verdict:
    """Modular with no diamond sublattice; witness = triple or embedded diamond."""
    modular = check_modular(lat)
    if not modular.holds:
        return Verdict(False, modular.witness, "not modular")
    diamond = find_forbidden_sublattice(lat, "diamond", caps)
    if diamond is not None:
        return Verdict(False, diamond, "diamond sublattice")
    return Verdict(True)


def export_dot(lat: InclusionLattice) -> str:
    """Hasse diagram as a DOT digraph, edges pointing up the order."""
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i in range(lat.size):
        lines.append(f'  n{i} [label="{lat.node_name(i)}"];')
    for i, j in lat.covers():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines)


def lattice_summary(lat: InclusionLattice, caps: Caps = DEFAULT_CAPS) -> dict:
    """JSON-friendly dump: nodes, covering pairs, modular/distributive verdicts.

    Distributivity reads null when the lattice exceeds the sublattice-search cap.
    """
    modular = check_modular(lat)
    try:
        distributive = check_distributive(lat, caps).holds
    except CapExceeded:
        distributive = None
    return {
        "nodes": [lat.node_name(i) for i in range(lat.size)],
        "covers": lat.covers(),
        "modular": modular.holds,
        "distributive": distributive,
    }
