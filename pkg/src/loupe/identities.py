"""Decision procedures for quantified loop identities and structural properties.

Each universally quantified law is decided by exhaustive scan over tuples of
the law's arity; a failing Verdict carries the first counterexample in
lexicographic order, and re-evaluating that witness through the table must
reproduce the violation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import chain, combinations

from . import substructures
from .config import DEFAULT_CAPS, Caps
from .core import (
    FiniteLoop,
    generated_subloop,
    is_commutative_subset,
    is_subgroup,
    subloop_as_loop,
    two_sided_inverse,
)
from .errors import CapExceeded, NotIPLoop, SizeCapExceeded


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision: ``holds`` plus an optional witness tuple.

    Universal checks attach a counterexample exactly when they fail;
    existential checks attach the satisfying element(s) when they succeed.
    """

    holds: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


class Law(enum.Enum):
    COMMUTATIVE = "commutative"
    ASSOCIATIVE = "associative"
    MOUFANG1 = "moufang1"
    MOUFANG2 = "moufang2"
    MOUFANG3 = "moufang3"
    BOL = "bol"
    BRUCK = "bruck"
    WIP = "wip"
    LEFT_ALTERNATIVE = "left_alternative"
    RIGHT_ALTERNATIVE = "right_alternative"
    FLEXIBLE = "flexible"
    SEMI_ALTERNATIVE = "semi_alternative"
    JORDAN = "jordan"
    STEINER = "steiner"
    IP = "ip"


def _assoc(L, x, y, z):
    lhs = L.table[L.table[x][y]][z]
    rhs = L.table[x][L.table[y][z]]
    return L.ldiv(rhs, lhs)


_BINARY_LAWS = {
    Law.COMMUTATIVE: lambda t, x, y: t[x][y] == t[y][x],
    Law.LEFT_ALTERNATIVE: lambda t, x, y: t[t[x][x]][y] == t[x][t[x][y]],
    Law.RIGHT_ALTERNATIVE: lambda t, x, y: t[t[x][y]][y] == t[x][t[y][y]],
    Law.FLEXIBLE: lambda t, x, y: t[t[x][y]][x] == t[x][t[y][x]],
}

_TERNARY_LAWS = {
    Law.ASSOCIATIVE: lambda t, x, y, z: t[t[x][y]][z] == t[x][t[y][z]],
    Law.MOUFANG1: lambda t, x, y, z: t[t[x][y]][t[z][x]] == t[t[x][t[y][z]]][x],
    Law.MOUFANG2: lambda t, x, y, z: t[t[t[x][y]][z]][y] == t[x][t[y][t[z][y]]],
    Law.MOUFANG3: lambda t, x, y, z: t[x][t[y][t[x][z]]] == t[t[t[x][y]][x]][z],
    Law.BOL: lambda t, x, y, z: t[t[t[x][y]][z]][y] == t[x][t[t[y][z]][y]],
}


def check_law(L: FiniteLoop, law: Law) -> Verdict:
    """Decide a quantified identity; first counterexample in lexicographic order."""
    t = L.table
    size = L.size
    if law in _BINARY_LAWS:
        pred = _BINARY_LAWS[law]
        for x in range(size):
            for y in range(size):
                if not pred(t, x, y):
                    return Verdict(False, (x, y))
        return Verdict(True)
    if law in _TERNARY_LAWS:
        pred = _TERNARY_LAWS[law]
        for x in range(size):
            for y in range(size):
                for z in range(size):
                    if not pred(t, x, y, z):
                        return Verdict(False, (x, y, z))
        return Verdict(True)
    if law is Law.WIP:
        # (xy)z = e pins z per (x, y), so scanning pairs visits the first
        # violating triple in the same order as the cubic scan would
        for x in range(size):
            for y in range(size):
                z = L.ldiv(t[x][y], 0)
                if t[x][t[y][z]] != 0:
                    return Verdict(False, (x, y, z))
        return Verdict(True)
    if law is Law.SEMI_ALTERNATIVE:
        for x in range(size):
            for y in range(size):
                for z in range(size):
                    if _assoc(L, x, y, z) != _assoc(L, y, z, x):
                        return Verdict(False, (x, y, z))
        return Verdict(True)
    if law is Law.JORDAN:
        # commutativity plus the squared-product law a^2(ba) = (a^2 b)a
        for a in range(size):
            for b in range(size):
                if t[a][b] != t[b][a]:
                    return Verdict(False, (a, b), "commutativity fails")
                aa = t[a][a]
                if t[aa][t[b][a]] != t[t[aa][b]][a]:
                    return Verdict(False, (a, b), "square law fails")
        return Verdict(True)
    if law is Law.STEINER:
        for x in range(size):
            if t[x][x] != 0:
                return Verdict(False, (x,), "not involutory")
        for x in range(size):
            for y in range(size):
                if t[x][y] != t[y][x]:
                    return Verdict(False, (x, y), "commutativity fails")
                if t[x][t[x][y]] != y:
                    return Verdict(False, (x, y), "x(xy) = y fails")
        return Verdict(True)
    if law is Law.IP:
        inv = []
        for x in range(size):
            ix = two_sided_inverse(L, x)
            if ix is None:
                return Verdict(False, (x,), "no two-sided inverse")
            inv.append(ix)
        for x in range(size):
            for y in range(size):
                if t[inv[x]][t[x][y]] != y or t[t[y][x]][inv[x]] != y:
                    return Verdict(False, (x, y))
        return Verdict(True)
    if law is Law.BRUCK:
        inv = []
        for x in range(size):
            ix = two_sided_inverse(L, x)
            if ix is None:
                return Verdict(False, (x,), "no two-sided inverse")
            inv.append(ix)
        for x in range(size):
            for y in range(size):
                if inv[t[x][y]] != t[inv[x]][inv[y]]:
                    return Verdict(False, (x, y), "(xy)^-1 = x^-1 y^-1 fails")
        for x in range(size):
            for y in range(size):
                for z in range(size):
                    if t[t[x][t[y][x]]][z] != t[x][t[y][t[x][z]]]:
                        return Verdict(False, (x, y, z), "x(yx)z = x(y(xz)) fails")
        return Verdict(True)
    raise ValueError(f"unknown law {law}")


class StrictForm(enum.Enum):
    STRICT_NON_COMMUTATIVE = "strict_non_commutative"
    STRICT_NON_LEFT_ALT = "strict_non_left_alt"
    STRICT_NON_RIGHT_ALT = "strict_non_right_alt"
    STRICT_NON_ALTERNATIVE = "strict_non_alternative"


def check_strict(L: FiniteLoop, form: StrictForm) -> Verdict:
    """Strict negative forms, quantified over distinct non-identity pairs."""
    t = L.table
    pairs = [
        (x, y)
        for x in range(1, L.size)
        for y in range(1, L.size)
        if x != y
    ]
    if form is StrictForm.STRICT_NON_COMMUTATIVE:
        for x, y in pairs:
            if t[x][y] == t[y][x]:
                return Verdict(False, (x, y))
        return Verdict(True)
    if form is StrictForm.STRICT_NON_LEFT_ALT:
        for x, y in pairs:
            if t[t[x][x]][y] == t[x][t[x][y]]:
                return Verdict(False, (x, y))
        return Verdict(True)
    if form is StrictForm.STRICT_NON_RIGHT_ALT:
        for x, y in pairs:
            if t[t[x][y]][y] == t[x][t[y][y]]:
                return Verdict(False, (x, y))
        return Verdict(True)
    if form is StrictForm.STRICT_NON_ALTERNATIVE:
        left = check_strict(L, StrictForm.STRICT_NON_LEFT_ALT)
        if not left.holds:
            return Verdict(False, left.witness, "left alternative law holds somewhere")
        right = check_strict(L, StrictForm.STRICT_NON_RIGHT_ALT)
        if not right.holds:
            return Verdict(False, right.witness, "right alternative law holds somewhere")
        return Verdict(True)
    raise ValueError(f"unknown strict form {form}")


def is_power_associative(L: FiniteLoop) -> Verdict:
    """Every element generates an associative commutative subloop (a cyclic group)."""
    for x in range(L.size):
        gen = generated_subloop(L, (x,))
        if not is_subgroup(L, gen) or not is_commutative_subset(L, gen.elements):
            return Verdict(False, (x,))
    return Verdict(True)


def is_diassociative(L: FiniteLoop) -> Verdict:
    """Every pair of elements generates an associative subloop."""
    for x in range(L.size):
        for y in range(x, L.size):
            gen = generated_subloop(L, (x, y))
            if not is_subgroup(L, gen):
                return Verdict(False, (x, y))
    return Verdict(True)


class SpecialKind(enum.Enum):
    CA_LOOP = "ca_loop"
    SEMI_RIGHT_COMMUTATIVE = "semi_right_commutative"
    STRONGLY_SEMI_RIGHT_COMMUTATIVE = "strongly_semi_right_commutative"
    INNER_COMMUTATIVE = "inner_commutative"
    STRICTLY_INNER_COMMUTATIVE = "strictly_inner_commutative"
    PSEUDO_COMMUTATIVE = "pseudo_commutative"
    STRONGLY_PSEUDO_COMMUTATIVE = "strongly_pseudo_commutative"
    PSEUDO_ASSOCIATIVE = "pseudo_associative"
    STRONGLY_PSEUDO_ASSOCIATIVE = "strongly_pseudo_associative"
    HAMILTONIAN = "hamiltonian"
    SIMPLE = "simple"


PSEUDO_COMMUTATIVE_VARIANTS = ("ax.b=bx.a", "ax.b=b.xa", "a.xb=bx.a", "a.xb=b.xa")


def _is_cyclic_group_subset(L, S) -> bool:
    if not is_subgroup(L, S):
        return False
    sub = subloop_as_loop(L, S)
    for g in range(sub.size):
        seen = {0}
        cur = g
        while cur != 0:
            seen.add(cur)
            cur = sub.table[cur][g]
        if len(seen) == sub.size:
            return True
    return sub.size == 1


def special_commutativity(
    L: FiniteLoop,
    kind: SpecialKind,
    cap: Caps = DEFAULT_CAPS,
    pseudo_variant: str = "ax.b=bx.a",
) -> Verdict:
    """Decide the order-sensitive commutativity/associativity properties.

    ``pseudo_variant`` selects which bracketing of the pseudo-commutative law
    is enforced; the default is the (ax)b = (bx)a reading and the remaining
    three are alternative interpretations of the same loosely stated law.
    """
    t = L.table
    size = L.size
    if kind is SpecialKind.CA_LOOP:
        for x in range(size):
            if all(
                t[t[a][x]][b] == t[t[x][b]][a] and t[a][t[x][b]] == t[b][t[a][x]]
                for a in range(size)
                for b in range(size)
            ):
                return Verdict(True, (x,))
        return Verdict(False)
    if kind is SpecialKind.SEMI_RIGHT_COMMUTATIVE:
        for a in range(size):
            for b in range(size):
                ab = t[a][b]
                ba = t[b][a]
                if not any(
                    ab == t[c][ba] or ab == t[t[c][b]][a] for c in range(size)
                ):
                    return Verdict(False, (a, b))
        return Verdict(True)
    if kind is SpecialKind.STRONGLY_SEMI_RIGHT_COMMUTATIVE:
        # triples range over distinct elements: a repeated entry (x, x, x)
        # with x*x = e makes all three disjuncts unsatisfiable
        def clause(p, q, r):
            pq, qp = t[p][q], t[q][p]
            return pq == t[r][qp] or pq == t[t[r][q]][p]

        for x in range(size):
            for y in range(size):
                for z in range(size):
                    if len({x, y, z}) < 3:
                        continue
                    if not (clause(x, y, z) or clause(y, z, x) or clause(z, x, y)):
                        return Verdict(False, (x, y, z))
        return Verdict(True)
    if kind in (SpecialKind.INNER_COMMUTATIVE, SpecialKind.STRICTLY_INNER_COMMUTATIVE):
        if check_law(L, Law.COMMUTATIVE).holds:
            return Verdict(False, None, "loop itself is commutative")
        census = substructures.all_subloops(L, cap)
        for S in census.subloops:
            if not S.is_proper():
                continue
            if not is_commutative_subset(L, S.elements):
                return Verdict(False, S.elements, "non-commutative proper subloop")
            if (
                kind is SpecialKind.STRICTLY_INNER_COMMUTATIVE
                and S.order >= 2
                and _is_cyclic_group_subset(L, S)
            ):
                return Verdict(False, S.elements, "proper subloop is a cyclic group")
        return Verdict(True)
    if kind is SpecialKind.PSEUDO_COMMUTATIVE:
        if pseudo_variant not in PSEUDO_COMMUTATIVE_VARIANTS:
            raise ValueError(f"unknown pseudo variant {pseudo_variant!r}")
        lhs_first = pseudo_variant.startswith("ax.b")
        rhs_first = pseudo_variant.endswith("bx.a")
        for a in range(size):
            for b in range(size):
                if t[a][b] != t[b][a]:
                    continue
                for x in range(size):
                    lhs = t[t[a][x]][b] if lhs_first else t[a][t[x][b]]
                    rhs = t[t[b][x]][a] if rhs_first else t[b][t[x][a]]
                    if lhs != rhs:
                        return Verdict(False, (a, b, x))
        return Verdict(True)
    if kind is SpecialKind.STRONGLY_PSEUDO_COMMUTATIVE:
        for a in range(size):
            for b in range(size):
                if a == b:
                    continue
                for x in range(size):
                    left = {t[t[a][x]][b], t[a][t[x][b]]}
                    right = {t[t[b][x]][a], t[b][t[x][a]]}
                    if not left & right:
                        return Verdict(False, (a, b, x))
        return Verdict(True)
    if kind in (SpecialKind.PSEUDO_ASSOCIATIVE, SpecialKind.STRONGLY_PSEUDO_ASSOCIATIVE):
        # strong form drops the requirement that the triple associates
        for a in range(size):
            for b in range(size):
                ab = t[a][b]
                for c in range(size):
                    if (
                        kind is SpecialKind.PSEUDO_ASSOCIATIVE
                        and t[ab][c] != t[a][t[b][c]]
                    ):
                        continue
                    bc = t[b][c]
                    for x in range(size):
                        if t[ab][t[x][c]] != t[t[a][x]][bc]:
                            return Verdict(False, (a, b, c, x))
        return Verdict(True)
    if kind is SpecialKind.HAMILTONIAN:
        census = substructures.all_subloops(L, cap)
        for S, normal in zip(census.subloops, census.normal_flags):
            if not normal:
                return Verdict(False, S.elements)
        return Verdict(True)
    if kind is SpecialKind.SIMPLE:
        census = substructures.all_subloops(L, cap)
        for S, normal in zip(census.subloops, census.normal_flags):
            if normal and not S.is_trivial() and S.is_proper():
                return Verdict(False, S.elements, "non-trivial normal subloop")
        return Verdict(True)
    raise ValueError(f"unknown kind {kind}")


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # apply q first, then p
    return tuple(p[v] for v in q)


def multiplication_group(L: FiniteLoop, cap: int = DEFAULT_CAPS.mlt) -> list[tuple[int, ...]]:
    """Closure of all left/right translations under composition, sorted.

    Raises CapExceeded before returning anything partial.
    """
    size = L.size
    gens = []
    for x in range(size):
        gens.append(tuple(L.table[x]))
        gens.append(tuple(L.table[y][x] for y in range(size)))
    seen = set(gens)
    seen.add(tuple(range(size)))
    frontier = sorted(seen)
    while frontier:
        fresh = []
        for p in frontier:
            for g in gens:
                q = _compose(p, g)
                if q not in seen:
                    seen.add(q)
                    fresh.append(q)
                    if len(seen) > cap:
                        raise CapExceeded("multiplication group", len(seen), cap)
        frontier = sorted(fresh)
    return sorted(seen)


def inner_mapping_group(L: FiniteLoop, cap: int = DEFAULT_CAPS.mlt) -> list[tuple[int, ...]]:
    """Members of the multiplication group fixing the identity."""
    return [p for p in multiplication_group(L, cap) if p[0] == 0]


def is_a_loop(L: FiniteLoop, cap: int = DEFAULT_CAPS.mlt) -> Verdict:
    """Every inner mapping is an automorphism of the loop."""
    t = L.table
    for theta in inner_mapping_group(L, cap):
        for x in range(L.size):
            for y in range(L.size):
                if theta[t[x][y]] != t[theta[x]][theta[y]]:
                    return Verdict(False, (theta, x, y))
    return Verdict(True)


def is_arif(L: FiniteLoop, cap: int = DEFAULT_CAPS.mlt) -> Verdict:
    """Inverse-property loop whose inner mappings commute with inversion."""
    ip = check_law(L, Law.IP)
    if not ip.holds:
        raise NotIPLoop(ip.witness)
    j = tuple(two_sided_inverse(L, x) for x in range(L.size))
    for theta in inner_mapping_group(L, cap):
        if _compose(j, _compose(theta, j)) != theta:
            return Verdict(False, (theta,))
    return Verdict(True)


def _nonempty_subsets(size: int, max_size: int):
    elems = range(size)
    return chain.from_iterable(combinations(elems, r) for r in range(1, max_size + 1))


def up_tup_check(L: FiniteLoop, mode: str, max_subset_size: int = DEFAULT_CAPS.subset) -> Verdict:
    """Unique-product scans over bounded subset pairs.

    ``mode`` is "up" (at least one uniquely represented product per pair) or
    "tup" (at least two, over pairs with |A| + |B| > 2).
    """
    if mode not in ("up", "tup"):
        raise ValueError("mode must be 'up' or 'tup'")
    subset_count = sum(
        1 for _ in _nonempty_subsets(L.size, min(max_subset_size, L.size))
    )
    if subset_count * subset_count > 4_000_000:
        raise SizeCapExceeded("subset pairs", subset_count * subset_count, 4_000_000)
    subsets = list(_nonempty_subsets(L.size, min(max_subset_size, L.size)))
    need = 1 if mode == "up" else 2
    for A in subsets:
        for B in subsets:
            if mode == "tup" and len(A) + len(B) <= 2:
                continue
            reps: dict[int, int] = {}
            for a in A:
                for b in B:
                    v = L.table[a][b]
                    reps[v] = reps.get(v, 0) + 1
            unique = sum(1 for v in reps.values() if v == 1)
            if unique < need:
                return Verdict(False, (A, B))
    return Verdict(True)
