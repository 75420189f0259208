"""Smarandache structure analysis: subgroup-bearing loops and their relatives.

An S-loop is a loop containing a proper subset that is a group under the
induced product (subgroups of size one are ignored: the trivial subgroup
would make every loop an S-loop).  An S-subloop is a proper subloop that is
itself an S-loop but not a group.  Most notions here relativize a classical
construction (commutator, nucleus, Lagrange/Sylow counting, representations,
cosets) to such a subset.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .config import DEFAULT_CAPS, Caps
from .core import (
    FiniteLoop,
    SubLoop,
    associator,
    certify_subloop,
    commutator,
    element_order,
    generated_subloop,
    is_commutative_subset,
    is_subgroup,
    subloop_as_loop,
)
from .errors import (
    NotASubgroup,
    NotNormal,
    NotPrime,
    QNotInSubloop,
    SearchCapExceeded,
)
from .identities import Law, Verdict, check_law, is_diassociative, is_power_associative
from .substructures import SubloopCensus, all_subloops, first_normalizer, second_normalizer


def contains_proper_subgroup(L: FiniteLoop, A: SubLoop) -> bool:
    """True when A has a subgroup of size >= 2 that is a proper subset of A.

    Any such subgroup contains a cyclic one of size >= 2, so scanning the
    closures of single elements of A decides the question.
    """
    for x in A.elements:
        if x == 0:
            continue
        gen = generated_subloop(L, (x,))
        if 2 <= gen.order < A.order and is_subgroup(L, gen):
            return True
    return False


def is_s_subloop(L: FiniteLoop, A: SubLoop) -> bool:
    """Proper subloop, not itself a group, containing a subgroup of size >= 2."""
    if not A.is_proper() or A.order < 2:
        return False
    if is_subgroup(L, A):
        return False
    return any(
        is_subgroup(L, generated_subloop(L, (x,))) for x in A.elements if x != 0
    )


def is_s_loop(L: FiniteLoop) -> Verdict:
    """Does some proper subset of size >= 2 form a group?

    Scans cyclic closures only: any subgroup of size >= 2 contains a cyclic
    subgroup of size >= 2, so the smallest witness is found this way.
    """
    best: SubLoop | None = None
    for x in range(1, L.size):
        gen = generated_subloop(L, (x,))
        if gen.order >= L.size or gen.order < 2:
            continue
        if is_subgroup(L, gen):
            if best is None or (gen.order, gen.elements) < (best.order, best.elements):
                best = gen
    if best is None:
        return Verdict(False)
    return Verdict(True, best.elements)


def is_normal_subgroup(L: FiniteLoop, A: SubLoop) -> bool:
    """mA = Am for every loop element m (the level-II normality condition)."""
    t = L.table
    elems = A.elements
    return all(
        {t[m][a] for a in elems} == {t[a][m] for a in elems} for m in range(L.size)
    )


@dataclass(frozen=True)
class SSubstructures:
    s_subloops: tuple[SubLoop, ...]
    s_normal_subloops: tuple[SubLoop, ...]
    s_simple: bool
    s_subgroup_loop: bool


def s_substructures(
    L: FiniteLoop, caps: Caps = DEFAULT_CAPS, census: SubloopCensus | None = None
) -> SSubstructures:
    """S-subloops and S-normal subloops from the census.

    An S-normal subloop is a nontrivial proper normal subloop containing a
    subgroup of size >= 2; S-simple means none exists.  A subgroup loop is an
    S-loop whose proper nontrivial subloops are all groups.
    """
    census = census or all_subloops(L, caps)
    s_subs = tuple(S for S in census.subloops if is_s_subloop(L, S))
    s_normal = tuple(
        S
        for S, normal in zip(census.subloops, census.normal_flags)
        if normal
        and S.is_proper()
        and not S.is_trivial()
        and contains_proper_subgroup(L, S)
    )
    subgroup_loop = bool(is_s_loop(L)) and all(
        is_subgroup(L, S) for S in census.proper_nontrivial()
    )
    return SSubstructures(
        s_subloops=s_subs,
        s_normal_subloops=s_normal,
        s_simple=not s_normal,
        s_subgroup_loop=subgroup_loop,
    )


def _prime_factors(n: int) -> list[int]:
    out, d, left = [], 2, n
    while d * d <= left:
        if left % d == 0:
            out.append(d)
            while left % d == 0:
                left //= d
        d += 1
    if left > 1:
        out.append(left)
    return out


def satisfies_sylow_criteria(L: FiniteLoop) -> Verdict:
    """For every prime p dividing |L|, a subgroup of p-power order exists.

    A subgroup of order p^k contains an element of order p (Cauchy inside the
    group), and conversely an element of order p spans a subgroup of order p,
    so scanning cyclic closures decides the criterion without a census.
    """
    orders = {}
    for x in range(1, L.size):
        k = element_order(L, x)
        if k is not None:
            orders.setdefault(k, x)
    for p in _prime_factors(L.size):
        if p not in orders:
            return Verdict(False, (p,), "no element of this prime order")
    return Verdict(True, tuple(sorted(orders.items())))


def is_s_cauchy_loop(L: FiniteLoop) -> Verdict:
    """Every element of every proper subgroup has order dividing |L|."""
    if not is_s_loop(L):
        return Verdict(False, None, "not an S-loop")
    for x in range(1, L.size):
        gen = generated_subloop(L, (x,))
        if gen.order >= L.size or not is_subgroup(L, gen):
            continue
        k = element_order(L, x)
        if k is None or L.size % k != 0:
            return Verdict(False, (x, k))
    return Verdict(True)


_FLAG_NAMES = (
    "s_simple",
    "s_subgroup_loop",
    "s_cauchy",
    "s_lagrange",
    "s_weakly_lagrange",
    "s_pseudo_lagrange",
    "s_weakly_pseudo_lagrange",
    "s_lagrange_criteria",
    "s_sylow_criteria",
    "s_commutative",
    "s_strongly_commutative",
    "s_cyclic",
    "s_strongly_cyclic",
    "s_loop_ii",
    "s_lagrange_criteria_ii",
    "s_sylow_criteria_ii",
)


@dataclass(frozen=True)
class SReport:
    """All boolean Smarandache criteria of a loop plus their witnesses.

    Universal flags that would otherwise be vacuous (nothing to quantify
    over) additionally require the quantified family to be nonempty, so that
    the strong variants imply the plain ones.
    """

    is_s_loop: bool
    witness_subgroup: tuple[int, ...] | None
    s_subloops: tuple[SubLoop, ...]
    s_normal_subloops: tuple[SubLoop, ...]
    flags: dict[str, bool]
    witnesses: dict[str, object] = field(default_factory=dict)


def _is_cyclic_group(L: FiniteLoop, S: SubLoop) -> bool:
    if not is_subgroup(L, S):
        return False
    sub = subloop_as_loop(L, S)
    if sub.size == 1:
        return True
    for g in range(1, sub.size):
        seen = {0}
        cur = g
        while cur != 0:
            seen.add(cur)
            cur = sub.table[cur][g]
        if len(seen) == sub.size:
            return True
    return False


def s_classical_report(L: FiniteLoop, caps: Caps = DEFAULT_CAPS) -> SReport:
    """Compute every classical-style Smarandache flag by exhaustive scan."""
    census = all_subloops(L, caps)
    structures = s_substructures(L, caps, census)
    sl = is_s_loop(L)
    subgroups = [
        S for S in census.subgroups() if S.order >= 2 and S.is_proper()
    ]
    normal_subgroups = [S for S in subgroups if is_normal_subgroup(L, S)]
    size = L.size
    flags: dict[str, bool] = {}
    witnesses: dict[str, object] = {}

    flags["s_simple"] = structures.s_simple
    flags["s_subgroup_loop"] = structures.s_subgroup_loop

    cauchy = is_s_cauchy_loop(L)
    flags["s_cauchy"] = cauchy.holds
    if not cauchy.holds:
        witnesses["s_cauchy"] = cauchy.witness or cauchy.detail

    bad_lagrange = next((S for S in subgroups if size % S.order != 0), None)
    flags["s_lagrange"] = bool(subgroups) and bad_lagrange is None
    if bad_lagrange is not None:
        witnesses["s_lagrange"] = bad_lagrange.elements
    flags["s_weakly_lagrange"] = any(size % S.order == 0 for S in subgroups)

    s_subs = structures.s_subloops
    bad_pseudo = next((S for S in s_subs if size % S.order != 0), None)
    flags["s_pseudo_lagrange"] = bool(s_subs) and bad_pseudo is None
    if bad_pseudo is not None:
        witnesses["s_pseudo_lagrange"] = bad_pseudo.elements
    flags["s_weakly_pseudo_lagrange"] = any(size % S.order == 0 for S in s_subs)

    flags["s_lagrange_criteria"] = sl.holds and flags["s_lagrange"]

    sylow = satisfies_sylow_criteria(L)
    flags["s_sylow_criteria"] = sylow.holds
    if not sylow.holds:
        witnesses["s_sylow_criteria"] = sylow.witness

    commutative = [S for S in subgroups if is_commutative_subset(L, S.elements)]
    flags["s_commutative"] = bool(commutative)
    flags["s_strongly_commutative"] = bool(subgroups) and len(commutative) == len(subgroups)
    cyclic = [S for S in subgroups if _is_cyclic_group(L, S)]
    flags["s_cyclic"] = bool(cyclic)
    flags["s_strongly_cyclic"] = bool(subgroups) and len(cyclic) == len(subgroups)

    flags["s_loop_ii"] = bool(normal_subgroups)
    if normal_subgroups:
        witnesses["s_loop_ii"] = normal_subgroups[0].elements
    flags["s_lagrange_criteria_ii"] = bool(normal_subgroups) and all(
        size % S.order == 0 for S in normal_subgroups
    )
    normal_orders = {S.order for S in normal_subgroups}
    flags["s_sylow_criteria_ii"] = all(
        p in normal_orders for p in _prime_factors(size)
    )

    assert set(flags) == set(_FLAG_NAMES)
    return SReport(
        is_s_loop=sl.holds,
        witness_subgroup=sl.witness,
        s_subloops=s_subs,
        s_normal_subloops=structures.s_normal_subloops,
        flags=flags,
        witnesses=witnesses,
    )


@dataclass(frozen=True)
class SylowReport:
    s_p_sylow_subloops: tuple[SubLoop, ...]
    s_p_sylow_subgroup_pairs: tuple[tuple[SubLoop, SubLoop], ...]
    s_strong_p_sylow: bool


def s_p_sylow(L: FiniteLoop, p: int, caps: Caps = DEFAULT_CAPS) -> SylowReport:
    """Sylow-style structure relative to a prime p dividing |L|.

    Returns the S-subloops of order exactly p, the (A, B) pairs where B is an
    order-p subgroup inside an S-subloop A with p dividing |A|, and whether
    the loop is a subgroup loop in which every subgroup has p-power order
    dividing |L|.
    """
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise NotPrime(f"{p} is not prime")
    if L.size % p != 0:
        raise NotPrime(f"{p} does not divide the loop order {L.size}")
    census = all_subloops(L, caps)
    structures = s_substructures(L, caps, census)
    order_p = tuple(S for S in structures.s_subloops if S.order == p)
    pairs = []
    subgroups = [S for S in census.subgroups() if S.order == p]
    for A in structures.s_subloops:
        if A.order % p != 0:
            continue
        inside = A.as_set()
        for B in subgroups:
            if B.as_set() <= inside:
                pairs.append((A, B))
    strong = structures.s_subgroup_loop
    if strong:
        for S in census.subgroups():
            if S.order < 2 or not S.is_proper():
                continue
            order = S.order
            while order % p == 0:
                order //= p
            if order != 1 or L.size % S.order != 0:
                strong = False
                break
    return SylowReport(order_p, tuple(pairs), strong)


class RelativeKind(enum.Enum):
    COMMUTATOR = "commutator"
    ASSOCIATOR = "associator"
    PSEUDO_ASSOCIATOR = "pseudo_associator"
    STRONGLY_PSEUDO_ASSOCIATOR = "strongly_pseudo_associator"
    NUCLEUS_LEFT = "nucleus_left"
    NUCLEUS_MIDDLE = "nucleus_middle"
    NUCLEUS_RIGHT = "nucleus_right"
    NUCLEUS = "nucleus"
    MOUFANG_CENTRE = "moufang_centre"
    CENTRE = "centre"
    FIRST_NORMALIZER = "first_normalizer"
    SECOND_NORMALIZER = "second_normalizer"


def relative_substructure(L: FiniteLoop, A: SubLoop, kind: RelativeKind):
    """Classical substructures computed relative to a subloop A.

    Serves both levels of the theory: level I passes an S-subloop, level II
    an S-subloop of the normal flavour, and a loop with no S-subloops passes
    A = L itself.  Commutators range over pairs of A; associators collect the
    associators of all triples of L that happen to lie in A.  The relative
    pseudo-associator takes t in A and the strong form t anywhere in L, both
    over associating triples from A.  Normalizers range over all of L and
    return element sets; everything else returns a certified subloop.
    """
    t = L.table
    inside = A.as_set()
    if kind is RelativeKind.COMMUTATOR:
        gens = {commutator(L, x, y) for x in A.elements for y in A.elements}
        return generated_subloop(L, gens)
    if kind is RelativeKind.ASSOCIATOR:
        gens = set()
        for x in range(L.size):
            for y in range(L.size):
                for z in range(L.size):
                    w = associator(L, x, y, z)
                    if w in inside:
                        gens.add(w)
        return generated_subloop(L, gens)
    if kind in (RelativeKind.PSEUDO_ASSOCIATOR, RelativeKind.STRONGLY_PSEUDO_ASSOCIATOR):
        candidates = (
            A.elements if kind is RelativeKind.PSEUDO_ASSOCIATOR else range(L.size)
        )
        gens = set()
        for a in A.elements:
            for b in A.elements:
                ab = t[a][b]
                for c in A.elements:
                    if t[ab][c] != t[a][t[b][c]]:
                        continue
                    bc = t[b][c]
                    for w in candidates:
                        if t[ab][t[w][c]] == t[t[a][w]][bc]:
                            gens.add(w)
        return generated_subloop(L, gens)
    if kind in (
        RelativeKind.NUCLEUS_LEFT,
        RelativeKind.NUCLEUS_MIDDLE,
        RelativeKind.NUCLEUS_RIGHT,
        RelativeKind.NUCLEUS,
    ):
        def left_ok(a):
            return all(t[t[a][x]][y] == t[a][t[x][y]] for x in A.elements for y in A.elements)

        def middle_ok(a):
            return all(t[t[x][a]][y] == t[x][t[a][y]] for x in A.elements for y in A.elements)

        def right_ok(a):
            return all(t[t[x][y]][a] == t[x][t[y][a]] for x in A.elements for y in A.elements)

        tests = {
            RelativeKind.NUCLEUS_LEFT: (left_ok,),
            RelativeKind.NUCLEUS_MIDDLE: (middle_ok,),
            RelativeKind.NUCLEUS_RIGHT: (right_ok,),
            RelativeKind.NUCLEUS: (left_ok, middle_ok, right_ok),
        }[kind]
        members = [a for a in A.elements if all(ok(a) for ok in tests)]
        return certify_subloop(L, members)
    if kind is RelativeKind.MOUFANG_CENTRE:
        members = [
            x for x in A.elements if all(t[x][y] == t[y][x] for y in A.elements)
        ]
        try:
            return certify_subloop(L, members)
        except Exception:
            return generated_subloop(L, members)
    if kind is RelativeKind.CENTRE:
        sc = relative_substructure(L, A, RelativeKind.MOUFANG_CENTRE).as_set()
        sn = relative_substructure(L, A, RelativeKind.NUCLEUS).as_set()
        return certify_subloop(L, sc & sn)
    if kind is RelativeKind.FIRST_NORMALIZER:
        return first_normalizer(L, A)
    if kind is RelativeKind.SECOND_NORMALIZER:
        return second_normalizer(L, A)
    raise ValueError(f"unknown kind {kind}")


class SLaw(enum.Enum):
    ASSOCIATIVE_TRIPLE = "associative_triple"
    PAIRWISE_ASSOCIATIVE = "pairwise_associative"
    DIASSOCIATIVE = "diassociative"
    POWER_ASSOCIATIVE = "power_associative"
    ARIF = "arif"
    STEINER = "steiner"


class SMode(enum.Enum):
    EXISTS = "exists"
    FOR_ALL = "for_all"


def _s_subloop_satisfies(L: FiniteLoop, A: SubLoop, law) -> bool:
    sub = subloop_as_loop(L, A)
    if isinstance(law, Law):
        return check_law(sub, law).holds
    if law is SLaw.ASSOCIATIVE_TRIPLE:
        t = sub.table
        for x in range(1, sub.size):
            for y in range(1, sub.size):
                for z in range(1, sub.size):
                    if len({x, y, z}) == 3 and t[t[x][y]][z] == t[x][t[y][z]]:
                        return True
        return False
    if law is SLaw.PAIRWISE_ASSOCIATIVE:
        return check_law(sub, Law.FLEXIBLE).holds
    if law is SLaw.DIASSOCIATIVE:
        return is_diassociative(sub).holds
    if law is SLaw.POWER_ASSOCIATIVE:
        return is_power_associative(sub).holds
    if law is SLaw.ARIF:
        from .errors import NotIPLoop
        from .identities import is_arif

        try:
            return is_arif(sub).holds
        except NotIPLoop:
            return False
    if law is SLaw.STEINER:
        return check_law(sub, Law.STEINER).holds
    raise ValueError(f"unknown S-law {law}")


def s_law_check(
    L: FiniteLoop,
    law,
    mode: SMode = SMode.EXISTS,
    caps: Caps = DEFAULT_CAPS,
) -> Verdict:
    """Quantify an identity or structural property over the S-subloops of L.

    With no S-subloops at all, existential checks fail and universal checks
    hold vacuously; the detail string records that situation.
    """
    structures = s_substructures(L, caps)
    subloops = structures.s_subloops
    if not subloops:
        if mode is SMode.EXISTS:
            return Verdict(False, None, "no S-subloops")
        return Verdict(True, None, "no S-subloops (vacuous)")
    if mode is SMode.EXISTS:
        for A in subloops:
            if _s_subloop_satisfies(L, A, law):
                return Verdict(True, A.elements)
        return Verdict(False)
    for A in subloops:
        if not _s_subloop_satisfies(L, A, law):
            return Verdict(False, A.elements)
    return Verdict(True)


class TripleLaw(enum.Enum):
    BOL = "bol"
    MOUFANG = "moufang"
    BRUCK = "bruck"


def special_triple(
    L: FiniteLoop, x: int, y: int, z: int, law: TripleLaw, strong: bool = False
) -> Verdict:
    """Evaluate one identity instance on a specific triple (all 6 orders if strong)."""
    t = L.table

    def bol(a, b, c):
        return t[t[t[a][b]][c]][b] == t[a][t[t[b][c]][b]]

    def moufang(a, b, c):
        return t[t[a][b]][t[c][a]] == t[t[a][t[b][c]]][a]

    def bruck(a, b, c):
        return t[t[a][t[b][a]]][c] == t[a][t[b][t[a][c]]]

    pred = {TripleLaw.BOL: bol, TripleLaw.MOUFANG: moufang, TripleLaw.BRUCK: bruck}[law]
    if not strong:
        return Verdict(pred(x, y, z), None if pred(x, y, z) else (x, y, z))
    from itertools import permutations

    for perm in permutations((x, y, z)):
        if not pred(*perm):
            return Verdict(False, perm)
    return Verdict(True)


def s_homomorphism_check(
    L1: FiniteLoop,
    L2: FiniteLoop,
    A: SubLoop,
    A2: SubLoop,
    mapping: dict[int, int],
    level_ii: bool = False,
) -> Verdict:
    """Is the map a group homomorphism from A onto A2?

    Level II additionally requires both subgroups to be normal in their
    parents (mA = Am for all m).
    """
    for S, parent, name in ((A, L1, "domain"), (A2, L2, "codomain")):
        if not is_subgroup(parent, S):
            raise NotASubgroup(f"{name} subset is not a subgroup")
        if level_ii and not is_normal_subgroup(parent, S):
            raise NotNormal(0, -1, None)
    if set(mapping) != set(A.elements):
        return Verdict(False, None, "map does not cover the domain subgroup")
    if not set(mapping.values()) <= set(A2.elements):
        return Verdict(False, None, "image escapes the codomain subgroup")
    for a in A.elements:
        for b in A.elements:
            if mapping[L1.table[a][b]] != L2.table[mapping[a]][mapping[b]]:
                return Verdict(False, (a, b), "not multiplicative")
    if set(mapping.values()) != set(A2.elements):
        return Verdict(False, None, "not surjective onto the codomain subgroup")
    return Verdict(True)


def right_coset(L: FiniteLoop, A: SubLoop, m: int) -> frozenset[int]:
    """Am = {a*m : a in A} for a subgroup A."""
    if not is_subgroup(L, A):
        raise NotASubgroup("cosets are defined relative to subgroups")
    return frozenset(L.table[a][m] for a in A.elements)


def left_coset(L: FiniteLoop, A: SubLoop, m: int) -> frozenset[int]:
    """mA = {m*a : a in A} for a subgroup A."""
    if not is_subgroup(L, A):
        raise NotASubgroup("cosets are defined relative to subgroups")
    return frozenset(L.table[m][a] for a in A.elements)


def coset_cover_search(
    L: FiniteLoop, A: SubLoop, side: str = "right", caps: Caps = DEFAULT_CAPS
) -> list[tuple[int, ...]]:
    """All representative sets whose cosets partition L exactly.

    Each solution is the sorted tuple of chosen representatives (one per
    coset, the smallest element producing that coset), and solutions come out
    in lexicographic order.  Returns [] when no exact cover exists.
    """
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    coset = right_coset if side == "right" else left_coset
    if not is_subgroup(L, A):
        raise NotASubgroup("cosets are defined relative to subgroups")
    cosets_by_rep = [coset(L, A, m) for m in range(L.size)]
    solutions: list[tuple[int, ...]] = []

    def extend(covered: frozenset[int], reps: tuple[int, ...]):
        if len(solutions) >= caps.search:
            raise SearchCapExceeded("coset covers", len(solutions) + 1, caps.search)
        if len(covered) == L.size:
            solutions.append(tuple(sorted(reps)))
            return
        pivot = min(x for x in range(L.size) if x not in covered)
        seen_blocks: set[frozenset[int]] = set()
        for m in range(L.size):
            block = cosets_by_rep[m]
            if pivot not in block or block & covered or block in seen_blocks:
                continue
            seen_blocks.add(block)
            extend(covered | block, reps + (m,))

    extend(frozenset(), ())
    return sorted(solutions)


def hyperloop(
    L: FiniteLoop, q: int, within: SubLoop | None = None
) -> frozenset[tuple[int, int]]:
    """The pair set {(x*y, (x*y)*q)} over all x, y.

    When ``within`` is supplied, q must belong to it (the relative variant).
    """
    if within is not None and q not in within.elements:
        raise QNotInSubloop(f"q={q} lies outside the supplied subloop")
    t = L.table
    return frozenset((t[x][y], t[t[x][y]][q]) for x in range(L.size) for y in range(L.size))


def a_hyperloop(
    L: FiniteLoop, q: int, within: SubLoop | None = None
) -> frozenset[tuple[int, int]]:
    """The pair set {(x*y, x*(y*q))} over all x, y."""
    if within is not None and q not in within.elements:
        raise QNotInSubloop(f"q={q} lies outside the supplied subloop")
    t = L.table
    return frozenset(
        (t[x][y], t[x][t[y][q]]) for x in range(L.size) for y in range(L.size)
    )


def hyper_partition_check(L: FiniteLoop, variant: str = "hyperloop") -> Verdict:
    """Do the pair sets over all q tile L x L without overlap?"""
    maker = {"hyperloop": hyperloop, "a_hyperloop": a_hyperloop}.get(variant)
    if maker is None:
        raise ValueError("variant must be 'hyperloop' or 'a_hyperloop'")
    seen: dict[tuple[int, int], int] = {}
    for q in range(L.size):
        for pair in maker(L, q):
            if pair in seen:
                return Verdict(False, (pair, seen[pair], q), "overlapping pair")
            seen[pair] = q
    if len(seen) != L.size * L.size:
        return Verdict(False, None, "union does not cover the square")
    return Verdict(True)
