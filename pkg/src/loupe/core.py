"""Finite loops as certified Cayley tables.

A loop is a set with a binary product, a two-sided identity and unique left
and right division; associativity is not assumed.  Elements are plain ints
indexing into the table, with the identity pinned at index 0.  All values in
this module are immutable after construction and every operation is a pure
function, so concurrent use over shared loops is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, combinations, permutations, product
from math import lcm

from .errors import (
    BadIndex,
    IllDefinedCosetProduct,
    LatinColumnViolation,
    LatinRowViolation,
    NoIdentity,
    NotClosed,
    NotNormal,
    SizeCapExceeded,
)

SYMMETRIC_GROUP_MAX_DEGREE = 6  # 6! = 720 keeps mixed products at desk scale


@dataclass(frozen=True)
class FiniteLoop:
    """A certified finite loop: ``table[i][j]`` is the product i*j.

    Invariants (enforced by ``validate_loop``): every row and column is a
    permutation of ``range(size)`` and index 0 is a two-sided identity.
    """

    size: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def ldiv(self, a: int, b: int) -> int:
        """The unique x with a*x = b."""
        return self.table[a].index(b)

    def rdiv(self, a: int, b: int) -> int:
        """The unique y with y*a = b."""
        for y in range(self.size):
            if self.table[y][a] == b:
                return y
        raise AssertionError("column invariant violated")

    def elements(self) -> range:
        return range(self.size)

    def label_of(self, x: int) -> str:
        return self.labels[x]

    def render_subset(self, elems) -> str:
        return "{" + ",".join(self.labels[x] for x in sorted(elems)) + "}"

    def __repr__(self):
        return f"FiniteLoop(size={self.size})"


@dataclass(frozen=True)
class SubLoop:
    """A subset certified closed under some parent loop's product.

    Only the parent's size is recorded; the certificate is not portable
    across loops of different order.
    """

    elements: tuple[int, ...]
    parent_size: int

    def __post_init__(self):
        if not self.elements:
            raise ValueError("subloop cannot be empty")
        if 0 not in self.elements:
            raise ValueError("subloop must contain the identity")

    @property
    def order(self) -> int:
        return len(self.elements)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def is_proper(self) -> bool:
        return len(self.elements) < self.parent_size

    def is_trivial(self) -> bool:
        return len(self.elements) == 1


@dataclass(frozen=True)
class IsoWitness:
    """An identity-preserving bijection carrying one loop's product to another's."""

    mapping: tuple[int, ...]

    def apply(self, x: int) -> int:
        return self.mapping[x]


def default_labels(size: int) -> tuple[str, ...]:
    return ("e",) + tuple(str(i) for i in range(1, size))


def validate_loop(table, labels=None) -> FiniteLoop:
    """Certify a square table as a loop, relocating the identity to index 0.

    Raises ``LatinRowViolation`` / ``LatinColumnViolation`` on the first
    duplicated value and ``NoIdentity`` when no two-sided identity exists.
    """
    rows = tuple(tuple(int(v) for v in row) for row in table)
    size = len(rows)
    if size == 0:
        raise NoIdentity()
    for i, row in enumerate(rows):
        if len(row) != size:
            raise ValueError(f"row {i} has length {len(row)}, expected {size}")
        seen = set()
        for v in row:
            if not 0 <= v < size:
                raise ValueError(f"entry {v} in row {i} out of range")
            if v in seen:
                raise LatinRowViolation(i, v)
            seen.add(v)
    for j in range(size):
        seen = set()
        for i in range(size):
            v = rows[i][j]
            if v in seen:
                raise LatinColumnViolation(j, v)
            seen.add(v)
    identity = None
    for k in range(size):
        if all(rows[k][x] == x for x in range(size)) and all(rows[x][k] == x for x in range(size)):
            identity = k
            break
    if identity is None:
        raise NoIdentity()
    if labels is None:
        labs = default_labels(size)
    else:
        labs = tuple(str(s) for s in labels)
        if len(labs) != size:
            raise ValueError("labels length must match table size")
    if identity != 0:
        # relabel by swapping index 0 with the identity's position
        perm = list(range(size))
        perm[0], perm[identity] = identity, 0
        inv = perm  # a transposition is its own inverse
        rows = tuple(
            tuple(inv[rows[perm[i]][perm[j]]] for j in range(size)) for i in range(size)
        )
        labs = tuple(labs[perm[i]] for i in range(size))
    return FiniteLoop(size=size, table=rows, labels=labs)


def mul(L: FiniteLoop, x: int, y: int) -> int:
    return L.table[x][y]


def left_divide(L: FiniteLoop, a: int, b: int) -> int:
    """The unique x with a*x = b."""
    return L.ldiv(a, b)


def right_divide(L: FiniteLoop, a: int, b: int) -> int:
    """The unique y with y*a = b."""
    return L.rdiv(a, b)


def two_sided_inverse(L: FiniteLoop, x: int) -> int | None:
    """The element y with x*y = y*x = e, or None when left and right inverses differ."""
    right = L.ldiv(x, 0)
    left = L.rdiv(x, 0)
    return right if right == left else None


def associator(L: FiniteLoop, x: int, y: int, z: int) -> int:
    """The unique w with (xy)z = (x(yz))w."""
    lhs = L.table[L.table[x][y]][z]
    rhs = L.table[x][L.table[y][z]]
    return L.ldiv(rhs, lhs)


def commutator(L: FiniteLoop, x: int, y: int) -> int:
    """The unique w with xy = (yx)w."""
    return L.ldiv(L.table[y][x], L.table[x][y])


def generated_subloop(L: FiniteLoop, seed) -> SubLoop:
    """Smallest subset containing ``seed`` and e that is closed under the product.

    In a finite loop a nonempty product-closed subset is automatically a
    subloop: the translations restricted to it are bijections of it, so it
    contains e and is division-closed.  A closed subset on more than half
    the elements must already be the whole loop, which bounds the fixpoint.
    """
    size = L.size
    table = L.table
    elems = set(seed)
    elems.add(0)
    for x in elems:
        if not 0 <= x < size:
            raise BadIndex(f"seed element {x} out of range")
    half = size // 2
    queue = sorted(elems)
    while queue:
        x = queue.pop()
        snapshot = list(elems)
        for y in snapshot:
            for v in (table[x][y], table[y][x]):
                if v not in elems:
                    elems.add(v)
                    queue.append(v)
        if len(elems) > half:
            return SubLoop(tuple(range(size)), size)
    return SubLoop(tuple(sorted(elems)), size)


def certify_subloop(L: FiniteLoop, elems) -> SubLoop:
    """Check closure of an explicit subset and wrap it as a SubLoop."""
    members = sorted(set(elems))
    inside = frozenset(members)
    for x in members:
        if not 0 <= x < L.size:
            raise BadIndex(f"element {x} out of range")
        for y in members:
            v = L.table[x][y]
            if v not in inside:
                raise NotClosed(x, y, v)
    return SubLoop(tuple(members), L.size)


def subloop_as_loop(L: FiniteLoop, S: SubLoop) -> FiniteLoop:
    """The restriction of L to S as a standalone loop (identity stays first)."""
    index = {x: i for i, x in enumerate(S.elements)}
    table = tuple(
        tuple(index[L.table[x][y]] for y in S.elements) for x in S.elements
    )
    labels = tuple(L.labels[x] for x in S.elements)
    return FiniteLoop(size=len(S.elements), table=table, labels=labels)


def is_subgroup(L: FiniteLoop, S: SubLoop) -> bool:
    """True iff the product restricted to S is associative."""
    elems = S.elements
    t = L.table
    for x in elems:
        for y in elems:
            xy = t[x][y]
            for z in elems:
                if t[xy][z] != t[x][t[y][z]]:
                    return False
    return True


def is_commutative_subset(L: FiniteLoop, elems) -> bool:
    t = L.table
    seq = tuple(elems)
    for i, x in enumerate(seq):
        for y in seq[i + 1:]:
            if t[x][y] != t[y][x]:
                return False
    return True


def normality_witness(L: FiniteLoop, H: SubLoop) -> tuple[int, int, int | None] | None:
    """First violated normality condition for H, or None when H is normal.

    Conditions, in order: (1) xH = Hx, (2) (Hx)y = H(xy), (3) y(xH) = (yx)H.
    """
    t = L.table
    hs = H.elements
    for x in range(L.size):
        if {t[x][h] for h in hs} != {t[h][x] for h in hs}:
            return (1, x, None)
    for x in range(L.size):
        hx = [t[h][x] for h in hs]
        for y in range(L.size):
            if {t[v][y] for v in hx} != {t[h][t[x][y]] for h in hs}:
                return (2, x, y)
    for x in range(L.size):
        xh = [t[x][h] for h in hs]
        for y in range(L.size):
            if {t[y][v] for v in xh} != {t[t[y][x]][h] for h in hs}:
                return (3, x, y)
    return None


def quotient_loop(L: FiniteLoop, N: SubLoop) -> FiniteLoop:
    """The loop on the coset partition {N*x} of a normal subloop N."""
    witness = normality_witness(L, N)
    if witness is not None:
        raise NotNormal(*witness)
    t = L.table
    ns = N.elements
    coset_of: dict[int, int] = {}
    blocks: list[tuple[int, ...]] = []
    for x in range(L.size):
        if x in coset_of:
            continue
        block = tuple(sorted({t[h][x] for h in ns}))
        if x not in block:
            raise IllDefinedCosetProduct(f"coset of {x} misses {x}")
        for v in block:
            if v in coset_of:
                raise IllDefinedCosetProduct(f"cosets overlap at {v}")
            coset_of[v] = len(blocks)
        blocks.append(block)
    k = len(blocks)
    table = [[0] * k for _ in range(k)]
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            expected = coset_of[t[bi[0]][bj[0]]]
            for x in bi:
                for y in bj:
                    if coset_of[t[x][y]] != expected:
                        raise IllDefinedCosetProduct(
                            f"products of coset {i} by coset {j} straddle blocks"
                        )
            table[i][j] = expected
    labels = tuple(L.render_subset(b) for b in blocks)
    return validate_loop(table, labels)


def direct_product(L1: FiniteLoop, L2: FiniteLoop) -> FiniteLoop:
    """Componentwise product on size1*size2 elements; (e, e) is the identity.

    Rows are assembled from shared value blocks so large products (e.g. a
    loop times S_6) reuse int objects instead of materialising size^2 of them.
    """
    n1, n2 = L1.size, L2.size
    blocks: dict[tuple[int, int], tuple[int, ...]] = {}
    rows = []
    for a in range(n1):
        row1 = L1.table[a]
        for s in range(n2):
            parts = []
            for b in range(n1):
                key = (row1[b], s)
                blk = blocks.get(key)
                if blk is None:
                    base = key[0] * n2
                    blk = tuple(base + w for w in L2.table[s])
                    blocks[key] = blk
                parts.append(blk)
            rows.append(tuple(chain.from_iterable(parts)))
    labels = tuple(
        f"({L1.labels[a]},{L2.labels[s]})" for a in range(n1) for s in range(n2)
    )
    return FiniteLoop(size=n1 * n2, table=tuple(rows), labels=labels)


@lru_cache(maxsize=None)
def cyclic_group(k: int) -> FiniteLoop:
    """The cyclic group of order k as a loop."""
    if k < 1:
        raise ValueError("order must be at least 1")
    table = tuple(tuple((i + j) % k for j in range(k)) for i in range(k))
    return FiniteLoop(size=k, table=table, labels=default_labels(k))


@lru_cache(maxsize=None)
def symmetric_group(k: int) -> FiniteLoop:
    """The symmetric group on k letters; capped at degree 6 (order 720)."""
    if k < 1:
        raise ValueError("degree must be at least 1")
    if k > SYMMETRIC_GROUP_MAX_DEGREE:
        raise SizeCapExceeded("symmetric group degree", k, SYMMETRIC_GROUP_MAX_DEGREE)
    perms = sorted(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    # product p*q acts as "apply p, then q"
    table = tuple(
        tuple(index[tuple(q[p[i]] for i in range(k))] for q in perms) for p in perms
    )
    labels = tuple("".join(str(v) for v in p) for p in perms)
    return FiniteLoop(size=len(perms), table=table, labels=labels)


def _element_signature(L: FiniteLoop, x: int) -> tuple:
    gen = generated_subloop(L, (x,))
    comm = sum(1 for y in range(L.size) if L.table[x][y] == L.table[y][x])
    return (len(gen.elements), L.table[x][x] == 0, comm)


def find_isomorphism(L1: FiniteLoop, L2: FiniteLoop) -> IsoWitness | None:
    """Identity-preserving isomorphism search, smallest image lexicographically.

    Backtracks over index order with element-signature pruning; returns the
    first witness or None.
    """
    if L1.size != L2.size:
        return None
    size = L1.size
    sig1 = [_element_signature(L1, x) for x in range(size)]
    sig2 = [_element_signature(L2, x) for x in range(size)]
    if sorted(sig1) != sorted(sig2):
        return None
    t1, t2 = L1.table, L2.table
    mapping = [-1] * size
    used = [False] * size
    mapping[0] = 0
    used[0] = True

    def consistent(x: int) -> bool:
        fx = mapping[x]
        for y in range(size):
            fy = mapping[y]
            if fy < 0:
                continue
            for a, b in ((x, y), (y, x)):
                r = mapping[t1[a][b]]
                if r >= 0 and r != t2[mapping[a]][mapping[b]]:
                    return False
        return True

    def extend(x: int) -> bool:
        if x == size:
            return all(
                mapping[t1[a][b]] == t2[mapping[a]][mapping[b]]
                for a in range(size)
                for b in range(size)
            )
        for u in range(size):
            if used[u] or sig2[u] != sig1[x]:
                continue
            mapping[x] = u
            used[u] = True
            if consistent(x) and extend(x + 1):
                return True
            mapping[x] = -1
            used[u] = False
        return False

    if extend(1):
        return IsoWitness(tuple(mapping))
    return None


def element_order(L: FiniteLoop, x: int) -> int | None:
    """Order of x when <x> is a cyclic group; None when powers are ambiguous."""
    gen = generated_subloop(L, (x,))
    sub = subloop_as_loop(L, gen)
    if not is_subgroup(L, gen):
        return None
    pos = gen.elements.index(x)
    k, cur = 1, pos
    while cur != 0:
        cur = sub.table[cur][pos]
        k += 1
    return k


def power_ambiguity(L: FiniteLoop, x: int) -> tuple[int, int, int] | None:
    """An associativity failure inside <x>, or None when x has a clean order."""
    gen = generated_subloop(L, (x,))
    t = L.table
    for a in gen.elements:
        for b in gen.elements:
            ab = t[a][b]
            for c in gen.elements:
                if t[ab][c] != t[a][t[b][c]]:
                    return (a, b, c)
    return None


def all_closed_subsets(L: FiniteLoop) -> list[SubLoop]:
    """Brute-force power-set subloop enumeration; exponential, for oracles only."""
    out = []
    rest = range(1, L.size)
    for r in range(0, L.size):
        for combo in combinations(rest, r):
            cand = (0,) + combo
            inside = frozenset(cand)
            if all(L.table[x][y] in inside for x in cand for y in cand):
                out.append(SubLoop(cand, L.size))
    return out


def is_associative(L: FiniteLoop) -> bool:
    return all(
        L.table[L.table[x][y]][z] == L.table[x][L.table[y][z]]
        for x, y, z in product(range(L.size), repeat=3)
    )


def permutation_order(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    lengths = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        n, cur = 0, s
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
            n += 1
        lengths.append(n)
    return lcm(*lengths) if lengths else 1


@dataclass(frozen=True)
class CycleClass:
    """Multiset of cycle lengths of a permutation, as sorted (length, count) pairs."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, mapping) -> "CycleClass":
        items = tuple(sorted((int(k), int(v)) for k, v in dict(mapping).items() if v))
        return cls(items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def order(self) -> int:
        """lcm of the cycle lengths: the order of any permutation in this class."""
        return lcm(*(length for length, _ in self.counts)) if self.counts else 1

    def total(self) -> int:
        return sum(length * count for length, count in self.counts)

    def __str__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in self.counts)
        return "{" + inner + "}"
