"""Finite strict partial orders on indexed elements, stored as bitmask rows.

Elements are the integers 0..n-1. Row ``up[i]`` is a Python-int bitmask of
every j with i < j, so comparability tests and intersections of relations
are single big-int operations. Irreflexivity, antisymmetry and transitivity
are validated on construction; every ``Poset`` instance is a genuine strict
order. Instances are immutable and safe for concurrent reads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ContractViolation, GuardExceeded

EXTENSION_CAP = 12
ISO_CAP = 16


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable strict order; ``up[i]``/``dn[i]`` are above/below bitmasks."""

    __slots__ = ("n", "up", "dn", "labels")

    def __init__(self, up: Sequence[int], labels: Optional[Sequence[str]] = None):
        n = len(up)
        self.n = n
        self.up = tuple(up)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ContractViolation("label count does not match element count")
        self.labels = labels
        full = (1 << n) - 1
        dn = [0] * n
        for i, row in enumerate(self.up):
            if row & ~full:
                raise ContractViolation(f"relation row {i} has bits outside 0..{n - 1}")
            if (row >> i) & 1:
                raise ContractViolation(f"irreflexivity violated at element {i}")
            for j in iter_bits(row):
                if (self.up[j] >> i) & 1:
                    raise ContractViolation(f"antisymmetry violated on ({i}, {j})")
                if self.up[j] & ~row:
                    raise ContractViolation(f"transitivity violated below element {i}")
                dn[j] |= 1 << i
        self.dn = tuple(dn)

    # -- relation accessors -------------------------------------------------

    def lt(self, x: int, y: int) -> bool:
        return (self.up[x] >> y) & 1 == 1

    def le(self, x: int, y: int) -> bool:
        return x == y or (self.up[x] >> y) & 1 == 1

    def comparable(self, x: int, y: int) -> bool:
        return x != y and ((self.up[x] >> y) & 1 or (self.up[y] >> x) & 1)

    def incomparable(self, x: int, y: int) -> bool:
        return x != y and not self.comparable(x, y)

    def incomparable_mask(self, x: int) -> int:
        full = (1 << self.n) - 1
        return full & ~(self.up[x] | self.dn[x] | (1 << x))

    def comparable_pairs(self) -> Iterator[tuple[int, int]]:
        """All ordered pairs (a, b) with a < b, sorted by (a, b)."""
        for a in range(self.n):
            yield from ((a, b) for b in iter_bits(self.up[a]))

    def incomparable_pairs(self) -> Iterator[tuple[int, int]]:
        """All unordered incomparable pairs as (a, b) with a < b numerically."""
        for a in range(self.n):
            for b in iter_bits(self.incomparable_mask(a)):
                if b > a:
                    yield (a, b)

    def relation_count(self) -> int:
        return sum(row.bit_count() for row in self.up)

    def dual(self) -> "Poset":
        return Poset(self.dn, labels=self.labels)

    # -- structural dunders -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poset) and self.n == other.n and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.n, self.up))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, relations={self.relation_count()})"

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_lt_pairs(cls, n: int, pairs: Iterable[tuple[int, int]],
                      labels: Optional[Sequence[str]] = None) -> "Poset":
        """Build from an already transitively closed strict relation."""
        up = [0] * n
        for a, b in pairs:
            up[a] |= 1 << b
        return cls(up, labels=labels)

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]],
                    labels: Optional[Sequence[str]] = None) -> "Poset":
        """Build from cover pairs; the transitive closure is computed here.

        A cycle in the input surfaces as a ContractViolation.
        """
        up = [0] * n
        for a, b in covers:
            if a == b:
                raise ContractViolation(f"cover loop at element {a}")
            up[a] |= 1 << b
        for k in range(n):
            bit = 1 << k
            row_k = up[k]
            for i in range(n):
                if up[i] & bit:
                    up[i] |= row_k
        for i in range(n):
            if (up[i] >> i) & 1:
                raise ContractViolation("cover relation contains a cycle")
        return cls(up, labels=labels)


def make_chain(k: int) -> Poset:
    """The k-element chain 0 < 1 < ... < k-1."""
    if k < 1:
        raise ContractViolation("a chain needs at least one element")
    full = (1 << k) - 1
    return Poset([(full >> (i + 1)) << (i + 1) for i in range(k)])


def make_antichain(k: int) -> Poset:
    if k < 1:
        raise ContractViolation("an antichain needs at least one element")
    return Poset([0] * k)


def product(p: Poset, q: Poset) -> Poset:
    """Componentwise product; element (i, j) gets index i * q.n + j."""
    qn = q.n
    ge_q = [q.up[j] | (1 << j) for j in range(qn)]
    up = []
    for i in range(p.n):
        ge_p = p.up[i] | (1 << i)
        for j in range(qn):
            row = 0
            block = ge_q[j]
            for k in iter_bits(ge_p):
                row |= block << (k * qn)
            up.append(row & ~(1 << (i * qn + j)))
    return Poset(up)


# -- linear extensions --------------------------------------------------------


@dataclass(frozen=True)
class LinearExtension:
    """A total order of 0..n-1; position = size of the closed downset - 1."""

    order: tuple[int, ...]

    def __post_init__(self):
        n = len(self.order)
        pos = [-1] * n
        for p, x in enumerate(self.order):
            if not 0 <= x < n or pos[x] != -1:
                raise ContractViolation("order is not a permutation")
            pos[x] = p
        object.__setattr__(self, "_pos", tuple(pos))

    def index(self, x: int) -> int:
        return self._pos[x]  # type: ignore[attr-defined]

    def height(self, x: int) -> int:
        """1-based position from below, the size of the closed downset."""
        return self.index(x) + 1

    def before(self, x: int, y: int) -> bool:
        return self.index(x) < self.index(y)

    def dual(self) -> "LinearExtension":
        return LinearExtension(tuple(reversed(self.order)))

    def above_masks(self) -> tuple[int, ...]:
        """Per element, the bitmask of elements strictly after it."""
        n = len(self.order)
        above = [0] * n
        seen = 0
        for x in reversed(self.order):
            above[x] = seen
            seen |= 1 << x
        return tuple(above)


def dual(ext: LinearExtension) -> LinearExtension:
    """Reversed order; an involution."""
    return ext.dual()


def is_linear_extension(p: Poset, ext: LinearExtension) -> bool:
    if len(ext.order) != p.n:
        return False
    placed = 0
    for x in ext.order:
        if p.up[x] & placed:
            return False
        placed |= 1 << x
    return True


def linear_extensions(p: Poset, cap: int = EXTENSION_CAP) -> list[LinearExtension]:
    """All linear extensions, lexicographic by element index.

    Guarded by ``cap`` on the element count; each output is re-validated
    against the extension invariant.
    """
    if p.n > cap:
        raise GuardExceeded(f"linear extension enumeration capped at {cap} elements")
    n, dn = p.n, p.dn
    full = (1 << n) - 1
    out: list[LinearExtension] = []
    order: list[int] = []

    def rec(placed: int) -> None:
        if placed == full:
            ext = LinearExtension(tuple(order))
            if not is_linear_extension(p, ext):
                raise ContractViolation("enumerated order failed extension validation")
            out.append(ext)
            return
        remaining = full & ~placed
        for x in iter_bits(remaining):
            if dn[x] & ~placed:
                continue
            order.append(x)
            rec(placed | (1 << x))
            order.pop()

    rec(0)
    return out


def count_linear_extensions(p: Poset) -> int:
    """Downset-DP count, independent of the enumerating search."""
    n, dn = p.n, p.dn
    full = (1 << n) - 1
    memo: dict[int, int] = {full: 1}

    def cnt(placed: int) -> int:
        got = memo.get(placed)
        if got is not None:
            return got
        total = 0
        for x in iter_bits(full & ~placed):
            if not dn[x] & ~placed:
                total += cnt(placed | (1 << x))
        memo[placed] = total
        return total

    return cnt(0)


# -- realizers ------------------------------------------------------------------


@dataclass(frozen=True)
class Realizer:
    """A tuple of linear extensions whose intersection is the poset."""

    extensions: tuple[LinearExtension, ...]

    def __len__(self) -> int:
        return len(self.extensions)


def is_realizer(p: Poset, extensions: Sequence[LinearExtension]) -> bool:
    """True iff the intersection of the extensions' orders equals ``p``.

    Supplying an order that is not a linear extension of ``p`` is a
    contract violation, not a False verdict.
    """
    if not extensions:
        raise ContractViolation("a realizer needs at least one extension")
    for ext in extensions:
        if not is_linear_extension(p, ext):
            raise ContractViolation("supplied order is not a linear extension of the poset")
    inter = None
    for ext in extensions:
        above = ext.above_masks()
        if inter is None:
            inter = list(above)
        else:
            inter = [a & b for a, b in zip(inter, above)]
    return tuple(inter) == p.up


def find_realizer(p: Poset, size: int,
                  ext_cap: int = EXTENSION_CAP) -> Optional[Realizer]:
    """Search a realizer with exactly ``size`` distinct-or-repeated extensions.

    Brute force with reversal-coverage pruning; intended for tiny posets.
    """
    if size < 1:
        raise ContractViolation("realizer size must be positive")
    exts = linear_extensions(p, cap=ext_cap)
    inc = list(p.incomparable_pairs())
    if not inc:
        return Realizer(tuple([exts[0]] * size))
    # Bit b of a coverage mask: ordered pair; even bits (x, y), odd bits (y, x).
    masks = []
    for ext in exts:
        m = 0
        for b, (x, y) in enumerate(inc):
            if ext.before(y, x):
                m |= 1 << (2 * b)
            else:
                m |= 1 << (2 * b + 1)
        masks.append(m)
    target = (1 << (2 * len(inc))) - 1
    suffix_or = [0] * (len(exts) + 1)
    for i in range(len(exts) - 1, -1, -1):
        suffix_or[i] = suffix_or[i + 1] | masks[i]
    chosen: list[int] = []

    def rec(start: int, covered: int, left: int) -> Optional[tuple[int, ...]]:
        if covered == target:
            return tuple(chosen)
        if left == 0 or covered | suffix_or[start] != target:
            return None
        for i in range(start, len(exts)):
            chosen.append(i)
            got = rec(i + 1, covered | masks[i], left - 1)
            if got is not None:
                return got
            chosen.pop()
        return None

    got = rec(0, 0, size)
    if got is None:
        return None
    picked = [exts[i] for i in got]
    while len(picked) < size:
        picked.append(picked[0])
    rz = Realizer(tuple(picked))
    if not is_realizer(p, rz.extensions):
        raise ContractViolation("realizer search produced an invalid witness")
    return rz


def dimension(p: Poset, max_d: int = 4, ext_cap: int = EXTENSION_CAP) -> int:
    """Dushnik-Miller dimension by brute-force realizer search."""
    for d in range(1, max_d + 1):
        if find_realizer(p, d, ext_cap=ext_cap) is not None:
            return d
    raise GuardExceeded(f"no realizer of size <= {max_d} found")


# -- induced subposets, isomorphism, alternating cycles -------------------------


def induced_subposet(p: Poset, subset: Iterable[int]) -> Poset:
    """Relation restricted to ``subset``; new index i is the i-th smallest
    original element."""
    elems = sorted(set(subset))
    if not elems:
        raise ContractViolation("induced subposet needs a nonempty subset")
    if elems[0] < 0 or elems[-1] >= p.n:
        raise ContractViolation("subset element out of range")
    where = {e: i for i, e in enumerate(elems)}
    up = [0] * len(elems)
    for i, e in enumerate(elems):
        row = p.up[e]
        for f in elems:
            if (row >> f) & 1:
                up[i] |= 1 << where[f]
    labels = None
    if p.labels is not None:
        labels = [p.labels[e] for e in elems]
    return Poset(up, labels=labels)


def _profiles(p: Poset) -> list[tuple[int, int]]:
    return [(p.dn[i].bit_count(), p.up[i].bit_count()) for i in range(p.n)]


def enumerate_isomorphisms(p: Poset, q: Poset,
                           cap: int = ISO_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every relation-preserving bijection p -> q, lexicographically.

    Backtracking with (downset size, upset size) pruning; guarded by ``cap``.
    """
    if max(p.n, q.n) > cap:
        raise GuardExceeded(f"isomorphism search capped at {cap} elements")
    if p.n != q.n or p.relation_count() != q.relation_count():
        return
    prof_p, prof_q = _profiles(p), _profiles(q)
    if sorted(prof_p) != sorted(prof_q):
        return
    n = p.n
    candidates = [[j for j in range(n) if prof_q[j] == prof_p[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: (len(candidates[i]), i))
    image = [-1] * n

    def rec(step: int, used: int) -> Iterator[tuple[int, ...]]:
        if step == n:
            yield tuple(image)
            return
        i = order[step]
        for j in candidates[i]:
            if (used >> j) & 1:
                continue
            ok = True
            for s in range(step):
                i2 = order[s]
                j2 = image[i2]
                if p.lt(i, i2) != q.lt(j, j2) or p.lt(i2, i) != q.lt(j2, j):
                    ok = False
                    break
            if ok:
                image[i] = j
                yield from rec(step + 1, used | (1 << j))
                image[i] = -1

    yield from rec(0, 0)


def is_isomorphic(p: Poset, q: Poset, cap: int = ISO_CAP) -> Optional[tuple[int, ...]]:
    """A witness bijection preserving the relation both ways, or None."""
    for mapping in enumerate_isomorphisms(p, q, cap=cap):
        return mapping
    return None


def automorphisms(p: Poset, cap: int = ISO_CAP) -> list[tuple[int, ...]]:
    return list(enumerate_isomorphisms(p, p, cap=cap))


def is_alternating_cycle(p: Poset, pairs: Sequence[tuple[int, int]]) -> bool:
    """True iff x_i <= y_{i+1} cyclically for the given incomparable pairs.

    An alternating cycle is the obstruction to reversing all the pairs in a
    single linear extension. Comparable input pairs are a contract violation.
    """
    if not pairs:
        raise ContractViolation("an alternating cycle needs at least one pair")
    for x, y in pairs:
        if not p.incomparable(x, y):
            raise ContractViolation(f"pair ({x}, {y}) is not incomparable")
    m = len(pairs)
    return all(p.le(pairs[i][0], pairs[(i + 1) % m][1]) for i in range(m))
