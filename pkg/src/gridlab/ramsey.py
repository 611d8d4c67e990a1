"""Coloring reductions and desk-scale Ramsey searches over grids and posets.

Three kinds of colorings share one engine:

* ``comparability`` -- keys are ordered pairs (a, b) with a < b;
* ``subgrid``       -- keys are m-side subgrids of n^t;
* ``subposet-copy`` -- keys are induced m^t-grid copies (element sets).

A "structure" is the key set of a candidate monochromatic object. Verifying
a Ramsey witness means proving no r-coloring leaves every structure
non-monochromatic; the search backtracks over keys in a fixed deterministic
order with monochromatic-forcing propagation and first-key color-symmetry
breaking. Guard exhaustion is a distinct inconclusive verdict, never False.
"""

from __future__ import annotations

import hashlib
import math
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

from .errors import ChainStepFailure, ContractViolation, GuardExceeded
from .grids import (
    GridPoset,
    Subgrid,
    core_elements,
    enumerate_subgrids,
    grid,
    subgrids_within,
)
from .poset import (
    LinearExtension,
    Poset,
    enumerate_isomorphisms,
    induced_subposet,
    is_linear_extension,
    linear_extensions,
)

KIND_COMPARABILITY = "comparability"
KIND_SUBGRID = "subgrid"
KIND_SUBPOSET = "subposet-copy"

COPY_GUARD = 2_000_000
NODE_GUARD = 50_000_000
STRUCTURE_GUARD = 5_000_000

_DEADLINE: Optional[float] = None


@contextmanager
def time_limit(seconds: Optional[float]):
    """Soft wall-clock guard for the search kernels in this module.

    Firing surfaces as GuardExceeded, i.e. an inconclusive verdict; results
    that finish within the limit are unaffected and stay deterministic.
    """
    global _DEADLINE
    old = _DEADLINE
    _DEADLINE = None if seconds is None else time.monotonic() + seconds
    try:
        yield
    finally:
        _DEADLINE = old


def _check_deadline() -> None:
    if _DEADLINE is not None and time.monotonic() > _DEADLINE:
        raise GuardExceeded("time limit exceeded")


# -- colorings ----------------------------------------------------------------


class Coloring:
    """A total map from canonical structure keys to colors 1..r."""

    def __init__(self, kind: str, r: int):
        if kind not in (KIND_COMPARABILITY, KIND_SUBGRID, KIND_SUBPOSET):
            raise ContractViolation(f"unknown coloring kind {kind!r}")
        if r < 1:
            raise ContractViolation("color count must be positive")
        self.kind = kind
        self.r = r

    def color_of(self, key) -> int:
        raise NotImplementedError


class MapColoring(Coloring):
    """Dict-backed coloring; keys must already be canonical."""

    def __init__(self, kind: str, r: int, assignment: Mapping):
        super().__init__(kind, r)
        self.assignment = dict(assignment)
        for key, color in self.assignment.items():
            if not 1 <= color <= r:
                raise ContractViolation(f"color {color} of key {key!r} outside 1..{r}")

    def color_of(self, key) -> int:
        try:
            return self.assignment[key]
        except KeyError:
            raise ContractViolation(f"coloring is not total: missing key {key!r}") from None

    def items(self):
        return sorted(self.assignment.items())


class FunctionColoring(Coloring):
    """Callable-backed coloring for universes too large to materialize."""

    def __init__(self, kind: str, r: int, fn: Callable):
        super().__init__(kind, r)
        self.fn = fn

    def color_of(self, key) -> int:
        color = self.fn(key)
        if not 1 <= color <= self.r:
            raise ContractViolation(f"function coloring produced color {color}")
        return color


def _stable_hash(seed: int, tag: str, key) -> int:
    digest = hashlib.blake2b(
        repr((seed, tag, key)).encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def hash_coloring(kind: str, r: int, seed: int, *,
                  bias_color: Optional[int] = None, bias: float = 0.0) -> FunctionColoring:
    """Seeded, run-stable pseudo-random coloring (blake2, not built-in hash).

    With ``bias`` > 0, each key takes ``bias_color`` with that probability,
    which keeps monochromatic events reachable in soundness sweeps.
    """

    def fn(key):
        if bias_color is not None and bias > 0.0:
            u = _stable_hash(seed, "bias", key) / 2.0 ** 64
            if u < bias:
                return bias_color
        return 1 + _stable_hash(seed, "color", key) % r

    return FunctionColoring(kind, r, fn)


def random_map_coloring(kind: str, keys: Iterable, r: int, rng) -> MapColoring:
    return MapColoring(kind, r, {key: rng.randint(1, r) for key in keys})


def comparability_keys(q: Poset) -> tuple[tuple[int, int], ...]:
    """All ordered pairs (a, b) with a < b in q, sorted by (a, b)."""
    return tuple(q.comparable_pairs())


def subposet_copy_key(elements: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(elements))


# -- monochromatic witnesses -----------------------------------------------------


@dataclass(frozen=True)
class MonoWitness:
    """A substructure all of whose keys carry one color."""

    kind: str
    color: Optional[int]
    subgrid: Optional[Subgrid] = None
    elements: Optional[tuple[int, ...]] = None


# -- coloring reductions ----------------------------------------------------------


def reduce_comparability_to_subgrid(coloring: Coloring, g: GridPoset) -> MapColoring:
    """Color each 2^t subgrid by the color of its (least, greatest) pair."""
    if coloring.kind != KIND_COMPARABILITY:
        raise ContractViolation("reduction expects a comparability coloring")
    assignment = {}
    for sub in enumerate_subgrids(g.k, g.t, 2):
        lo, hi = sub.min_max_coords()
        key = (g.index(lo), g.index(hi))
        assignment[sub.axes] = coloring.color_of(key)
    return MapColoring(KIND_SUBGRID, coloring.r, assignment)


def reduce_subposet_to_subgrid(c1: Coloring, g: GridPoset, m: int) -> MapColoring:
    """Color each (m^2)-side subgrid of n^2 by c1 evaluated at its core."""
    if c1.kind != KIND_SUBPOSET:
        raise ContractViolation("reduction expects a subposet-copy coloring")
    if g.t != 2:
        raise ContractViolation("the core reduction lives in two dimensions")
    side = m * m
    assignment = {}
    for sub in enumerate_subgrids(g.k, 2, side):
        assignment[sub.axes] = c1.color_of(core_elements(sub, g))
    return MapColoring(KIND_SUBGRID, c1.r, assignment)


# -- monochromatic-substructure search ---------------------------------------------


def find_monochromatic_subgrid(n: int, t: int, m: int, l: int, coloring: Coloring,
                               guard_structures: int = STRUCTURE_GUARD
                               ) -> Optional[MonoWitness]:
    """First l^t subgrid whose m^t subgrids all share a color, else None."""
    if coloring.kind != KIND_SUBGRID:
        raise ContractViolation("subgrid search expects a subgrid coloring")
    if not 1 <= m <= l <= n:
        raise ContractViolation("need 1 <= m <= l <= n")
    work = math.comb(n, l) ** t * math.comb(l, m) ** t
    if work > guard_structures:
        raise GuardExceeded(f"subgrid scan of {work} cells exceeds guard")
    for outer in enumerate_subgrids(n, t, l):
        color = None
        mono = True
        for inner in subgrids_within(outer, m):
            c = coloring.color_of(inner.axes)
            if color is None:
                color = c
            elif c != color:
                mono = False
                break
        if mono:
            return MonoWitness(KIND_SUBGRID, color, subgrid=outer)
    return None


def _copy_search(q: Poset, p: Poset, within: Optional[Sequence[int]],
                 coloring: Optional[Coloring],
                 guard_nodes: int) -> Iterator[tuple[int, ...]]:
    """Backtracking enumeration of induced copies of p inside q.

    Yields image tuples indexed by p-element. With a coloring, branches whose
    partial comparable pairs already disagree on a color are pruned, so the
    yields are exactly the monochromatic embeddings.
    """
    allowed = range(q.n) if within is None else sorted(set(within))
    image = [-1] * p.n
    nodes = 0

    def rec(step: int, used: int, color: Optional[int]) -> Iterator[tuple[int, ...]]:
        nonlocal nodes
        if step == p.n:
            yield tuple(image)
            return
        for cand in allowed:
            if (used >> cand) & 1:
                continue
            nodes += 1
            if nodes > guard_nodes:
                raise GuardExceeded("copy search exceeded its node guard")
            if not nodes & 0xFFF:
                _check_deadline()
            ok = True
            new_color = color
            for prev in range(step):
                a, b = image[prev], cand
                if p.lt(prev, step) != q.lt(a, b) or p.lt(step, prev) != q.lt(b, a):
                    ok = False
                    break
                if coloring is not None and q.comparable(a, b):
                    key = (a, b) if q.lt(a, b) else (b, a)
                    c = coloring.color_of(key)
                    if new_color is None:
                        new_color = c
                    elif c != new_color:
                        ok = False
                        break
            if ok:
                image[step] = cand
                yield from rec(step + 1, used | (1 << cand), new_color)
                image[step] = -1

    yield from rec(0, 0, None)


def enumerate_induced_copy_sets(q: Poset, p: Poset, within: Optional[Sequence[int]] = None,
                                guard_copies: int = COPY_GUARD,
                                guard_nodes: int = NODE_GUARD) -> list[tuple[int, ...]]:
    """Distinct element sets of q inducing copies of p, first-found order."""
    seen = set()
    out = []
    for image in _copy_search(q, p, within, None, guard_nodes):
        key = tuple(sorted(image))
        if key not in seen:
            seen.add(key)
            out.append(key)
            if len(out) > guard_copies:
                raise GuardExceeded("induced-copy enumeration exceeded its guard")
    return out


def find_monochromatic_copy(q: Poset, p: Poset, coloring: Coloring,
                            within: Optional[Sequence[int]] = None,
                            guard_nodes: int = NODE_GUARD) -> Optional[MonoWitness]:
    """First induced copy of p in q whose comparable pairs share one color."""
    if coloring.kind != KIND_COMPARABILITY:
        raise ContractViolation("copy search expects a comparability coloring")
    for image in _copy_search(q, p, within, coloring, guard_nodes):
        color = None
        for a in range(p.n):
            for b in range(p.n):
                if p.lt(a, b):
                    color = coloring.color_of((min(image[a], image[b]),
                                               max(image[a], image[b])))
                    break
            if color is not None:
                break
        return MonoWitness(KIND_SUBPOSET, color, elements=tuple(image))
    return None


# -- counterexample-coloring search engine -------------------------------------------


def _propagate(key: int, color: int, r: int, assign, forb, s_assigned, s_color,
               s_dead, by_key, struct_keys, struct_size, trail) -> bool:
    """Assign and unit-propagate; False on conflict. All changes hit the trail."""
    queue = [(key, color)]
    while queue:
        k, c = queue.pop()
        cur = assign[k]
        if cur:
            if cur != c:
                return False
            continue
        if (forb[k] >> c) & 1:
            return False
        assign[k] = c
        trail.append((0, k))
        for sid in by_key[k]:
            if s_dead[sid]:
                continue
            if s_assigned[sid] == 0:
                s_color[sid] = c
                trail.append((1, sid))
            elif s_color[sid] != c:
                s_dead[sid] = True
                trail.append((2, sid))
                s_assigned[sid] += 1
                trail.append((3, sid))
                continue
            s_assigned[sid] += 1
            trail.append((3, sid))
            remaining = struct_size[sid] - s_assigned[sid]
            if remaining == 0:
                return False  # structure completed monochromatic
            if remaining == 1:
                hole = -1
                for kk in struct_keys[sid]:
                    if not assign[kk]:
                        hole = kk
                        break
                mask = forb[hole]
                bit = 1 << s_color[sid]
                if not mask & bit:
                    trail.append((4, hole, mask))
                    forb[hole] = mask | bit
                    allowed = [cc for cc in range(1, r + 1)
                               if not (forb[hole] >> cc) & 1]
                    if not allowed:
                        return False
                    if len(allowed) == 1:
                        queue.append((hole, allowed[0]))
    return True


def _undo(trail, mark, assign, forb, s_assigned, s_color, s_dead) -> None:
    while len(trail) > mark:
        entry = trail.pop()
        tag = entry[0]
        if tag == 0:
            assign[entry[1]] = 0
        elif tag == 1:
            s_color[entry[1]] = 0
        elif tag == 2:
            s_dead[entry[1]] = False
        elif tag == 3:
            s_assigned[entry[1]] -= 1
        else:
            forb[entry[1]] = entry[2]


def search_counterexample(num_keys: int, structures: Sequence[tuple[int, ...]], r: int,
                          node_guard: int = NODE_GUARD,
                          prefix: Sequence[tuple[int, int]] = (),
                          break_color_symmetry: bool = True
                          ) -> Optional[tuple[int, ...]]:
    """A coloring of 0..num_keys-1 leaving no structure monochromatic, or None.

    Deterministic: keys are branched in index order, colors in increasing
    order, and the first key is pinned to color 1 (color permutations act on
    the counterexample space). ``prefix`` pins initial (key, color) choices,
    which is how parallel shards split the tree.
    """
    if any(len(s) == 0 for s in structures):
        return None  # an empty structure is monochromatic under every coloring
    assign = [0] * num_keys
    forb = [0] * num_keys
    s_assigned = [0] * len(structures)
    s_color = [0] * len(structures)
    s_dead = [False] * len(structures)
    by_key = [[] for _ in range(num_keys)]
    struct_size = [len(s) for s in structures]
    for sid, keys in enumerate(structures):
        for k in keys:
            by_key[k].append(sid)
    trail: list = []
    state = (assign, forb, s_assigned, s_color, s_dead)
    for k, c in prefix:
        if not _propagate(k, c, r, assign, forb, s_assigned, s_color, s_dead,
                          by_key, structures, struct_size, trail):
            return None
    nodes = 0

    def dfs(cursor: int) -> Optional[tuple[int, ...]]:
        nonlocal nodes
        while cursor < num_keys and assign[cursor]:
            cursor += 1
        if cursor == num_keys:
            return tuple(assign)
        first_free = not any(assign)
        colors = (1,) if (break_color_symmetry and first_free) else range(1, r + 1)
        for c in colors:
            if (forb[cursor] >> c) & 1:
                continue
            nodes += 1
            if nodes > node_guard:
                raise GuardExceeded("counterexample search exceeded its node guard")
            if not nodes & 0xFFF:
                _check_deadline()
            mark = len(trail)
            if _propagate(cursor, c, r, assign, forb, s_assigned, s_color, s_dead,
                          by_key, structures, struct_size, trail):
                got = dfs(cursor + 1)
                if got is not None:
                    return got
            _undo(trail, mark, *state)
        return None

    return dfs(0)


def _shard_worker(args):
    num_keys, structures, r, node_guard, prefix = args
    try:
        return ("done", search_counterexample(
            num_keys, structures, r, node_guard, prefix=prefix,
            break_color_symmetry=False))
    except GuardExceeded:
        return ("guard", None)


def _parallel_counterexample(num_keys: int, structures, r: int,
                             node_guard: int, workers: int):
    """Shard the first branching levels over processes; any hit is then
    canonicalized by re-running the deterministic serial search."""
    depth = 1
    while r ** depth < workers * 2 and depth < num_keys:
        depth += 1
    prefixes = []

    def build(prefix, k):
        if len(prefix) == depth or k >= num_keys:
            prefixes.append(tuple(prefix))
            return
        colors = (1,) if k == 0 else range(1, r + 1)
        for c in colors:
            prefix.append((k, c))
            build(prefix, k + 1)
            prefix.pop()

    build([], 0)
    guard_hit = False
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(_shard_worker,
                               (num_keys, structures, r, node_guard, pre))
                   for pre in prefixes}
        found = None
        while futures:
            done, futures = wait(futures, return_when=FIRST_COMPLETED)
            for fut in done:
                status, result = fut.result()
                if status == "guard":
                    guard_hit = True
                elif result is not None:
                    found = result
            if found is not None:
                for fut in futures:
                    fut.cancel()
                break
    if found is not None:
        # Canonical first-found witness comes from the serial order.
        return search_counterexample(num_keys, structures, r, node_guard)
    if guard_hit:
        raise GuardExceeded("a parallel shard exceeded its node guard")
    return None


# -- verify / minimal-n -------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Tri-state outcome of a Ramsey verification."""

    status: str  # "true" | "false" | "inconclusive"
    counterexample: Optional[MapColoring] = None
    reason: str = ""

    def is_true(self) -> bool:
        return self.status == "true"


def _run_engine(keys: Sequence, structures, r, kind, node_guard, workers) -> Verdict:
    if any(len(s) == 0 for s in structures):
        return Verdict("true", reason="a key-free substructure is always monochromatic")
    if not structures:
        counter = MapColoring(kind, r, {key: 1 for key in keys})
        return Verdict("false", counterexample=counter,
                       reason="no candidate substructure exists")
    try:
        if workers > 1:
            colors = _parallel_counterexample(len(keys), structures, r,
                                              node_guard, workers)
        else:
            colors = search_counterexample(len(keys), structures, r, node_guard)
    except GuardExceeded as exc:
        return Verdict("inconclusive", reason=str(exc))
    if colors is None:
        return Verdict("true")
    assignment = {key: colors[i] for i, key in enumerate(keys)}
    return Verdict("false", counterexample=MapColoring(kind, r, assignment))


def verify_comparability_ramsey(p: Poset, q: Poset, r: int, *,
                                guard_copies: int = COPY_GUARD,
                                node_guard: int = NODE_GUARD,
                                workers: int = 1) -> Verdict:
    """True iff every r-coloring of q's comparabilities has a mono copy of p."""
    keys = comparability_keys(q)
    key_index = {key: i for i, key in enumerate(keys)}
    copies = enumerate_induced_copy_sets(q, p, guard_copies=guard_copies)
    structures = []
    seen = set()
    for elements in copies:
        struct = []
        for a, b in combinations(elements, 2):
            if q.comparable(a, b):
                struct.append(key_index[(a, b) if q.lt(a, b) else (b, a)])
        key = tuple(sorted(struct))
        if key not in seen:
            seen.add(key)
            structures.append(key)
    return _run_engine(keys, structures, r, KIND_COMPARABILITY, node_guard, workers)


def verify_grid_ramsey(kind: str, t: int, r: int, m: int, l: int, n: int, *,
                       guard_structures: int = STRUCTURE_GUARD,
                       guard_copies: int = COPY_GUARD,
                       node_guard: int = NODE_GUARD,
                       workers: int = 1) -> Verdict:
    """Subgrid or subposet-copy Ramsey verification on n^t at sizes (m, l)."""
    if not 1 <= m <= l <= n:
        raise ContractViolation("need 1 <= m <= l <= n")
    if kind == KIND_SUBGRID:
        work = math.comb(n, l) ** t * math.comb(l, m) ** t
        if work > guard_structures:
            return Verdict("inconclusive",
                           reason=f"subgrid structure universe {work} exceeds guard")
        keys = [sub.axes for sub in enumerate_subgrids(n, t, m)]
        key_index = {key: i for i, key in enumerate(keys)}
        structures = []
        for outer in enumerate_subgrids(n, t, l):
            structures.append(tuple(key_index[inner.axes]
                                    for inner in subgrids_within(outer, m)))
        return _run_engine(keys, structures, r, KIND_SUBGRID, node_guard, workers)
    if kind in (KIND_SUBPOSET, "subposet"):
        ambient = grid(n, t)
        small = grid(m, t)
        large = grid(l, t)
        try:
            keys = enumerate_induced_copy_sets(ambient, small, guard_copies=guard_copies)
            key_index = {key: i for i, key in enumerate(keys)}
            structures = []
            seen = set()
            for hull in enumerate_induced_copy_sets(ambient, large,
                                                    guard_copies=guard_copies):
                inner = enumerate_induced_copy_sets(ambient, small, within=hull,
                                                    guard_copies=guard_copies)
                struct = tuple(sorted(key_index[e] for e in inner))
                if struct not in seen:
                    seen.add(struct)
                    structures.append(struct)
        except GuardExceeded as exc:
            return Verdict("inconclusive", reason=str(exc))
        return _run_engine(keys, structures, r, KIND_SUBPOSET, node_guard, workers)
    raise ContractViolation(f"unknown kind {kind!r}")


def verify_ramsey_witness(p: Poset, q: Poset, r: int,
                          kind: str = KIND_COMPARABILITY, *,
                          m: Optional[int] = None, **guards) -> Verdict:
    """Spec-facing wrapper: comparability over posets, grid kinds over grids."""
    if kind == KIND_COMPARABILITY:
        return verify_comparability_ramsey(p, q, r, **guards)
    if not isinstance(p, GridPoset) or not isinstance(q, GridPoset):
        raise ContractViolation("grid kinds need GridPoset arguments")
    if m is None:
        raise ContractViolation("grid kinds need the subobject side m")
    return verify_grid_ramsey(kind, q.t, r, m, p.k, q.k, **guards)


@dataclass(frozen=True)
class MinRamseyResult:
    kind: str
    params: tuple
    n_found: Optional[int]
    status: str  # "found" | "not-found" | "inconclusive"
    verdicts: dict = field(hash=False, default_factory=dict)

    def counterexamples(self) -> dict:
        return {n: v.counterexample for n, v in self.verdicts.items()
                if v.status == "false"}


def min_ramsey_n(t: int, r: int, m: int, l: int, kind: str, n_max: int,
                 *, workers: int = 1, **guards) -> MinRamseyResult:
    """Smallest n <= n_max passing verification, counterexamples archived below.

    Inconclusive verdicts poison the result: minimality cannot be certified
    past a guard, so the status reports it instead of guessing.
    """
    verdicts: dict[int, Verdict] = {}
    params = (t, r, m, l)
    for n in range(l, n_max + 1):
        if kind == KIND_COMPARABILITY:
            v = verify_comparability_ramsey(grid(l, t), grid(n, t), r,
                                            workers=workers, **guards)
        else:
            v = verify_grid_ramsey(kind, t, r, m, l, n, workers=workers, **guards)
        verdicts[n] = v
        if v.status == "inconclusive":
            return MinRamseyResult(kind, params, None, "inconclusive", verdicts)
        if v.status == "true":
            return MinRamseyResult(kind, params, n, "found", verdicts)
    return MinRamseyResult(kind, params, None, "not-found", verdicts)


# -- multicolor bootstrap (two colors suffice) ----------------------------------------


@dataclass(frozen=True)
class BootstrapStep:
    """One 2-color step: every 2-coloring of ``witness`` yields a mono ``base``."""

    base: Poset
    witness: Poset


@dataclass(frozen=True)
class BootstrapResult:
    witness: MonoWitness
    levels: int


def verify_bootstrap_chain(steps: Sequence[BootstrapStep], **guards) -> bool:
    """Check every chain step with the 2-color verifier (small posets only)."""
    for step in steps:
        if not verify_comparability_ramsey(step.base, step.witness, 2, **guards).is_true():
            return False
    return True


def multicolor_bootstrap(steps: Sequence[BootstrapStep], coloring: Coloring,
                         *, guard_nodes: int = NODE_GUARD) -> BootstrapResult:
    """Execute the blue/red recursion turning 2-color witnesses into r-color ones.

    ``steps[i].witness`` must be ``steps[i+1].base``; the coloring is an
    r-coloring of the top witness with r = len(steps) + 1. Descends on the
    blue (first-color) side, recurses with one color fewer on the red side,
    and never uses more than r - 1 levels. A step that fails to deliver its
    guaranteed structure raises ChainStepFailure.
    """
    if not steps:
        raise ContractViolation("the witness chain must contain at least one step")
    for a, b in zip(steps, steps[1:]):
        if a.witness != b.base:
            raise ContractViolation("chain steps do not compose")
    if coloring.kind != KIND_COMPARABILITY:
        raise ContractViolation("bootstrap expects a comparability coloring")
    r = len(steps) + 1
    if coloring.r != r:
        raise ContractViolation(f"chain of {len(steps)} steps serves r = {r}")

    top = steps[-1].witness
    carrier = tuple(range(top.n))
    colors = list(range(1, r + 1))
    level = 0
    remaining = list(steps)
    while True:
        level += 1
        if level > r - 1:
            raise ChainStepFailure("recursion exceeded r - 1 levels")
        if len(remaining) == 1:
            found = find_monochromatic_copy(top, remaining[0].base, coloring,
                                            within=carrier, guard_nodes=guard_nodes)
            if found is None:
                raise ChainStepFailure("base step failed to deliver a monochromatic copy")
            return BootstrapResult(found, level)
        blue = colors[0]
        split = FunctionColoring(
            KIND_COMPARABILITY, 2,
            lambda key, _blue=blue: 1 if coloring.color_of(key) == _blue else 2)
        target = remaining[-1].base
        found = find_monochromatic_copy(top, target, split,
                                        within=carrier, guard_nodes=guard_nodes)
        if found is None:
            raise ChainStepFailure("a chain step failed to deliver its structure")
        if found.color in (1, None):
            inner = find_monochromatic_copy(top, remaining[0].base, coloring,
                                            within=found.elements,
                                            guard_nodes=guard_nodes)
            if inner is None:
                raise ChainStepFailure("blue descent lost the base structure")
            return BootstrapResult(inner, level)
        carrier = tuple(sorted(found.elements))
        colors = colors[1:]
        remaining = remaining[:-1]


# -- Boolean-lattice embedding ----------------------------------------------------


@dataclass(frozen=True)
class BooleanLatticeEmbedding:
    """x maps to the characteristic vector of its closed downset in 2^d, d = |P|."""

    dimension: int
    vectors: tuple[tuple[int, ...], ...]

    def grid_coords(self) -> tuple[tuple[int, ...], ...]:
        return self.vectors


def boolean_lattice_embed(p: Poset) -> BooleanLatticeEmbedding:
    d = p.n
    vectors = []
    for x in range(d):
        closed = p.dn[x] | (1 << x)
        vectors.append(tuple((closed >> j) & 1 for j in range(d)))
    for x in range(d):
        for y in range(d):
            if x == y:
                continue
            below = all(a <= b for a, b in zip(vectors[x], vectors[y]))
            if below != p.le(x, y):
                raise ContractViolation("downset embedding failed validation")
    return BooleanLatticeEmbedding(d, tuple(vectors))


# -- realizer-type probe for the t = 3 counterexample idea -----------------------------


def _cube() -> GridPoset:
    return grid(2, 3)


def _cube_incomparable_pairs(cube: GridPoset) -> list[tuple[int, int]]:
    return list(cube.incomparable_pairs())


def cube_trace_type(g3: GridPoset, elements: Sequence[int]
                    ) -> tuple[tuple, bool]:
    """Canonical coordinate-trace type of an induced 2^3 copy, plus tie-freeness.

    The trace records, per ambient axis and per incomparable pair of the
    abstract cube, the sign of the coordinate difference; the type is the
    minimum encoding over cube relabelings and axis permutations. A copy is
    tie-free when no incomparable pair is tied on any axis, i.e. the
    coordinates induce a genuine realizer.
    """
    cube = _cube()
    sub = induced_subposet(g3, elements)
    elems = sorted(set(elements))
    isos = list(enumerate_isomorphisms(cube, sub))
    if not isos:
        raise ContractViolation("element set does not induce a 2^3 copy")
    pairs = _cube_incomparable_pairs(cube)
    coords = {e: g3.coords(e) for e in elems}
    best = None
    tie_free = True
    first = True
    for iso in isos:
        ambient = [coords[elems[iso[x]]] for x in range(8)]
        table = []
        for axis in range(3):
            row = []
            for a, b in pairs:
                diff = ambient[b][axis] - ambient[a][axis]
                sign = (diff > 0) - (diff < 0)
                row.append(sign)
            table.append(tuple(row))
        if first:
            tie_free = all(0 not in row for row in table)
            first = False
        for perm in permutations(range(3)):
            enc = tuple(table[axis] for axis in perm)
            if best is None or enc < best:
                best = enc
    return best, tie_free


def product_trace_type() -> tuple:
    """The type induced by any 2^3 subgrid (the standard product realizer)."""
    g3 = grid(3, 3)
    elements = [g3.index(c) for c in
                ((0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1),
                 (1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1))]
    return cube_trace_type(g3, elements)[0]


@dataclass(frozen=True)
class ProbeReport:
    n: int
    copies_scanned: int
    census: tuple[tuple[tuple, int], ...]
    tie_free_census: tuple[tuple[tuple, int], ...]
    product_type: tuple

    @property
    def distinct_types(self) -> int:
        return len(self.census)

    def summary(self) -> str:
        lines = [f"2^3 subposet copies of {self.n}^3 scanned: {self.copies_scanned}",
                 f"distinct coordinate-trace types: {self.distinct_types}",
                 f"tie-free types: {len(self.tie_free_census)}"]
        for i, (tkey, count) in enumerate(self.census):
            flag = " (product)" if tkey == self.product_type else ""
            lines.append(f"type {i}: {count} copies{flag}")
        return "\n".join(lines)


def enumerate_tie_free_cube_copies(g3: GridPoset,
                                   guard_nodes: int = NODE_GUARD
                                   ) -> list[tuple[int, ...]]:
    """Element sets of n^3 inducing 2^3 with no incomparable pair tied on any axis.

    Tie-freeness is exactly what lets the coordinates induce a realizer, so
    the backtracking prunes on shared coordinates between incomparable slots
    as well as on the order relation.
    """
    if g3.t != 3:
        raise ContractViolation("the probe works on 3-dimensional grids")
    cube = _cube()
    # Atoms and coatoms first: they carry all nine incomparability constraints.
    slot_order = (1, 2, 4, 3, 5, 6, 0, 7)
    image = [-1] * 8
    coords = [g3.coords(e) for e in range(g3.n)]
    nodes = 0
    seen = set()
    out = []

    def rec(step: int, used: int):
        nonlocal nodes
        if step == 8:
            key = tuple(sorted(image))
            if key not in seen:
                seen.add(key)
                out.append(key)
            return
        slot = slot_order[step]
        for cand in range(g3.n):
            if (used >> cand) & 1:
                continue
            nodes += 1
            if nodes > guard_nodes:
                raise GuardExceeded("tie-free copy search exceeded its node guard")
            ok = True
            for prev_step in range(step):
                pslot = slot_order[prev_step]
                q_elt = image[pslot]
                if cube.lt(pslot, slot) != g3.lt(q_elt, cand) or \
                        cube.lt(slot, pslot) != g3.lt(cand, q_elt):
                    ok = False
                    break
                if cube.incomparable(pslot, slot):
                    ca, cb = coords[q_elt], coords[cand]
                    if ca[0] == cb[0] or ca[1] == cb[1] or ca[2] == cb[2]:
                        ok = False
                        break
            if ok:
                image[slot] = cand
                rec(step + 1, used | (1 << cand))
                image[slot] = -1

    rec(0, 0)
    return out


def realizer_type_probe(n: int, scope: str = "tie-free",
                        guard_copies: int = 500_000,
                        guard_nodes: int = NODE_GUARD) -> ProbeReport:
    """Census the coordinate-trace types of 2^3 subposets of n^3.

    ``scope="tie-free"`` classifies exactly the copies whose coordinates
    induce a realizer (the colorable ones in the t = 3 counterexample idea);
    ``scope="all"`` additionally scans tied copies, which is feasible only
    for very small n. A monochromatic 8^3 subposet would need every tie-free
    copy inside it to generate one realizer type.
    """
    g3 = grid(n, 3)
    census: dict[tuple, int] = {}
    tie_census: dict[tuple, int] = {}
    if scope == "all":
        copies = enumerate_induced_copy_sets(g3, _cube(), guard_copies=guard_copies,
                                             guard_nodes=guard_nodes)
        for elements in copies:
            tkey, tie_free = cube_trace_type(g3, elements)
            census[tkey] = census.get(tkey, 0) + 1
            if tie_free:
                tie_census[tkey] = tie_census.get(tkey, 0) + 1
    elif scope == "tie-free":
        copies = enumerate_tie_free_cube_copies(g3, guard_nodes=guard_nodes)
        if len(copies) > guard_copies:
            raise GuardExceeded("tie-free census exceeded its copy guard")
        for elements in copies:
            tkey, tie_free = cube_trace_type(g3, elements)
            if not tie_free:
                raise ContractViolation("tie-free enumerator produced a tied copy")
            census[tkey] = census.get(tkey, 0) + 1
            tie_census[tkey] = tie_census.get(tkey, 0) + 1
    else:
        raise ContractViolation(f"unknown probe scope {scope!r}")
    return ProbeReport(
        n=n,
        copies_scanned=len(copies),
        census=tuple(sorted(census.items())),
        tie_free_census=tuple(sorted(tie_census.items())),
        product_type=product_trace_type(),
    )


def embed_cube_by_extensions(n: int, exts: Sequence[LinearExtension],
                             value_sets: Optional[Sequence[Sequence[int]]] = None
                             ) -> tuple[int, ...]:
    """Separated 2^3 copy of n^3 built from a realizer triple's positions.

    Axis i of the image of x is value_sets[i][position of x in exts[i]];
    value sets default to 0..7, which needs n >= 8.
    """
    cube = _cube()
    if len(exts) != 3:
        raise ContractViolation("a cube embedding needs exactly three orders")
    for ext in exts:
        if not is_linear_extension(cube, ext):
            raise ContractViolation("order is not a linear extension of the cube")
    if value_sets is None:
        value_sets = [list(range(8))] * 3
    g3 = grid(n, 3)
    image = []
    for x in range(8):
        coordsx = tuple(sorted(value_sets[i])[exts[i].index(x)] for i in range(3))
        image.append(g3.index(coordsx))
    return tuple(image)


def cube_realizer_triples(limit: Optional[int] = None) -> list[tuple[LinearExtension, ...]]:
    """Ordered extension triples of 2^3 whose set is a realizer."""
    cube = _cube()
    exts = linear_extensions(cube, cap=8)
    above = [e.above_masks() for e in exts]
    out = []
    for i in range(len(exts)):
        for j in range(len(exts)):
            rows_ij = [a & b for a, b in zip(above[i], above[j])]
            for k in range(len(exts)):
                inter = tuple(a & b for a, b in zip(rows_ij, above[k]))
                if inter == cube.up:
                    out.append((exts[i], exts[j], exts[k]))
                    if limit is not None and len(out) >= limit:
                        return out
    return out
