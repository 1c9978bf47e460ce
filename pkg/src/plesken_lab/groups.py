"""Finite groups as dense index tables: construction, homomorphisms, subgroups.

Every group lives on element indices ``0..order-1`` with a fully validated
Cayley table, so all downstream algebra reduces to table lookups plus exact
scalar arithmetic.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainMismatch,
    IndexOutOfRange,
    InvalidHom,
    InvalidSpec,
    ParseError,
    SearchTooLarge,
)

ASSOC_FULL_CHECK_LIMIT = 512
ASSOC_SAMPLE_TRIPLES = 20_000
SUBGROUP_ORDER_LIMIT = 64
HOM_SEARCH_LIMIT = 10**7

_SPEC_KINDS = {"C": "cyclic", "S": "symmetric", "D": "dihedral", "H": "heisenberg"}
_KIND_LETTERS = {v: k for k, v in _SPEC_KINDS.items()}
_SPEC_RE = re.compile(r"([CSDH])([0-9]+)", re.IGNORECASE)


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class GroupSpec:
    """Names one group from the built-in families."""

    kind: str
    param: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "klein4":
            if self.param is not None:
                raise InvalidSpec("klein4 takes no parameter")
            return
        if self.kind not in _KIND_LETTERS:
            raise InvalidSpec(f"unknown group kind {self.kind!r}")
        if not isinstance(self.param, int) or self.param < 1:
            raise InvalidSpec(f"{self.kind} needs a positive integer parameter")
        if self.kind == "heisenberg" and not _is_odd_prime(self.param):
            raise InvalidSpec(
                f"heisenberg parameter must be an odd prime, got {self.param}"
            )

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        """Parse spec strings like ``C6``, ``S3``, ``D4``, ``K4``, ``H3`` (case-insensitive)."""
        s = text.strip()
        if s.upper() == "K4":
            return cls("klein4")
        m = _SPEC_RE.fullmatch(s)
        if m is None:
            raise ParseError(f"cannot parse group spec {text!r}")
        return cls(_SPEC_KINDS[m.group(1).upper()], int(m.group(2)))

    def __str__(self) -> str:
        if self.kind == "klein4":
            return "K4"
        return f"{_KIND_LETTERS[self.kind]}{self.param}"


def _validate_table(rows: tuple[tuple[int, ...], ...]) -> tuple[int, tuple[int, ...]]:
    """Check the group axioms on a Cayley table; return (identity, inverse table).

    Associativity is checked on every triple up to ASSOC_FULL_CHECK_LIMIT
    elements and on a fixed random sample above that.
    """
    n = len(rows)
    arr = np.asarray(rows, dtype=np.int64)
    if arr.shape != (n, n):
        raise ValueError("Cayley table must be square")
    if n and (arr.min() < 0 or arr.max() >= n):
        raise ValueError("Cayley table entries out of range")
    idx = np.arange(n)
    if not (np.sort(arr, axis=1) == idx).all():
        raise ValueError("some row is not a permutation of 0..n-1")
    if not (np.sort(arr, axis=0) == idx[:, None]).all():
        raise ValueError("some column is not a permutation of 0..n-1")
    units = [x for x in range(n) if (arr[x] == idx).all() and (arr[:, x] == idx).all()]
    if len(units) != 1:
        raise ValueError("table does not have exactly one two-sided identity")
    identity = units[0]
    inv = np.argmax(arr == identity, axis=1)
    if not (arr[idx, inv] == identity).all() or not (arr[inv, idx] == identity).all():
        raise ValueError("some element lacks a two-sided inverse")
    if n <= ASSOC_FULL_CHECK_LIMIT:
        for x in range(n):
            if not np.array_equal(arr[arr[x]], arr[x][arr]):
                raise ValueError(f"associativity fails at element {x}")
    else:
        rng = np.random.default_rng(0x5EED)
        xs, ys, zs = rng.integers(0, n, size=(3, ASSOC_SAMPLE_TRIPLES))
        if not (arr[arr[xs, ys], zs] == arr[xs, arr[ys, zs]]).all():
            raise ValueError("associativity fails on sampled triples")
    return identity, tuple(int(v) for v in inv)


class FiniteGroup:
    """A finite group on indices ``0..order-1`` with precomputed tables.

    Instances are immutable after construction and validate the full group
    axioms when built.  Subgroups carry ``ambient`` and ``embedding`` so each
    local index maps back to an element of the parent group.
    """

    __slots__ = (
        "order",
        "cayley",
        "inv",
        "identity",
        "labels",
        "spec",
        "ambient",
        "embedding",
        "label_index",
    )

    def __init__(
        self,
        cayley,
        labels=None,
        spec: GroupSpec | None = None,
        ambient: "FiniteGroup | None" = None,
        embedding=None,
    ) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in cayley)
        if not rows:
            raise ValueError("a group needs at least the identity element")
        identity, inv = _validate_table(rows)
        self.order = len(rows)
        self.cayley = rows
        self.inv = inv
        self.identity = identity
        if labels is None:
            labels = [str(i) for i in range(self.order)]
        self.labels = tuple(str(x) for x in labels)
        if len(self.labels) != self.order:
            raise ValueError("labels length does not match group order")
        self.spec = spec
        self.ambient = ambient
        self.embedding = tuple(int(v) for v in embedding) if embedding is not None else None
        self.label_index = {lab: i for i, lab in enumerate(self.labels)}

    def mul(self, x: int, y: int) -> int:
        self._check_index(x)
        self._check_index(y)
        return self.cayley[x][y]

    def inverse(self, x: int) -> int:
        self._check_index(x)
        return self.inv[x]

    def involution_count(self) -> int:
        """Number of x with x*x = identity (identity itself included)."""
        return sum(1 for x in range(self.order) if self.cayley[x][x] == self.identity)

    def _check_index(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise IndexOutOfRange(f"element index {x} outside 0..{self.order - 1}")

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and self.cayley == other.cayley

    def __hash__(self) -> int:
        return hash((self.order, self.identity, self.cayley[0]))

    def __repr__(self) -> str:
        name = str(self.spec) if self.spec is not None else f"order-{self.order} group"
        return f"FiniteGroup({name})"


def mul(G: FiniteGroup, x: int, y: int) -> int:
    return G.mul(x, y)


def inverse(G: FiniteGroup, x: int) -> int:
    return G.inverse(x)


# ---------------------------------------------------------------------------
# built-in families


def build_group(spec: GroupSpec) -> FiniteGroup:
    """Construct and validate the group named by ``spec``."""
    builder = {
        "cyclic": _cyclic_group,
        "symmetric": _symmetric_group,
        "dihedral": _dihedral_group,
        "klein4": _klein_four_group,
        "heisenberg": _heisenberg_group,
    }[spec.kind]
    return builder(spec)


def group_from_name(text: str) -> FiniteGroup:
    return build_group(GroupSpec.parse(text))


def _power_label(base: str, k: int) -> str:
    if k == 0:
        return "e"
    if k == 1:
        return base
    return f"{base}^{k}"


def _cyclic_group(spec: GroupSpec) -> FiniteGroup:
    n = spec.param
    cayley = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = [_power_label("a", k) for k in range(n)]
    return FiniteGroup(cayley, labels, spec)


def _klein_four_group(spec: GroupSpec) -> FiniteGroup:
    cayley = [[i ^ j for j in range(4)] for i in range(4)]
    return FiniteGroup(cayley, ["e", "a", "b", "c"], spec)


def _dihedral_group(spec: GroupSpec) -> FiniteGroup:
    # index = flip*n + rotation, element s^flip r^rot with s r s = r^{-1}
    n = spec.param
    order = 2 * n

    def prod(i: int, j: int) -> int:
        f1, r1 = divmod(i, n)
        f2, r2 = divmod(j, n)
        if f2 == 0:
            return f1 * n + (r1 + r2) % n
        return (1 - f1) * n + (r2 - r1) % n

    cayley = [[prod(i, j) for j in range(order)] for i in range(order)]
    labels = [_power_label("r", k) for k in range(n)]
    labels += ["s" if k == 0 else "s" + _power_label("r", k) for k in range(n)]
    return FiniteGroup(cayley, labels, spec)


def _cycle_label(perm: tuple[int, ...]) -> str:
    n = len(perm)
    seen = [False] * n
    sep = "" if n <= 9 else ","
    parts = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + sep.join(str(p + 1) for p in cycle) + ")")
    return "".join(parts) if parts else "e"


def _symmetric_group(spec: GroupSpec) -> FiniteGroup:
    # elements in lexicographic one-line order; product x*y applies y first
    n = spec.param
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    cayley = [
        [index[tuple(px[py[i]] for i in range(n))] for py in perms] for px in perms
    ]
    labels = [_cycle_label(p) for p in perms]
    return FiniteGroup(cayley, labels, spec)


def _heisenberg_group(spec: GroupSpec) -> FiniteGroup:
    # upper unitriangular 3x3 matrices over Z_p, encoded as (a, b, c) triples
    p = spec.param
    triples = list(itertools.product(range(p), repeat=3))

    def code(a: int, b: int, c: int) -> int:
        return (a * p + b) * p + c

    cayley = [
        [
            code((a1 + a2) % p, (b1 + b2 + a1 * c2) % p, (c1 + c2) % p)
            for (a2, b2, c2) in triples
        ]
        for (a1, b1, c1) in triples
    ]
    labels = [f"({a},{b},{c})" for (a, b, c) in triples]
    return FiniteGroup(cayley, labels, spec)


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class GroupHom:
    """Total map between groups, given by an image table on element indices."""

    domain: FiniteGroup
    codomain: FiniteGroup
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "image", tuple(int(v) for v in self.image))
        if len(self.image) != self.domain.order:
            raise InvalidHom("image table length does not match the domain order")
        for v in self.image:
            if not 0 <= v < self.codomain.order:
                raise InvalidHom(f"image entry {v} outside the codomain")

    def __call__(self, x: int) -> int:
        return self.image[x]


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(range(G.order)))


def trivial_hom(G: FiniteGroup, H: FiniteGroup) -> GroupHom:
    return GroupHom(G, H, (H.identity,) * G.order)


def validate_hom(h: GroupHom) -> bool:
    """True iff the image table is multiplicative on every pair."""
    G, H, img = h.domain, h.codomain, h.image
    if img[G.identity] != H.identity:
        return False
    for x in range(G.order):
        hx = img[x]
        row = G.cayley[x]
        hrow = H.cayley[hx]
        for y in range(G.order):
            if img[row[y]] != hrow[img[y]]:
                return False
    return True


def compose_homs(f2: GroupHom, f1: GroupHom) -> GroupHom:
    """The composite x -> f2(f1(x)); f1 is applied first."""
    if f1.codomain != f2.domain:
        raise DomainMismatch("codomain of the first map must equal the domain of the second")
    h = GroupHom(f1.domain, f2.codomain, tuple(f2.image[v] for v in f1.image))
    if not validate_hom(h):
        raise InvalidHom("composite map is not multiplicative")
    return h


def closure(G: FiniteGroup, elements) -> frozenset[int]:
    """Smallest subgroup of G containing ``elements`` (worklist product closure)."""
    known = {G.identity, *elements}
    processed: list[int] = []
    queue = sorted(known)
    table = G.cayley
    while queue:
        x = queue.pop()
        processed.append(x)
        for y in processed:
            for z in (table[x][y], table[y][x]):
                if z not in known:
                    known.add(z)
                    queue.append(z)
    return frozenset(known)


def generating_set(G: FiniteGroup) -> list[int]:
    """Small generating set, grown greedily (largest gain, smallest index ties)."""
    gens: list[int] = []
    generated: frozenset[int] = frozenset({G.identity})
    while len(generated) < G.order:
        best_x = -1
        best: frozenset[int] | None = None
        for x in range(G.order):
            if x in generated:
                continue
            cand = closure(G, generated | {x})
            if best is None or len(cand) > len(best):
                best_x, best = x, cand
                if len(cand) == G.order:
                    break
        gens.append(best_x)
        generated = best
    return gens


def _extend_generator_images(
    G: FiniteGroup, H: FiniteGroup, gens: list[int], images: tuple[int, ...]
) -> tuple[int, ...] | None:
    """Propagate generator images along the Cayley graph; None on any conflict."""
    img: list[int | None] = [None] * G.order
    img[G.identity] = H.identity
    stack = [G.identity]
    while stack:
        x = stack.pop()
        hx = img[x]
        for g, h in zip(gens, images):
            y = G.cayley[x][g]
            v = H.cayley[hx][h]
            if img[y] is None:
                img[y] = v
                stack.append(y)
            elif img[y] != v:
                return None
    if any(v is None for v in img):
        return None
    return tuple(img)


def enumerate_homs(G: FiniteGroup, H: FiniteGroup) -> list[GroupHom]:
    """All homomorphisms G -> H, sorted lexicographically by image table.

    Generator images are enumerated exhaustively, extended by word closure,
    then validated against the full multiplication table.
    """
    gens = generating_set(G)
    if H.order ** len(gens) > HOM_SEARCH_LIMIT:
        raise SearchTooLarge(
            f"hom search size {H.order}^{len(gens)} exceeds {HOM_SEARCH_LIMIT}"
        )
    tables = []
    for images in itertools.product(range(H.order), repeat=len(gens)):
        table = _extend_generator_images(G, H, gens, images)
        if table is None:
            continue
        cand = GroupHom(G, H, table)
        if validate_hom(cand):
            tables.append(table)
    return [GroupHom(G, H, t) for t in sorted(set(tables))]


# ---------------------------------------------------------------------------
# subgroups


def _as_subgroup(G: FiniteGroup, members: list[int]) -> FiniteGroup:
    pos = {g: i for i, g in enumerate(members)}
    cayley = [[pos[G.cayley[x][y]] for y in members] for x in members]
    labels = [G.labels[g] for g in members]
    return FiniteGroup(cayley, labels, spec=None, ambient=G, embedding=tuple(members))


def enumerate_subgroups(G: FiniteGroup) -> list[FiniteGroup]:
    """All subgroups generated by at most two elements, smallest first.

    Each result is a FiniteGroup whose ``embedding`` maps local indices back
    into G.  Covers every subgroup whenever all subgroups of G are
    2-generated, which holds for the built-in families up to the order guard.
    """
    if G.order > SUBGROUP_ORDER_LIMIT:
        raise SearchTooLarge(
            f"subgroup enumeration needs order <= {SUBGROUP_ORDER_LIMIT}, got {G.order}"
        )
    subsets = {frozenset({G.identity}), frozenset(range(G.order))}
    for a in range(G.order):
        for b in range(a, G.order):
            subsets.add(closure(G, {a, b}))
    ordered = sorted(subsets, key=lambda s: (len(s), sorted(s)))
    return [_as_subgroup(G, sorted(s)) for s in ordered]
