"""Hat elements g - g^{-1}: canonical bases, brackets, structure constants.

The span of all hat elements is closed under the commutator bracket, so it
carries a Lie algebra structure of its own; everything here manipulates
coordinates over a canonical choice of hat representatives.
"""

from __future__ import annotations

from .algebra import AlgebraElement, ONE, Scalar, ZERO, lie_bracket
from .errors import (
    BasisMismatch,
    IndexOutOfRange,
    InvalidHom,
    InvalidPrime,
    NotInSpan,
)
from .groups import FiniteGroup, GroupHom, _is_odd_prime, validate_hom


def hat(G: FiniteGroup, g: int) -> AlgebraElement:
    """The antisymmetrized element g - g^{-1}; zero for involutions and identity."""
    if not 0 <= g < G.order:
        raise IndexOutOfRange(f"element index {g} outside 0..{G.order - 1}")
    gi = G.inv[g]
    coeffs = {g: ONE}
    coeffs[gi] = coeffs.get(gi, ZERO) - ONE
    return AlgebraElement(G, coeffs)


class PleskenBasis:
    """Ordered hat representatives: one of each pair {g, g^{-1}}, smaller index first."""

    __slots__ = ("group", "reps", "_positions")

    def __init__(self, group: FiniteGroup, reps) -> None:
        reps = tuple(int(g) for g in reps)
        seen: dict[int, int] = {}
        for k, g in enumerate(reps):
            gi = group.inv[g]
            if gi == g:
                raise ValueError(f"representative {g} is an involution or the identity")
            if g in seen or gi in seen:
                raise ValueError(f"pair of {g} appears more than once")
            seen[g] = k
            seen[gi] = k
        expected = (group.order - group.involution_count()) // 2
        if len(reps) != expected:
            raise ValueError(f"basis has {len(reps)} reps, expected {expected}")
        self.group = group
        self.reps = reps
        positions: dict[int, tuple[int, int]] = {}
        for k, g in enumerate(reps):
            positions[g] = (k, 1)
            positions[group.inv[g]] = (k, -1)
        self._positions = positions

    @property
    def dimension(self) -> int:
        return len(self.reps)

    def position(self, g: int) -> tuple[int, int] | None:
        """(basis position, sign) for a non-involution g, else None."""
        return self._positions.get(g)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, PleskenBasis):
            return NotImplemented
        return self.group == other.group and self.reps == other.reps

    def __hash__(self) -> int:
        return hash((self.group, self.reps))

    def __repr__(self) -> str:
        return f"PleskenBasis({self.group!r}, dim={self.dimension})"


def canonical_basis(G: FiniteGroup) -> PleskenBasis:
    """Representatives g with g != g^{-1} and index(g) < index(g^{-1})."""
    return PleskenBasis(G, (g for g in range(G.order) if g < G.inv[g]))


class PleskenElement:
    """Sparse coordinate vector over a PleskenBasis."""

    __slots__ = ("basis", "coords")

    def __init__(self, basis: PleskenBasis, coords=None) -> None:
        clean: dict[int, Scalar] = {}
        for k, c in (coords or {}).items():
            k = int(k)
            if not 0 <= k < basis.dimension:
                raise IndexOutOfRange(f"coordinate {k} outside basis of dim {basis.dimension}")
            if not isinstance(c, Scalar):
                c = Scalar.of(c)
            if c:
                clean[k] = c
        self.basis = basis
        self.coords = clean

    @classmethod
    def zero(cls, basis: PleskenBasis) -> "PleskenElement":
        return cls(basis)

    @classmethod
    def unit(cls, basis: PleskenBasis, k: int, coeff: Scalar = ONE) -> "PleskenElement":
        return cls(basis, {k: coeff})

    def terms(self) -> list[tuple[int, Scalar]]:
        return sorted(self.coords.items())

    def is_zero(self) -> bool:
        return not self.coords

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PleskenElement):
            return NotImplemented
        return self.basis == other.basis and self.coords == other.coords

    __hash__ = None

    def __add__(self, other: "PleskenElement") -> "PleskenElement":
        if self.basis != other.basis:
            raise BasisMismatch("operands use different bases")
        acc = dict(self.coords)
        for k, c in other.coords.items():
            acc[k] = acc.get(k, ZERO) + c
        return PleskenElement(self.basis, acc)

    def __sub__(self, other: "PleskenElement") -> "PleskenElement":
        return self + (-other)

    def __neg__(self) -> "PleskenElement":
        return PleskenElement(self.basis, {k: -c for k, c in self.coords.items()})

    def __rmul__(self, k) -> "PleskenElement":
        if not isinstance(k, Scalar):
            k = Scalar.of(k)
        return PleskenElement(self.basis, {m: k * c for m, c in self.coords.items()})

    __mul__ = __rmul__

    def __repr__(self) -> str:
        labels = self.basis.group.labels
        body = " + ".join(f"({c})*{labels[self.basis.reps[k]]}^" for k, c in self.terms())
        return f"PleskenElement({body or '0'})"


def reduce(x: AlgebraElement, basis: PleskenBasis | None = None) -> PleskenElement:
    """Coordinates of x over the hat basis.

    Hat multiples are subtracted greedily per representative; a nonzero
    residual means x has a component outside the span and raises NotInSpan.
    """
    b = basis if basis is not None else canonical_basis(x.group)
    if b.group != x.group:
        raise BasisMismatch("element and basis use different groups")
    residual = dict(x.coeffs)
    coords: dict[int, Scalar] = {}
    for k, g in enumerate(b.reps):
        c = residual.pop(g, None)
        if c is None:
            continue
        coords[k] = c
        gi = x.group.inv[g]
        r = residual.get(gi, ZERO) + c
        if r:
            residual[gi] = r
        else:
            residual.pop(gi, None)
    if residual:
        raise NotInSpan(
            f"nonzero component outside the hat span at indices {sorted(residual)}"
        )
    return PleskenElement(b, coords)


def embed(x: PleskenElement) -> AlgebraElement:
    """The group-algebra element sum_k coords[k] * (rep_k - rep_k^{-1})."""
    G = x.basis.group
    acc: dict[int, Scalar] = {}
    for k, c in x.coords.items():
        g = x.basis.reps[k]
        gi = G.inv[g]
        acc[g] = acc.get(g, ZERO) + c
        acc[gi] = acc.get(gi, ZERO) - c
    return AlgebraElement(G, acc)


def plesken_bracket(x: PleskenElement, y: PleskenElement) -> PleskenElement:
    """Commutator of the embedded elements, reduced back to coordinates."""
    if x.basis != y.basis:
        raise BasisMismatch("operands use different bases")
    return reduce(lie_bracket(embed(x), embed(y)), x.basis)


def bracket_expansion_check(G: FiniteGroup, g: int, h: int) -> bool:
    """True iff [g^, h^] equals (gh)^ - (gh^{-1})^ - (g^{-1}h)^ + (g^{-1}h^{-1})^."""
    lhs = lie_bracket(hat(G, g), hat(G, h))
    gi, hi = G.inv[g], G.inv[h]
    t = G.cayley
    rhs = hat(G, t[g][h]) - hat(G, t[g][hi]) - hat(G, t[gi][h]) + hat(G, t[gi][hi])
    return lhs == rhs


def structure_constants(B: PleskenBasis) -> list[list[list[Scalar]]]:
    """Table c[k][l][m] with [e_k, e_l] = sum_m c[k][l][m] e_m; antisymmetric in (k, l)."""
    d = B.dimension
    table = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for k in range(d):
        for l in range(k + 1, d):
            br = plesken_bracket(PleskenElement.unit(B, k), PleskenElement.unit(B, l))
            for m, c in br.coords.items():
                table[k][l][m] = c
                table[l][k][m] = -c
    return table


class HatLift:
    """Induced map between hat-span Lie algebras, stored by its action on basis hats.

    Two lifts are equal exactly when they agree on every basis hat of the
    domain, regardless of which group homomorphism produced them.
    """

    __slots__ = ("hom", "domain_basis", "codomain_basis", "action")

    def __init__(
        self,
        hom: GroupHom,
        domain_basis: PleskenBasis,
        codomain_basis: PleskenBasis,
        action: tuple[PleskenElement, ...],
    ) -> None:
        self.hom = hom
        self.domain_basis = domain_basis
        self.codomain_basis = codomain_basis
        self.action = action

    def __call__(self, x: PleskenElement) -> PleskenElement:
        if x.basis != self.domain_basis:
            raise BasisMismatch("element does not live in the lift's domain")
        out = PleskenElement.zero(self.codomain_basis)
        for k, c in x.coords.items():
            out = out + c * self.action[k]
        return out

    def is_zero_map(self) -> bool:
        return all(v.is_zero() for v in self.action)

    def is_identity_map(self) -> bool:
        if self.domain_basis != self.codomain_basis:
            return False
        return all(
            self.action[k] == PleskenElement.unit(self.domain_basis, k)
            for k in range(self.domain_basis.dimension)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HatLift):
            return NotImplemented
        return (
            self.domain_basis == other.domain_basis
            and self.codomain_basis == other.codomain_basis
            and self.action == other.action
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"HatLift(dim {self.domain_basis.dimension} -> "
            f"{self.codomain_basis.dimension})"
        )


def lift_hom_hat(f: GroupHom) -> HatLift:
    """The map sending each basis hat g^ to (f(g))^ in the codomain's basis."""
    if not validate_hom(f):
        raise InvalidHom("image table is not a group homomorphism")
    domain_basis = canonical_basis(f.domain)
    codomain_basis = canonical_basis(f.codomain)
    action = tuple(
        reduce(hat(f.codomain, f.image[g]), codomain_basis) for g in domain_basis.reps
    )
    return HatLift(f, domain_basis, codomain_basis, action)


# ---------------------------------------------------------------------------
# closed form for upper unitriangular matrices over Z_p


def _invert_3x3_mod(m, p: int):
    """General 3x3 matrix inverse mod p via adjugate and determinant."""
    (a, b, c), (d, e, f), (g, h, i) = m
    det = (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % p
    dinv = pow(det, -1, p)
    adj = (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )
    return tuple(tuple((dinv * v) % p for v in row) for row in adj)


def heisenberg_hat_closed_form(p: int, a: int, b: int, c: int) -> list[list[int]]:
    """A - A^{-1} for A = [[1,a,b],[0,1,c],[0,0,1]] over Z_p, p an odd prime.

    Returns [[0, 2a, 2b-ac], [0, 0, 2c], [0, 0, 0]] mod p, cross-checked
    against the difference computed by general matrix arithmetic.
    """
    if not _is_odd_prime(p):
        raise InvalidPrime(f"p must be an odd prime, got {p}")
    a %= p
    b %= p
    c %= p
    closed = (
        (0, (2 * a) % p, (2 * b - a * c) % p),
        (0, 0, (2 * c) % p),
        (0, 0, 0),
    )
    mat = ((1, a, b), (0, 1, c), (0, 0, 1))
    inv = _invert_3x3_mod(mat, p)
    direct = tuple(
        tuple((mat[i][j] - inv[i][j]) % p for j in range(3)) for i in range(3)
    )
    if direct != closed:
        raise ArithmeticError("closed form disagrees with direct matrix arithmetic")
    return [list(row) for row in closed]
