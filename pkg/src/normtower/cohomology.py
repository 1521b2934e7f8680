"""Normalized 2-cocycles on Z/a with values in Z/r (trivial action).

Values are exponents: a cocycle with values in the cyclic group generated by
a unit alpha of order r is stored as its base-alpha logarithm table. The
central objects are the block-carry cocycle, its scaled full-wrap companion,
and the explicit isomorphism between the two group extensions they define.

H^2(Z/a, Z/r) is cyclic of order gcd(a, r); the sum of the c(i, 1) column
realizes the isomorphism, giving a complete invariant that the brute-force
coboundary search validates independently.
"""

from dataclasses import dataclass
from math import gcd

from .errors import InternalCheckError, NotACocycle, SearchSpaceTooLarge


@dataclass(frozen=True)
class Cocycle2:
    """Table c(i, j) for 0 <= i, j < a, entries in Z/r, c(0,.) = c(.,0) = 0."""

    a: int
    r: int
    table: tuple

    def __post_init__(self):
        if self.a < 1 or self.r < 1:
            raise ValueError("a and r must be positive")
        if len(self.table) != self.a or any(len(row) != self.a for row in self.table):
            raise ValueError("table must be a x a")
        if any(x % self.r != x for row in self.table for x in row):
            raise ValueError("entries must be reduced mod r")
        if any(self.table[0][j] for j in range(self.a)) or any(
            self.table[i][0] for i in range(self.a)
        ):
            raise ValueError("cocycle is not normalized")

    def __call__(self, i, j):
        return self.table[i % self.a][j % self.a]


def zero_cocycle(a, r):
    return Cocycle2(a, r, tuple((0,) * a for _ in range(a)))


def carrying_cocycle(a, b, r):
    """c(i,j) = floor((i+j)/b) - floor(i/b) - floor(j/b) mod r, integer sum.

    For b dividing a this is the indicator of a carry: it equals 1 exactly
    when (i mod b) + (j mod b) >= b. With b = a it is the full wrap-around
    cocycle of the cyclic extension Z/ar of Z/a.
    """
    if b < 1 or a % b != 0:
        raise ValueError("b must be a positive divisor of a")
    table = tuple(
        tuple(((i + j) // b - i // b - j // b) % r for j in range(a)) for i in range(a)
    )
    return Cocycle2(a, r, table)


def scale_cocycle(c, q):
    """Multiply every value by q in Z/r (the q-th power on cohomology)."""
    table = tuple(tuple(x * q % c.r for x in row) for row in c.table)
    return Cocycle2(c.a, c.r, table)


def is_cocycle(c):
    """Exhaustive normalized 2-cocycle identity over all index triples."""
    a, r = c.a, c.r
    t = c.table
    for i in range(a):
        for j in range(a):
            left = t[i][j]
            ij = (i + j) % a
            for k in range(a):
                if (left + t[ij][k] - t[j][k] - t[i][(j + k) % a]) % r:
                    return False
    return True


def coboundary(a, r, f):
    """The 2-coboundary of a normalized 1-cochain f (f[0] must be 0)."""
    if len(f) != a or f[0] % r != 0:
        raise ValueError("f must be a normalized cochain of length a")
    table = tuple(
        tuple((f[i] + f[j] - f[(i + j) % a]) % r for j in range(a)) for i in range(a)
    )
    return Cocycle2(a, r, table)


# ---------------------------------------------------------------------------
# extension groups
# ---------------------------------------------------------------------------


class ExtensionGroup:
    """The central extension of Z/a by Z/r defined by a 2-cocycle.

    Elements are pairs (m, i); the product is
    (m1, i1)(m2, i2) = (m1 + m2 + c(i1, i2), i1 + i2).
    Associativity over all element triples reduces to the cocycle identity
    because the m-components cancel, so the is_cocycle check at construction
    verifies it exhaustively.
    """

    def __init__(self, cocycle):
        if not is_cocycle(cocycle):
            raise NotACocycle("table fails the 2-cocycle identity")
        self.cocycle = cocycle
        self.a = cocycle.a
        self.r = cocycle.r
        self.elements = [(m, i) for m in range(self.r) for i in range(self.a)]
        self.identity = (0, 0)

    @property
    def order(self):
        return self.a * self.r

    def op(self, x, y):
        m1, i1 = x
        m2, i2 = y
        return ((m1 + m2 + self.cocycle(i1, i2)) % self.r, (i1 + i2) % self.a)

    def order_of(self, x):
        k, y = 1, x
        while y != self.identity:
            y = self.op(y, x)
            k += 1
            if k > self.order:
                raise InternalCheckError("element order exceeds group order")
        return k

    def element_orders(self):
        return tuple(sorted(self.order_of(x) for x in self.elements))

    def is_abelian(self):
        c = self.cocycle
        return all(
            c(i, j) == c(j, i) for i in range(self.a) for j in range(self.a)
        )


def extension_group(c):
    return ExtensionGroup(c)


def groups_isomorphic(g1, g2, max_order=200):
    """Backtracking isomorphism test between two small extension groups."""
    if g1.order != g2.order:
        return False
    if g1.order > max_order:
        raise SearchSpaceTooLarge(f"group order {g1.order} > {max_order}")
    if g1.element_orders() != g2.element_orders():
        return False
    if g1.is_abelian() != g2.is_abelian():
        return False

    # greedy generating sequence for g1, with each element's word recorded
    # as (index of earlier element, index of generator)
    gens = []
    reached = {g1.identity: None}
    build = [g1.identity]
    for x in g1.elements:
        if x in reached:
            continue
        gens.append(x)
        frontier = list(build)
        while frontier:
            nxt = []
            for y in frontier:
                for gi, g in enumerate(gens):
                    z = g1.op(y, g)
                    if z not in reached:
                        reached[z] = (y, gi)
                        build.append(z)
                        nxt.append(z)
            frontier = nxt
    order_of_gen = [g1.order_of(g) for g in gens]

    by_order = {}
    for y in g2.elements:
        by_order.setdefault(g2.order_of(y), []).append(y)

    def try_images(images):
        phi = {g1.identity: g2.identity}
        for x in build[1:]:
            prev, gi = reached[x]
            phi[x] = g2.op(phi[prev], images[gi])
        if len(set(phi.values())) != g1.order:
            return False
        for x in g1.elements:
            for y in g1.elements:
                if phi[g1.op(x, y)] != g2.op(phi[x], phi[y]):
                    return False
        return True

    def assign(k, images):
        if k == len(gens):
            return try_images(images)
        for y in by_order.get(order_of_gen[k], ()):
            if assign(k + 1, images + [y]):
                return True
        return False

    return assign(0, [])


# ---------------------------------------------------------------------------
# the carry/wrap isomorphism
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IsomorphismWitness:
    """A verified isomorphism between two cocycle extensions of Z/a by Z/r."""

    a: int
    b: int
    r: int
    q: int
    source: object  # ExtensionGroup from the scaled full-wrap cocycle
    target: object  # ExtensionGroup from the block-carry cocycle
    mapping: dict


def extension_isomorphism(a, b, r):
    """Identify the scaled full-wrap extension with the block-carry extension.

    With q = a/b, the cocycles scale(carrying(a,a,r), q) and carrying(a,b,r)
    define isomorphic extensions via (m, i) -> (m + floor(i/b), i). The map
    is verified exhaustively: bijective, multiplicative on every pair, fixes
    the central Z/r, and induces the identity on the quotient Z/a.
    """
    if b < 1 or a % b != 0:
        raise ValueError("b must be a positive divisor of a")
    q = a // b
    phi = scale_cocycle(carrying_cocycle(a, a, r), q)
    psi = carrying_cocycle(a, b, r)
    h_phi = extension_group(phi)
    h_psi = extension_group(psi)
    mapping = {(m, i): ((m + i // b) % r, i) for m, i in h_phi.elements}
    if len(set(mapping.values())) != h_phi.order:
        raise InternalCheckError("carry-shift map is not a bijection")
    for x in h_phi.elements:
        for y in h_phi.elements:
            if mapping[h_phi.op(x, y)] != h_psi.op(mapping[x], mapping[y]):
                raise InternalCheckError(f"carry-shift map fails at {x} * {y}")
    for m in range(r):
        if mapping[(m, 0)] != (m, 0):
            raise InternalCheckError("carry-shift map moves the center")
    if any(mapping[(m, i)][1] != i for m, i in h_phi.elements):
        raise InternalCheckError("carry-shift map does not fix the quotient")
    return IsomorphismWitness(a, b, r, q, h_phi, h_psi, mapping)


# ---------------------------------------------------------------------------
# cohomology class invariants
# ---------------------------------------------------------------------------


def h2_invariant(c):
    """Sum of the c(i, 1) column mod gcd(a, r): a complete class invariant.

    Coboundaries shift the full sum by a * f(1), which dies mod gcd(a, r),
    and the full-wrap cocycle hits 1, so this maps H^2 onto Z/gcd(a, r)
    isomorphically.
    """
    if not is_cocycle(c):
        raise NotACocycle("invariant of a non-cocycle is undefined")
    d = gcd(c.a, c.r)
    return sum(c.table[i][1 % c.a] for i in range(c.a)) % d if d > 1 else 0


def cohomologous_bruteforce(c1, c2, limit=10**6):
    """First normalized 1-cochain f with c1 - c2 = coboundary(f), else None.

    Searches all r^(a-1) candidates in lexicographic order; the returned f
    satisfies c1(i,j) = c2(i,j) + f(i) + f(j) - f(i+j) mod r.
    """
    if (c1.a, c1.r) != (c2.a, c2.r):
        raise ValueError("cocycles live on different groups")
    a, r = c1.a, c1.r
    if r ** (a - 1) > limit:
        raise SearchSpaceTooLarge(f"{r}^{a - 1} cochains exceed limit {limit}")
    diff = tuple(
        tuple((x - y) % r for x, y in zip(row1, row2))
        for row1, row2 in zip(c1.table, c2.table)
    )
    from itertools import product

    for tail in product(range(r), repeat=a - 1):
        f = (0,) + tail
        if all(
            (f[i] + f[j] - f[(i + j) % a]) % r == diff[i][j]
            for i in range(a)
            for j in range(a)
        ):
            return f
    return None


def restrict_cocycle(c, index):
    """Pull back to the subgroup of the given index in Z/a.

    The subgroup is generated by `index`, so the restricted table is
    c'(i, j) = c(index * i, index * j) on Z/(a/index).
    """
    if index < 1 or c.a % index != 0:
        raise ValueError("index must divide a")
    sub = c.a // index
    table = tuple(
        tuple(c.table[index * i][index * j] for j in range(sub)) for i in range(sub)
    )
    return Cocycle2(sub, c.r, table)
