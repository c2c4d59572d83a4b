"""Constructors for the standard quandle families.

Every constructor returns a validated FiniteQuandle with elements 0..n-1
in a deterministic enumeration order, so tables are reproducible across
runs and platforms.
"""

from __future__ import annotations

from itertools import product
from math import prod

from . import perms
from .core import FiniteQuandle, validate
from .fields import FiniteField, FiniteFieldSpec
from .groups import GroupTable
from .perms import PermGroup


class NonInvertibleT(ValueError):
    """The coefficient does not act invertibly on the module."""


class EvenCharacteristic(ValueError):
    """Spherical quandles need odd characteristic."""


class SeedNotInvolution(ValueError):
    """Reflection quandle seeds must be involutions."""


class AlexanderModuleSpec:
    """A finite module Z/d1 + ... + Z/dk with an invertible endomorphism T.

    torsion_orders lists (d1, ..., dk); t_matrix is a k x k integer matrix
    acting on coordinate columns.  Elements are enumerated mixed-radix over
    torsion_orders with the first coordinate least significant, so the
    element of coordinates (x1, ..., xk) has index x1 + d1*(x2 + d2*(...)).
    """

    def __init__(self, torsion_orders, t_matrix):
        self.torsion_orders = tuple(int(d) for d in torsion_orders)
        if not self.torsion_orders or any(d < 1 for d in self.torsion_orders):
            raise ValueError("torsion orders must be positive")
        k = len(self.torsion_orders)
        rows = tuple(tuple(int(v) for v in row) for row in t_matrix)
        if len(rows) != k or any(len(r) != k for r in rows):
            raise ValueError(f"T must be {k}x{k}")
        # T descends to the quotient module iff d_i * T[j][i] == 0 mod d_j
        for i, di in enumerate(self.torsion_orders):
            for j, dj in enumerate(self.torsion_orders):
                if (di * rows[j][i]) % dj != 0:
                    raise ValueError(
                        f"T entry ({j},{i}) does not respect the torsion orders"
                    )
        # normalize entries of row j mod d_j
        self.t_matrix = tuple(
            tuple(rows[j][i] % self.torsion_orders[j] for i in range(k))
            for j in range(k)
        )
        self.size = prod(self.torsion_orders)
        if not self._t_is_bijective():
            raise NonInvertibleT(f"T = {self.t_matrix} is not invertible on the module")
        self._connected = None
        self._t_perm = None

    @classmethod
    def scalar(cls, torsion_orders, t: int) -> "AlexanderModuleSpec":
        orders = tuple(int(d) for d in torsion_orders)
        k = len(orders)
        return cls(orders, [[t if i == j else 0 for j in range(k)] for i in range(k)])

    # -- element plumbing ---------------------------------------------------

    def coords(self, index: int) -> tuple[int, ...]:
        out = []
        for d in self.torsion_orders:
            out.append(index % d)
            index //= d
        return tuple(out)

    def index(self, coords) -> int:
        value = 0
        for x, d in zip(reversed(tuple(coords)), reversed(self.torsion_orders)):
            value = value * d + (x % d)
        return value

    def elements(self):
        return range(self.size)

    def add(self, a, b) -> tuple[int, ...]:
        return tuple(
            (x + y) % d for x, y, d in zip(a, b, self.torsion_orders)
        )

    def sub(self, a, b) -> tuple[int, ...]:
        return tuple(
            (x - y) % d for x, y, d in zip(a, b, self.torsion_orders)
        )

    def neg(self, a) -> tuple[int, ...]:
        return tuple((-x) % d for x, d in zip(a, self.torsion_orders))

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.torsion_orders)

    def t_apply(self, v) -> tuple[int, ...]:
        return tuple(
            sum(self.t_matrix[j][i] * v[i] for i in range(len(v))) % dj
            for j, dj in enumerate(self.torsion_orders)
        )

    def t_power(self, v, m: int) -> tuple[int, ...]:
        """T^m v for any integer m, using T's finite order."""
        t = self.t_order()
        m %= t
        for _ in range(m):
            v = self.t_apply(v)
        return v

    def one_minus_t(self, v) -> tuple[int, ...]:
        return self.sub(v, self.t_apply(v))

    def _t_is_bijective(self) -> bool:
        images = {self.t_apply(self.coords(i)) for i in self.elements()}
        return len(images) == self.size

    def t_order(self) -> int:
        """Multiplicative order of T on the module (the quandle type)."""
        if self._t_perm is None:
            n = 1
            v = {i: self.coords(i) for i in self.elements()}
            cur = {i: self.t_apply(c) for i, c in v.items()}
            while any(cur[i] != v[i] for i in self.elements()):
                cur = {i: self.t_apply(c) for i, c in cur.items()}
                n += 1
            self._t_perm = n
        return self._t_perm

    def is_connected(self) -> bool:
        """Connected iff (1 - T) is onto the module."""
        if self._connected is None:
            images = {self.one_minus_t(self.coords(i)) for i in self.elements()}
            self._connected = len(images) == self.size
        return self._connected

    def label(self) -> str:
        orders = ",".join(str(d) for d in self.torsion_orders)
        mat = ";".join(
            ",".join(str(v) for v in row) for row in self.t_matrix
        )
        return f"alexander orders={orders} t={mat}"

    def __eq__(self, other):
        return (
            isinstance(other, AlexanderModuleSpec)
            and self.torsion_orders == other.torsion_orders
            and self.t_matrix == other.t_matrix
        )

    def __hash__(self):
        return hash((self.torsion_orders, self.t_matrix))

    def __repr__(self):
        return f"AlexanderModuleSpec({self.torsion_orders}, {self.t_matrix})"


def alexander(spec: AlexanderModuleSpec) -> FiniteQuandle:
    """The Alexander quandle x <| y = y + T(x - y) on the module."""
    n = spec.size
    coords = [spec.coords(i) for i in range(n)]
    table = []
    for x in range(n):
        cx = coords[x]
        row = []
        for y in range(n):
            cy = coords[y]
            row.append(spec.index(spec.add(cy, spec.t_apply(spec.sub(cx, cy)))))
        table.append(row)
    labels = ["(" + ",".join(str(v) for v in c) + ")" for c in coords]
    return validate(table, labels=labels)


def dihedral(n: int) -> FiniteQuandle:
    """The dihedral quandle R_n: x <| y = 2y - x mod n."""
    if n < 1:
        raise ValueError("need n >= 1")
    table = [[(2 * y - x) % n for y in range(n)] for x in range(n)]
    return validate(table)


def trivial(n: int) -> FiniteQuandle:
    """The trivial quandle: x <| y = x."""
    if n < 1:
        raise ValueError("need n >= 1")
    return validate([[x] * n for x in range(n)])


def _vectors(field: FiniteField, length: int, nonzero_only=False):
    vs = [tuple(v) for v in product(range(field.q), repeat=length)]
    if nonzero_only:
        zero = (0,) * length
        vs = [v for v in vs if v != zero]
    return vs


def symplectic(g: int, field) -> FiniteQuandle:
    """Nonzero vectors of F_q^{2g} with x <| y = <x, y> y + x.

    <x, y> is the standard symplectic form sum(x_{2i} y_{2i+1} - x_{2i+1} y_{2i}).
    """
    if g < 1:
        raise ValueError("need g >= 1")
    F = field if isinstance(field, FiniteField) else FiniteField.of(field)
    vecs = _vectors(F, 2 * g, nonzero_only=True)
    index = {v: i for i, v in enumerate(vecs)}

    def form(x, y):
        s = 0
        for i in range(g):
            a = F.mul(x[2 * i], y[2 * i + 1])
            b = F.mul(x[2 * i + 1], y[2 * i])
            s = F.add(s, F.sub(a, b))
        return s

    table = []
    for x in vecs:
        row = []
        for y in vecs:
            c = form(x, y)
            row.append(index[tuple(F.add(F.mul(c, yv), xv) for xv, yv in zip(x, y))])
        table.append(row)
    labels = ["(" + ",".join(str(v) for v in vec) + ")" for vec in vecs]
    return validate(table, labels=labels)


def symplectic_translations(g: int, field) -> list[tuple[tuple[int, ...], ...]]:
    """The linear maps kappa(y): x -> <x, y> y + x as matrices (rows)."""
    F = field if isinstance(field, FiniteField) else FiniteField.of(field)
    m = 2 * g
    vecs = _vectors(F, m, nonzero_only=True)

    def form(x, y):
        s = 0
        for i in range(g):
            s = F.add(
                s, F.sub(F.mul(x[2 * i], y[2 * i + 1]), F.mul(x[2 * i + 1], y[2 * i]))
            )
        return s

    mats = []
    for y in vecs:
        cols = []
        for j in range(m):
            e = tuple(1 if i == j else 0 for i in range(m))
            c = form(e, y)
            cols.append(tuple(F.add(F.mul(c, yv), ev) for ev, yv in zip(e, y)))
        # store by rows
        mats.append(tuple(tuple(cols[j][i] for j in range(m)) for i in range(m)))
    return mats


def spherical(n: int, field) -> FiniteQuandle:
    """Unit vectors of F_q^{n+1} (odd q) with x <| y = 2<x, y> y - x.

    <., .> is the standard dot product; unit means <x, x> = 1.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    F = field if isinstance(field, FiniteField) else FiniteField.of(field)
    if F.p == 2:
        raise EvenCharacteristic("spherical quandles need odd characteristic")

    def dot(x, y):
        s = 0
        for a, b in zip(x, y):
            s = F.add(s, F.mul(a, b))
        return s

    vecs = [v for v in _vectors(F, n + 1) if dot(v, v) == 1]
    index = {v: i for i, v in enumerate(vecs)}
    two = F.embed(2)
    table = []
    for x in vecs:
        row = []
        for y in vecs:
            c = F.mul(two, dot(x, y))
            row.append(index[tuple(F.sub(F.mul(c, yv), xv) for xv, yv in zip(x, y))])
        table.append(row)
    labels = ["(" + ",".join(str(v) for v in vec) + ")" for vec in vecs]
    return validate(table, labels=labels)


def spherical_translations(n: int, field) -> list[tuple[tuple[int, ...], ...]]:
    """The linear maps kappa(y): x -> 2<x, y> y - x as matrices (rows)."""
    F = field if isinstance(field, FiniteField) else FiniteField.of(field)
    if F.p == 2:
        raise EvenCharacteristic("spherical quandles need odd characteristic")
    m = n + 1

    def dot(x, y):
        s = 0
        for a, b in zip(x, y):
            s = F.add(s, F.mul(a, b))
        return s

    vecs = [v for v in _vectors(F, m) if dot(v, v) == 1]
    two = F.embed(2)
    mats = []
    for y in vecs:
        cols = []
        for j in range(m):
            e = tuple(1 if i == j else 0 for i in range(m))
            c = F.mul(two, dot(e, y))
            cols.append(tuple(F.sub(F.mul(c, yv), ev) for ev, yv in zip(e, y)))
        mats.append(tuple(tuple(cols[j][i] for j in range(m)) for i in range(m)))
    return mats


def core(group: GroupTable) -> FiniteQuandle:
    """The core quandle of a group: g <| h = h g^-1 h."""
    n = group.order
    table = [
        [group.mul(group.mul(h, group.inv(g)), h) for h in range(n)]
        for g in range(n)
    ]
    return validate(table, labels=group.labels)


def conjugation_reflections(w: PermGroup, seeds) -> FiniteQuandle:
    """The quandle of reflections: conjugacy closure of involution seeds.

    Elements are the W-conjugates of the seeds with a <| b = b^-1 a b;
    they are sorted lexicographically as image tuples for a stable order.
    """
    seeds = [tuple(s) for s in seeds]
    for s in seeds:
        if perms.is_identity(s) or not perms.is_identity(perms.compose(s, s)):
            raise SeedNotInvolution(f"{s} is not an involution")
        if not w.contains(s):
            raise ValueError(f"seed {s} is not an element of the group")
    closure = set(seeds)
    queue = list(seeds)
    while queue:
        s = queue.pop(0)
        for g in w.generators:
            c = perms.compose(perms.compose(perms.inverse(g), s), g)
            if c not in closure:
                closure.add(c)
                queue.append(c)
    elems = sorted(closure)
    index = {p: i for i, p in enumerate(elems)}
    table = [
        [
            index[perms.compose(perms.compose(perms.inverse(b), a), b)]
            for b in elems
        ]
        for a in elems
    ]
    labels = [perms.format_perm(p) for p in elems]
    return validate(table, labels=labels)


def coxeter_reflection_quandle(kind: str) -> FiniteQuandle:
    """Reflection quandles for named Coxeter groups.

    'A<n>' is the symmetric group S_{n+1} with all transpositions;
    'I2(<m>)' is the dihedral group of the m-gon with all reflections.
    """
    kind = kind.strip().upper()
    if kind.startswith("A"):
        n = int(kind[1:])
        if n < 1:
            raise ValueError("need A1 or higher")
        degree = n + 1
        gens = []
        for i in range(n):
            img = list(range(degree))
            img[i], img[i + 1] = img[i + 1], img[i]
            gens.append(tuple(img))
        w = PermGroup(degree, gens)
        return conjugation_reflections(w, gens)
    if kind.startswith("I2(") and kind.endswith(")"):
        m = int(kind[3:-1])
        if m < 3:
            raise ValueError("need I2(3) or higher")
        rot = tuple((i + 1) % m for i in range(m))
        ref = tuple((-i) % m for i in range(m))
        w = PermGroup(m, [rot, ref])
        seeds = [ref, perms.compose(ref, rot)]
        return conjugation_reflections(w, seeds)
    if kind == "B2":
        return coxeter_reflection_quandle("I2(4)")
    if kind == "G2":
        return coxeter_reflection_quandle("I2(6)")
    raise ValueError(f"unknown Coxeter label {kind!r}")
