"""The adjoint group of a connected Alexander quandle, made computable.

For a connected Alexander quandle X over (M, T) the adjoint group --- the
group generated by symbols e_x subject to e_{x <| y} = e_y^-1 e_x e_y ---
is modelled exactly on the set Z x M x coker(mu) with

    (n, x, a) * (m, y, b) = (n + m, T^m x + y, a + b + [T^m x (x) y]),

where mu: M (x) M -> M (x) M is mu(x (x) y) = x (x) y - Ty (x) x and
e_x = (1, x, 0).  The first coordinate is the total exponent map; the
element (n, x, a) acts on the module by v -> T^n v + (1 - T) x.

This module also provides the (non-homogeneous) bar complex of a group,
the chain maps c_k from the rack complex into it, the explicit homotopies
h_k, and verification routines for the degree-2 and degree-3 homotopy
identities, plus bar-complex H_2 for small groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, prod

from .core import FiniteQuandle
from .families import AlexanderModuleSpec, alexander
from .groups import GroupTable
from .homology import boundary_chain
from .intlin import (
    AbelianGroupInvariants,
    SparseIntMatrix,
    cokernel,
    homology_at,
    smith_normal_form,
)


class NotConnected(ValueError):
    """The construction needs a connected Alexander quandle."""


class IdentityFailed(ValueError):
    """A chain-level identity that must hold exactly does not."""

    def __init__(self, lemma: str, tup, difference):
        self.lemma = lemma
        self.tuple = tup
        self.difference = difference
        super().__init__(f"{lemma} fails at {tup}: nonzero difference {difference}")


@dataclass(frozen=True)
class ClauwensElement:
    """An adjoint-group element (n, x, alpha) in canonical form.

    x is a module coordinate tuple; alpha is the reduced coordinate tuple
    of a coker(mu) class (componentwise modulo the invariant factors).
    """

    n: int
    x: tuple[int, ...]
    alpha: tuple[int, ...]


class ClauwensGroup:
    """Exact model of the adjoint group of a connected Alexander quandle."""

    def __init__(self, spec: AlexanderModuleSpec):
        if not spec.is_connected():
            raise NotConnected(f"{spec!r} is not connected")
        self.spec = spec
        k = len(spec.torsion_orders)
        self._k = k
        # M (x) M is generated by e_i (x) e_j with order gcd(d_i, d_j);
        # mu sends e_i (x) e_j to e_i (x) e_j - sum_a T[a][j] e_a (x) e_i.
        orders = spec.torsion_orders
        self.tensor_orders = [
            gcd(orders[i], orders[j]) for i in range(k) for j in range(k)
        ]
        kk = k * k
        rel = SparseIntMatrix(kk, 2 * kk)
        for i in range(k):
            for j in range(k):
                col = i * k + j
                rel.add(i * k + j, col, 1)
                for a in range(k):
                    tval = spec.t_matrix[a][j]
                    if tval:
                        rel.add(a * k + i, col, -tval)
        for g in range(kk):
            rel.set(g, kk + g, self.tensor_orders[g])
        diag, U, _V = smith_normal_form(rel, transforms=True)
        if len(diag) != kk:
            raise AssertionError("tensor square of a finite module must be finite")
        self._snf_diag = diag
        self._snf_U = U
        self._coker_positions = [i for i, d in enumerate(diag) if d > 1]
        self.coker_invariants = AbelianGroupInvariants(
            0, tuple(diag[i] for i in self._coker_positions)
        )
        self.coker_order = prod(
            diag[i] for i in self._coker_positions
        ) if self._coker_positions else 1
        self.identity = ClauwensElement(0, spec.zero(), self._alpha_zero())

    # -- coker(mu) plumbing --------------------------------------------------

    def _alpha_zero(self) -> tuple[int, ...]:
        return (0,) * len(self._coker_positions)

    def _reduce_tensor(self, vec) -> tuple[int, ...]:
        """Canonical coker(mu) coordinates of a vector in Z^{k*k}."""
        out = []
        for pos in self._coker_positions:
            row = self._snf_U[pos]
            s = 0
            for g, v in enumerate(vec):
                if v:
                    s += row[g] * v
            out.append(s % self._snf_diag[pos])
        return tuple(out)

    def _alpha_add(self, a, b) -> tuple[int, ...]:
        return tuple(
            (x + y) % self._snf_diag[pos]
            for x, y, pos in zip(a, b, self._coker_positions)
        )

    def _alpha_neg(self, a) -> tuple[int, ...]:
        return tuple(
            (-x) % self._snf_diag[pos] for x, pos in zip(a, self._coker_positions)
        )

    def tensor_class(self, u, v) -> tuple[int, ...]:
        """[u (x) v] in coker(mu) for module coordinate tuples u, v."""
        k = self._k
        vec = [0] * (k * k)
        for i in range(k):
            if u[i]:
                for j in range(k):
                    if v[j]:
                        vec[i * k + j] = u[i] * v[j]
        return self._reduce_tensor(vec)

    def coker_elements(self):
        """All coker(mu) coordinate tuples, mixed-radix enumeration."""
        ranges = [range(self._snf_diag[pos]) for pos in self._coker_positions]
        if not ranges:
            yield ()
            return
        for combo in product(*reversed(ranges)):
            yield tuple(reversed(combo))

    # -- group operations -----------------------------------------------------

    def e(self, x_index: int) -> ClauwensElement:
        """The generator e_x for the module element of the given index."""
        return ClauwensElement(1, self.spec.coords(x_index), self._alpha_zero())

    def mul(self, g: ClauwensElement, h: ClauwensElement) -> ClauwensElement:
        spec = self.spec
        tx = spec.t_power(g.x, h.n)
        x = spec.add(tx, h.x)
        alpha = self._alpha_add(
            self._alpha_add(g.alpha, h.alpha), self.tensor_class(tx, h.x)
        )
        return ClauwensElement(g.n + h.n, x, alpha)

    def inv(self, g: ClauwensElement) -> ClauwensElement:
        spec = self.spec
        y = spec.neg(spec.t_power(g.x, -g.n))
        beta = self._alpha_add(
            self._alpha_neg(g.alpha),
            self._alpha_neg(self.tensor_class(spec.t_power(g.x, -g.n), y)),
        )
        return ClauwensElement(-g.n, y, beta)

    def power(self, g: ClauwensElement, m: int) -> ClauwensElement:
        if m < 0:
            return self.power(self.inv(g), -m)
        acc = self.identity
        for _ in range(m):
            acc = self.mul(acc, g)
        return acc

    def epsilon(self, g: ClauwensElement) -> int:
        """Total exponent: the sum of generator exponents."""
        return g.n

    def act_index(self, v_index: int, g: ClauwensElement) -> int:
        """Right action on the quandle: v . (n, x, a) = T^n v + (1 - T) x."""
        spec = self.spec
        v = spec.coords(v_index)
        w = spec.add(spec.t_power(v, g.n), spec.one_minus_t(g.x))
        return spec.index(w)

    def acts_trivially(self, g: ClauwensElement) -> bool:
        return all(self.act_index(v, g) == v for v in self.spec.elements())

    def kernel_slice(self):
        """All elements (0, x, alpha) --- the epsilon = 0, n = 0 slice."""
        for x_index in self.spec.elements():
            coords = self.spec.coords(x_index)
            for alpha in self.coker_elements():
                yield ClauwensElement(0, coords, alpha)

    def verify(self, sample_limit: int = 6):
        """Construction checks: defining relations, action compatibility,
        associativity and inverses on a deterministic sample."""
        spec = self.spec
        n = spec.size
        quandle = alexander(spec)
        for x in range(n):
            for y in range(n):
                lhs = self.e(quandle.apply(x, y))
                ey = self.e(y)
                rhs = self.mul(self.mul(self.inv(ey), self.e(x)), ey)
                if lhs != rhs:
                    raise AssertionError(f"relation fails at ({x}, {y})")
                if self.act_index(x, ey) != quandle.apply(x, y):
                    raise AssertionError(f"action mismatch at ({x}, {y})")
        gens = [self.e(x) for x in range(min(n, sample_limit))]
        gens.append(self.inv(self.e(0)))
        for a in gens:
            b = self.inv(a)
            if self.mul(a, b) != self.identity or self.mul(b, a) != self.identity:
                raise AssertionError("inverse fails")
            for c in gens:
                for d in gens:
                    if self.mul(self.mul(a, c), d) != self.mul(a, self.mul(c, d)):
                        raise AssertionError("associativity fails")
        return True


def clauwens_group(spec: AlexanderModuleSpec) -> ClauwensGroup:
    """Build and self-check the adjoint-group model."""
    g = ClauwensGroup(spec)
    g.verify()
    return g


def action_kernel(spec: AlexanderModuleSpec):
    """Kernel of the action on the quandle: t_X * Z  x  coker(mu).

    Enumerates the kernel elements with |exponent| <= 2 * type and certifies
    they are exactly { (m, 0, alpha) : type | m }.  Returns
    (type, coker invariants).
    """
    model = ClauwensGroup(spec)
    t = spec.t_order()
    found = []
    for m in range(-2 * t, 2 * t + 1):
        for x_index in spec.elements():
            coords = spec.coords(x_index)
            for alpha in model.coker_elements():
                g = ClauwensElement(m, coords, alpha)
                if model.acts_trivially(g):
                    found.append(g)
    expected = {
        (m, spec.zero(), alpha)
        for m in range(-2 * t, 2 * t + 1)
        if m % t == 0
        for alpha in model.coker_elements()
    }
    got = {(g.n, g.x, g.alpha) for g in found}
    if got != expected:
        raise AssertionError("action kernel does not have the product shape")
    positives = sorted(g.n for g in found if g.n > 0)
    if not positives or positives[0] != t:
        raise AssertionError("least positive kernel exponent is not the type")
    return t, model.coker_invariants


def central_power_check(spec: AlexanderModuleSpec) -> bool:
    """e_x^t is one central element independent of x (t the quandle type)."""
    model = ClauwensGroup(spec)
    t = spec.t_order()
    powers = {model.power(model.e(x), t) for x in spec.elements()}
    if len(powers) != 1:
        return False
    z = next(iter(powers))
    return all(
        model.mul(z, model.e(y)) == model.mul(model.e(y), z)
        for y in spec.elements()
    )


def _abelian_invariants_from_mul(elements, mul) -> AbelianGroupInvariants:
    """Invariant factors of a finite abelian group given by multiplication.

    Presents the group on all its elements with one relation per product
    and reads the abelianization off the Smith form; for abelian groups
    this is the group itself.
    """
    elems = list(elements)
    index = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    m = SparseIntMatrix(n, n * n)
    col = 0
    for a in elems:
        for b in elems:
            c = mul(a, b)
            m.add(index[a], col, 1)
            m.add(index[b], col, 1)
            m.add(index[c], col, -1)
            col += 1
    inv = cokernel(m)
    if inv.free_rank != 0:
        raise AssertionError("finite group with free abelianization")
    return inv


def eisermann_h2(spec: AlexanderModuleSpec) -> AbelianGroupInvariants:
    """H_2 of the quandle from the stabilizer side of the model.

    Inside the adjoint model, the elements of exponent zero fixing the
    base point form exactly the slice {(0, 0, alpha)}; its invariants as
    an abstract abelian group are the second quandle homology.
    """
    model = ClauwensGroup(spec)
    base = 0
    members = [
        g
        for g in model.kernel_slice()
        if model.act_index(base, g) == base
    ]
    expected = {ClauwensElement(0, spec.zero(), a) for a in model.coker_elements()}
    if set(members) != expected:
        raise AssertionError("stabilizer slice is not {(0, 0, alpha)}")
    for a in members:
        for b in members:
            if model.mul(a, b) != model.mul(b, a):
                raise AssertionError("stabilizer slice is not abelian")
    return _abelian_invariants_from_mul(members, model.mul)


# ---------------------------------------------------------------------------
# bar complex machinery


@dataclass
class BarChain:
    """A formal integer combination of k-tuples of group elements."""

    degree: int
    terms: dict

    @classmethod
    def zero(cls, degree: int) -> "BarChain":
        return cls(degree, {})

    def add_term(self, tup, coeff: int):
        if len(tup) != self.degree:
            raise ValueError(f"tuple {tup} has wrong degree")
        w = self.terms.get(tup, 0) + coeff
        if w:
            self.terms[tup] = w
        else:
            del self.terms[tup]

    def __add__(self, other: "BarChain") -> "BarChain":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = BarChain(self.degree, dict(self.terms))
        for t, c in other.terms.items():
            out.add_term(t, c)
        return out

    def __sub__(self, other: "BarChain") -> "BarChain":
        return self + other.scale(-1)

    def scale(self, k: int) -> "BarChain":
        if k == 0:
            return BarChain.zero(self.degree)
        return BarChain(self.degree, {t: k * c for t, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, BarChain)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"BarChain(degree={self.degree}, terms={len(self.terms)})"


def bar_boundary(chain: BarChain, mul) -> BarChain:
    """Non-homogeneous bar differential.

    d(g_1, ..., g_k) = (g_2, ..., g_k)
                       + sum_{i=1..k-1} (-1)^i (g_1, ..., g_i g_{i+1}, ..., g_k)
                       + (-1)^k (g_1, ..., g_{k-1});
    degree 1 maps to zero (the two empty faces cancel).
    """
    k = chain.degree
    if k < 1:
        raise ValueError("bar boundary needs degree >= 1")
    out = BarChain.zero(k - 1)
    if k == 1:
        return out
    for tup, coeff in chain.terms.items():
        out.add_term(tup[1:], coeff)
        for i in range(1, k):
            merged = tup[: i - 1] + (mul(tup[i - 1], tup[i]),) + tup[i + 1 :]
            out.add_term(merged, -coeff if i % 2 else coeff)
        out.add_term(tup[:-1], -coeff if k % 2 else coeff)
    return out


class HomotopyVerifier:
    """Chain maps c_k, homotopies h_k and the exact identities they satisfy.

    Works inside the adjoint model of a connected Alexander quandle; t is
    the quandle type.  All identities are verified term-for-term on formal
    chains, never just in homology.
    """

    def __init__(self, spec: AlexanderModuleSpec):
        self.spec = spec
        self.model = ClauwensGroup(spec)
        self.quandle = alexander(spec)
        self.t = spec.t_order()
        self._e = [self.model.e(x) for x in range(spec.size)]
        self._pow: dict[tuple[int, int], ClauwensElement] = {}

    def e(self, x: int) -> ClauwensElement:
        return self._e[x]

    def e_pow(self, x: int, j: int) -> ClauwensElement:
        key = (x, j)
        if key not in self._pow:
            self._pow[key] = self.model.power(self._e[x], j)
        return self._pow[key]

    # chain maps ------------------------------------------------------------

    def c1(self, x: int) -> BarChain:
        out = BarChain.zero(1)
        out.add_term((self.e(x),), 1)
        return out

    def c2(self, x: int, y: int) -> BarChain:
        q = self.quandle
        out = BarChain.zero(2)
        out.add_term((self.e(x), self.e(y)), 1)
        out.add_term((self.e(y), self.e(q.apply(x, y))), -1)
        return out

    def c3(self, x: int, y: int, z: int) -> BarChain:
        q = self.quandle
        xy, xz, yz = q.apply(x, y), q.apply(x, z), q.apply(y, z)
        A = q.apply(xy, z)
        e = self.e
        out = BarChain.zero(3)
        out.add_term((e(x), e(y), e(z)), 1)
        out.add_term((e(x), e(z), e(yz)), -1)
        out.add_term((e(y), e(z), e(A)), 1)
        out.add_term((e(y), e(xy), e(z)), -1)
        out.add_term((e(z), e(xz), e(yz)), 1)
        out.add_term((e(z), e(yz), e(A)), -1)
        return out

    # homotopies ------------------------------------------------------------

    def h1(self, x: int) -> BarChain:
        out = BarChain.zero(2)
        for j in range(1, self.t):
            out.add_term((self.e(x), self.e_pow(x, j)), 1)
        return out

    def h2(self, x: int, y: int) -> BarChain:
        q = self.quandle
        xy = q.apply(x, y)
        e, ep = self.e, self.e_pow
        out = BarChain.zero(3)
        for j in range(1, self.t):
            out.add_term((e(x), e(y), ep(xy, j)), 1)
            out.add_term((e(x), ep(x, j), e(y)), -1)
            out.add_term((e(y), e(xy), ep(xy, j)), -1)
            out.add_term((e(y), ep(y, j), e(y)), 1)
        return out

    def h3(self, x: int, y: int, z: int) -> BarChain:
        q = self.quandle
        xy, xz, yz = q.apply(x, y), q.apply(x, z), q.apply(y, z)
        A = q.apply(xy, z)
        e, ep = self.e, self.e_pow
        out = BarChain.zero(4)
        for j in range(1, self.t):
            out.add_term((e(x), e(y), e(z), ep(A, j)), 1)
            out.add_term((e(x), e(z), e(yz), ep(A, j)), -1)
            out.add_term((e(x), e(y), ep(xy, j), e(z)), -1)
            out.add_term((e(y), e(xy), e(z), ep(A, j)), -1)
            out.add_term((e(x), e(z), ep(xz, j), e(yz)), 1)
            out.add_term((e(z), e(xz), e(yz), ep(A, j)), 1)
            out.add_term((e(x), ep(x, j), e(y), e(z)), 1)
            out.add_term((e(x), ep(x, j), e(z), e(yz)), -1)
            out.add_term((e(y), e(z), e(A), ep(A, j)), 1)
            out.add_term((e(z), e(yz), e(A), ep(A, j)), -1)
            out.add_term((e(z), e(xz), ep(xz, j), e(yz)), -1)
            out.add_term((e(y), e(xy), ep(xy, j), e(z)), 1)
        return out

    # rack boundaries mapped through the h's ---------------------------------

    def _apply_h_to_boundary(self, tup, h) -> BarChain:
        """h applied linearly to the rack boundary of the given tuple."""
        out = None
        for face, coeff in boundary_chain(self.quandle, tup).items():
            piece = h(*face).scale(coeff)
            out = piece if out is None else out + piece
        if out is None:
            out = BarChain.zero(len(tup))
        return out

    def residual_2(self, x: int, y: int) -> BarChain:
        """h1 d^R - d^gr h2 - t c2 on the pair (x, y); zero when the
        degree-2 homotopy identity holds."""
        lhs = self._apply_h_to_boundary((x, y), self.h1)
        lhs = lhs - bar_boundary(self.h2(x, y), self.model.mul)
        return lhs - self.c2(x, y).scale(self.t)

    def residual_3(self, x: int, y: int, z: int) -> BarChain:
        """t c3 - h2 d3^R - d^gr h3 on the triple (x, y, z).

        The degree-3 rack boundary enters in the orientation
        d3(x,y,z) = (x <| y, z) - (x, z) + (x, y) - (x <| z, y <| z),
        the negative of boundary_chain's; each degree-level identity
        pins its own orientation, and this is the one under which the
        residual is independent of x (the degree-2 identity pins the
        opposite one for d2).
        """
        out = self.c3(x, y, z).scale(self.t)
        out = out + self._apply_h_to_boundary((x, y, z), self.h2)
        out = out - bar_boundary(self.h3(x, y, z), self.model.mul)
        return out

    def residual_3_template(self, y: int, z: int) -> BarChain:
        """The closed form of the degree-3 residual; depends on y, z only.

        Writing w = y <| z and B = the common central value of e_u^t, the
        residual is
            (e_y, e_z, B) + (B, e_y, e_z) - (B, e_z, e_w) - (e_y, B, e_z)
          + (e_z, B, e_w) - (e_z, e_w, B)
          - sum_{j=1..t-1} [ (e_y, e_y^j, e_y) - (e_w, e_w^j, e_w) ].
        """
        q = self.quandle
        w = q.apply(y, z)
        e, ep = self.e, self.e_pow
        B = self.e_pow(y, self.t)
        out = BarChain.zero(3)
        out.add_term((e(y), e(z), B), 1)
        out.add_term((B, e(y), e(z)), 1)
        out.add_term((B, e(z), e(w)), -1)
        out.add_term((e(y), B, e(z)), -1)
        out.add_term((e(z), B, e(w)), 1)
        out.add_term((e(z), e(w), B), -1)
        for j in range(1, self.t):
            out.add_term((e(y), ep(y, j), e(y)), -1)
            out.add_term((e(w), ep(w, j), e(w)), 1)
        return out


@dataclass
class HomotopyReport:
    """Outcome of a chain-identity verification."""

    identity: str
    spec_label: str
    quandle_order: int
    type: int
    tuples_checked: int
    status: str
    detail: str = ""


def verify_homotopy_2(spec: AlexanderModuleSpec) -> HomotopyReport:
    """Certify h1 d^R - d^gr h2 = t c2 on every pair, term for term."""
    v = HomotopyVerifier(spec)
    n = spec.size
    checked = 0
    for x in range(n):
        for y in range(n):
            r = v.residual_2(x, y)
            if not r.is_zero():
                raise IdentityFailed("degree-2 homotopy identity", (x, y), r.terms)
            checked += 1
    return HomotopyReport(
        identity="h1 dR - dgr h2 = t c2",
        spec_label=spec.label(),
        quandle_order=n,
        type=v.t,
        tuples_checked=checked,
        status="pass",
    )


def verify_homotopy_3(spec: AlexanderModuleSpec) -> HomotopyReport:
    """Certify the degree-3 residual t c3 - h2 d^R - d^gr h3:

    (a) it does not depend on the first argument,
    (b) it matches its closed form in y and z term for term,
    (c) c3(x, x, z) vanishes identically as a chain.
    """
    v = HomotopyVerifier(spec)
    n = spec.size
    checked = 0
    for y in range(n):
        for z in range(n):
            expected = v.residual_3_template(y, z)
            first = None
            for x in range(n):
                r = v.residual_3(x, y, z)
                if first is None:
                    first = r
                elif r != first:
                    raise IdentityFailed(
                        "degree-3 residual depends on first argument",
                        (x, y, z),
                        (r - first).terms,
                    )
                if r != expected:
                    raise IdentityFailed(
                        "degree-3 residual differs from its closed form",
                        (x, y, z),
                        (r - expected).terms,
                    )
                checked += 1
    for x in range(n):
        for z in range(n):
            c = v.c3(x, x, z)
            if not c.is_zero():
                raise IdentityFailed("c3 on repeated arguments", (x, x, z), c.terms)
    return HomotopyReport(
        identity="t c3 - h2 dR - dgr h3 is independent of x; c3(x,x,z) = 0",
        spec_label=spec.label(),
        quandle_order=n,
        type=v.t,
        tuples_checked=checked,
        status="pass",
    )


# ---------------------------------------------------------------------------
# group homology via the normalized bar complex


BAR_GROUP_CAP = 30


def group_h2_bar(group: GroupTable, cap: int | None = None) -> AbelianGroupInvariants:
    """H_2 of a finite group from the normalized bar complex.

    Bases in degree k are k-tuples of non-identity elements, of size
    (|G| - 1)^k; boundaries drop any face containing the identity.
    Guarded by a |G| <= 30 cap by default; pass cap to override.
    """
    n = group.order
    limit = BAR_GROUP_CAP if cap is None else cap
    if n > limit:
        raise ValueError(f"group order {n} exceeds bar-complex cap {limit}")
    nontriv = list(range(1, n))

    def basis(k):
        return list(product(nontriv, repeat=k))

    def matrix(k):
        rows = basis(k - 1)
        cols = basis(k)
        ridx = {t: i for i, t in enumerate(rows)}
        m = SparseIntMatrix(len(rows), len(cols))
        for j, tup in enumerate(cols):
            chain = BarChain(k, {tup: 1})
            for t, c in bar_boundary(chain, group.mul).terms.items():
                if 0 in t:
                    continue
                m.add(ridx[t], j, c)
        return m

    return homology_at(matrix(3), matrix(2))
