"""Permutation groups on {0..n-1} with deterministic stabilizer chains.

Permutations are image tuples: p[i] is the image of i, and compose(p, q)
applies p first.  Group order and membership come from a stabilizer chain
built with Schreier's lemma (orbit of the smallest moved point, transversal
by breadth-first search, all Schreier generators kept after deduplication),
so every order is an exact orbit-times-stabilizer certificate with no
randomization anywhere.
"""

from __future__ import annotations

from math import lcm

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def perm_order(p: Perm) -> int:
    """Order of p: lcm of its cycle lengths."""
    n = len(p)
    seen = [False] * n
    result = 1
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            result = lcm(result, length)
    return result


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Sorted cycle lengths, including fixed points."""
    n = len(p)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths))


def is_permutation(p, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def format_perm(p: Perm) -> str:
    """Image-list serialization: '0 2 1'."""
    return " ".join(str(i) for i in p)


def parse_perm(text: str) -> Perm:
    p = tuple(int(t) for t in text.split())
    if not is_permutation(p, len(p)):
        raise ValueError(f"not a permutation image list: {text!r}")
    return p


class _ChainLevel:
    __slots__ = ("point", "transversal", "gens")

    def __init__(self, point, transversal, gens):
        self.point = point
        self.transversal = transversal  # {beta: u} with u[point] = beta
        self.gens = gens


def _orbit_transversal(degree: int, point: int, gens: list[Perm]):
    transversal = {point: identity(degree)}
    queue = [point]
    while queue:
        a = queue.pop(0)
        ua = transversal[a]
        for g in gens:
            b = g[a]
            if b not in transversal:
                transversal[b] = compose(ua, g)
                queue.append(b)
    return transversal


def _build_chain(degree: int, gens: list[Perm], forced_base=()):
    """Stabilizer chain: list of levels, deterministic throughout."""
    levels: list[_ChainLevel] = []
    current = sorted({g for g in gens if not is_identity(g)})
    base_queue = list(forced_base)
    while current or base_queue:
        if base_queue:
            point = base_queue.pop(0)
        else:
            point = min(
                i for g in current for i in range(degree) if g[i] != i
            )
        transversal = _orbit_transversal(degree, point, current)
        levels.append(_ChainLevel(point, transversal, current))
        schreier = set()
        for a in sorted(transversal):
            ua = transversal[a]
            for g in current:
                s = compose(compose(ua, g), inverse(transversal[g[a]]))
                if not is_identity(s):
                    schreier.add(s)
        current = sorted(schreier)
    return levels


class PermGroup:
    """A permutation group given by generators, with a lazy stabilizer chain."""

    def __init__(self, degree: int, generators):
        self.degree = degree
        seen = set()
        gens = []
        for g in generators:
            g = tuple(g)
            if not is_permutation(g, degree):
                raise ValueError(f"generator is not a degree-{degree} permutation: {g}")
            if g not in seen and not is_identity(g):
                seen.add(g)
                gens.append(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._chain = None

    def chain(self):
        if self._chain is None:
            self._chain = _build_chain(self.degree, list(self.generators))
        return self._chain

    @property
    def order(self) -> int:
        result = 1
        for level in self.chain():
            result *= len(level.transversal)
        return result

    def contains(self, p) -> bool:
        p = tuple(p)
        if not is_permutation(p, self.degree):
            return False
        for level in self.chain():
            b = p[level.point]
            u = level.transversal.get(b)
            if u is None:
                return False
            p = compose(p, inverse(u))
        return is_identity(p)

    def orbit(self, point: int) -> list[int]:
        orbit = {point}
        queue = [point]
        while queue:
            a = queue.pop(0)
            for g in self.generators:
                b = g[a]
                if b not in orbit:
                    orbit.add(b)
                    queue.append(b)
        return sorted(orbit)

    def orbits(self) -> list[tuple[int, ...]]:
        seen = set()
        parts = []
        for i in range(self.degree):
            if i not in seen:
                orb = self.orbit(i)
                seen.update(orb)
                parts.append(tuple(orb))
        return parts

    def stabilizer(self, point: int) -> "PermGroup":
        """Point stabilizer, generated by the Schreier generators at `point`."""
        levels = _build_chain(self.degree, list(self.generators), forced_base=(point,))
        transversal = levels[0].transversal
        gens = levels[0].gens
        schreier = set()
        for a in sorted(transversal):
            ua = transversal[a]
            for g in gens:
                s = compose(compose(ua, g), inverse(transversal[g[a]]))
                if not is_identity(s):
                    schreier.add(s)
        return PermGroup(self.degree, sorted(schreier))

    def derived_subgroup(self) -> "PermGroup":
        """Commutator subgroup via normal closure of generator commutators."""
        comms = set()
        for a in self.generators:
            for b in self.generators:
                c = compose(compose(inverse(a), inverse(b)), compose(a, b))
                if not is_identity(c):
                    comms.add(c)
        gens: list[Perm] = []
        sub = PermGroup(self.degree, [])
        queue = sorted(comms)
        while queue:
            d = queue.pop(0)
            if sub.contains(d):
                continue
            gens.append(d)
            sub = PermGroup(self.degree, gens)
            for g in self.generators:
                queue.append(compose(compose(inverse(g), d), g))
        return sub

    def is_perfect(self) -> bool:
        return self.derived_subgroup().order == self.order

    def elements(self, limit: int = 1_000_000) -> list[Perm]:
        """All elements by closure, sorted; guarded by `limit`."""
        if self.order > limit:
            raise ValueError(f"group order {self.order} exceeds limit {limit}")
        elems = {identity(self.degree)}
        frontier = list(self.generators)
        elems.update(frontier)
        while frontier:
            new = []
            for p in frontier:
                for g in self.generators:
                    q = compose(p, g)
                    if q not in elems:
                        elems.add(q)
                        new.append(q)
            frontier = new
        return sorted(elems)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, gens={len(self.generators)})"


def closure_order(degree: int, gens, limit: int = 2_000_000) -> int:
    """Group order by plain multiplication closure (independent of the chain)."""
    gens = [tuple(g) for g in gens]
    elems = {identity(degree)}
    frontier = [g for g in gens if g not in elems]
    elems.update(frontier)
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in elems:
                    elems.add(q)
                    new.append(q)
                    if len(elems) > limit:
                        raise ValueError(f"closure exceeded limit {limit}")
        frontier = new
    return len(elems)


def effective_action_check(pairs) -> bool:
    """True when distinct elements act by distinct permutations.

    `pairs` lists (element, permutation) for every element of the acting
    group; the action is effective exactly when no two elements share an
    image, i.e. only the identity acts trivially.
    """
    seen = {}
    for elem, perm in pairs:
        perm = tuple(perm)
        if perm in seen and seen[perm] != elem:
            return False
        seen[perm] = elem
    return True
