"""Algebraic constructions: products, subalgebras, quotients, homomorphism
search, isomorphism and canonical forms, retracts, and the subdirectly
irreducible part of the HS-closure.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .algebras import FiniteAlgebra
from .congruences import Partition, cmi_congruences, is_congruence
from .errors import BudgetError, PreconditionError


@dataclass(frozen=True)
class Hom:
    source: FiniteAlgebra
    target: FiniteAlgebra
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @property
    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    def is_valid(self) -> bool:
        A, B, f = self.source, self.target, self.mapping
        if f[A.bottom()] != B.bottom() or f[A.top()] != B.top():
            return False
        for x in range(A.size):
            if B.box[f[x]] != f[A.box[x]] or B.diamond[f[x]] != f[A.diamond[x]]:
                return False
            for y in range(A.size):
                if B.meet(f[x], f[y]) != f[A.meet(x, y)]:
                    return False
                if B.join(f[x], f[y]) != f[A.join(x, y)]:
                    return False
        return True

    def compose(self, inner: "Hom") -> "Hom":
        """self after inner."""
        return Hom(inner.source, self.target,
                   tuple(self.mapping[inner.mapping[x]] for x in range(inner.source.size)))


def identity_hom(A: FiniteAlgebra) -> Hom:
    return Hom(A, A, tuple(range(A.size)))


# -- subuniverses ---------------------------------------------------------------

def closure_universe(A: FiniteAlgebra, gens: Iterable[int]) -> frozenset[int]:
    """Least subuniverse containing the generators (and the bounds)."""
    members = {A.bottom(), A.top(), *gens}
    frontier = list(members)
    meet, join = A._meet, A._join
    while frontier:
        x = frontier.pop()
        new = [A.box[x], A.diamond[x]]
        for y in list(members):
            new.append(meet[x][y])
            new.append(join[x][y])
        for z in new:
            if z not in members:
                members.add(z)
                frontier.append(z)
    return frozenset(members)


def subuniverses(A: FiniteAlgebra, limit: int = 10_000) -> list[tuple[int, ...]]:
    """All subuniverses, found by growing closed sets one generator at a time."""
    base = closure_universe(A, ())
    seen = {base}
    queue = [base]
    while queue:
        u = queue.pop()
        for x in range(A.size):
            if x not in u:
                v = closure_universe(A, tuple(u) + (x,))
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
                    if len(seen) > limit:
                        raise BudgetError(f"more than {limit} subuniverses")
    return sorted((tuple(sorted(u)) for u in seen), key=lambda u: (len(u), u))


def subalgebra_from_universe(A: FiniteAlgebra, universe: Iterable[int],
                             name: str = "") -> tuple[FiniteAlgebra, Hom]:
    elems = tuple(sorted(universe))
    pos = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    leq = tuple(tuple(A.leq[elems[i]][elems[j]] for j in range(n)) for i in range(n))
    box = tuple(pos[A.box[e]] for e in elems)
    dia = tuple(pos[A.diamond[e]] for e in elems)
    sub = FiniteAlgebra(n, leq, box, dia, name)
    return sub, Hom(sub, A, elems)


def subalgebra_generated(A: FiniteAlgebra, gens: Iterable[int],
                         name: str = "") -> tuple[FiniteAlgebra, Hom]:
    return subalgebra_from_universe(A, closure_universe(A, gens), name)


def generating_set(A: FiniteAlgebra) -> tuple[int, ...]:
    """A small (greedy, not necessarily minimum) generating set."""
    gens: list[int] = []
    covered = closure_universe(A, ())
    while len(covered) < A.size:
        x = min(set(range(A.size)) - covered)
        gens.append(x)
        covered = closure_universe(A, gens)
    return tuple(gens)


# -- products and quotients -------------------------------------------------------

def product(A: FiniteAlgebra, B: FiniteAlgebra, name: str = "") -> FiniteAlgebra:
    na, nb = A.size, B.size

    def pair(i, j):
        return i * nb + j

    n = na * nb
    leq = [[False] * n for _ in range(n)]
    box = [0] * n
    dia = [0] * n
    for i in range(na):
        for j in range(nb):
            p = pair(i, j)
            box[p] = pair(A.box[i], B.box[j])
            dia[p] = pair(A.diamond[i], B.diamond[j])
            for k in range(na):
                for l in range(nb):
                    leq[p][pair(k, l)] = A.leq[i][k] and B.leq[j][l]
    return FiniteAlgebra.make(leq, box, dia, name)


def product_all(algebras: list[FiniteAlgebra], name: str = "") -> FiniteAlgebra:
    if not algebras:
        raise PreconditionError("empty product")
    out = algebras[0]
    for nxt in algebras[1:]:
        out = product(out, nxt)
    return out.rename(name) if name else out


def quotient(A: FiniteAlgebra, p: Partition, name: str = "") -> tuple[FiniteAlgebra, Hom]:
    if not is_congruence(A, p):
        raise PreconditionError("partition is not a congruence")
    ids = p.block_ids()
    reps = [block[0] for block in p.blocks]
    n = len(reps)
    leq = tuple(tuple(ids[A.meet(reps[i], reps[j])] == i for j in range(n))
                for i in range(n))
    box = tuple(ids[A.box[r]] for r in reps)
    dia = tuple(ids[A.diamond[r]] for r in reps)
    Q = FiniteAlgebra(n, leq, box, dia, name)
    return Q, Hom(A, Q, tuple(ids))


# -- homomorphism search ------------------------------------------------------------

def extend_hom(A: FiniteAlgebra, B: FiniteAlgebra,
               seed: dict[int, int]) -> Optional[tuple[int, ...]]:
    """Deterministically extend a partial map along the operations.

    Returns the total mapping when the closure of the seed's domain is all of
    A and no conflict arises; None on conflict; and a partial dict when the
    seed does not generate A (callers treat that as failure unless they
    backtrack over more generators).
    """
    f: dict[int, int] = {A.bottom(): B.bottom(), A.top(): B.top()}
    for k, v in seed.items():
        if f.get(k, v) != v:
            return None
        f[k] = v
    changed = True
    while changed:
        changed = False
        dom = list(f)
        for x in dom:
            for val, img in ((A.box[x], B.box[f[x]]),
                             (A.diamond[x], B.diamond[f[x]])):
                if val in f:
                    if f[val] != img:
                        return None
                else:
                    f[val] = img
                    changed = True
            for y in dom:
                for val, img in ((A.meet(x, y), B.meet(f[x], f[y])),
                                 (A.join(x, y), B.join(f[x], f[y]))):
                    if val in f:
                        if f[val] != img:
                            return None
                    else:
                        f[val] = img
                        changed = True
    if len(f) != A.size:
        return None
    mapping = tuple(f[x] for x in range(A.size))
    hom = Hom(A, B, mapping)
    return mapping if hom.is_valid() else None


def homs(A: FiniteAlgebra, B: FiniteAlgebra, seed: dict[int, int] | None = None,
         budget: int = 1_000_000) -> list[Hom]:
    """All homomorphisms from A to B (extending the optional partial map),
    enumerated deterministically via a generating set of A."""
    gens = [g for g in generating_set(A) if not seed or g not in seed]
    base = dict(seed or {})
    out = []
    tried = 0
    for combo in itertools.product(range(B.size), repeat=len(gens)):
        tried += 1
        if tried > budget:
            raise BudgetError(f"hom search exceeded {budget} candidates")
        attempt = dict(base)
        attempt.update(zip(gens, combo))
        mapping = extend_hom(A, B, attempt)
        if mapping is not None:
            out.append(Hom(A, B, mapping))
    return out


def embeddings(A: FiniteAlgebra, B: FiniteAlgebra,
               budget: int = 1_000_000) -> list[Hom]:
    return [h for h in homs(A, B, budget=budget) if h.is_injective]


def is_retract(A: FiniteAlgebra, B: FiniteAlgebra) -> bool:
    """True when A embeds into B with a left inverse."""
    for f in embeddings(A, B):
        back = {f.mapping[a]: a for a in range(A.size)}
        if homs(B, A, seed=back):
            return True
    return False


# -- canonical forms -------------------------------------------------------------

def _refine_colors(n, leq, box, dia, colors):
    while True:
        keys = []
        for i in range(n):
            below = sorted(colors[j] for j in range(n) if j != i and leq[j][i])
            above = sorted(colors[j] for j in range(n) if j != i and leq[i][j])
            box_pre = sorted(colors[j] for j in range(n) if box[j] == i)
            dia_pre = sorted(colors[j] for j in range(n) if dia[j] == i)
            keys.append((colors[i], colors[box[i]], colors[dia[i]],
                         tuple(below), tuple(above),
                         tuple(box_pre), tuple(dia_pre)))
        palette = {k: c for c, k in enumerate(sorted(set(keys)))}
        new = [palette[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _encode(n, leq, box, dia, order):
    pos = [0] * n
    for k, e in enumerate(order):
        pos[e] = k
    bits = tuple(leq[order[i]][order[j]] for i in range(n) for j in range(n))
    return (n, bits,
            tuple(pos[box[order[i]]] for i in range(n)),
            tuple(pos[dia[order[i]]] for i in range(n)))


def _discrete_orders(n, leq, box, dia, colors, cap, counter) -> Iterator[tuple[int, ...]]:
    colors = _refine_colors(n, leq, box, dia, list(colors))
    classes: dict[int, list[int]] = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i)
    split = next((c for c in sorted(classes) if len(classes[c]) > 1), None)
    if split is None:
        counter[0] += 1
        if counter[0] > cap:
            raise BudgetError("canonical-form search exceeded its cap")
        yield tuple(sorted(range(n), key=colors.__getitem__))
        return
    for member in classes[split]:
        branched = [2 * c + 2 for c in colors]
        branched[member] = 0
        yield from _discrete_orders(n, leq, box, dia, branched, cap, counter)


@lru_cache(maxsize=None)
def canonical_form(A: FiniteAlgebra, cap: int = 50_000) -> tuple:
    """Isomorphism-invariant encoding: minimum relabelled serialization over
    the orderings produced by colour refinement with individualization."""
    n, leq, box, dia = A.size, A.leq, A.box, A.diamond
    best = None
    counter = [0]
    for order in _discrete_orders(n, leq, box, dia, [0] * n, cap, counter):
        enc = _encode(n, leq, box, dia, order)
        if best is None or enc < best[0]:
            best = (enc, order)
    return best[0]


def canonical_algebra(A: FiniteAlgebra, name: str = "") -> FiniteAlgebra:
    n, bits, box, dia = canonical_form(A)
    leq = tuple(tuple(bits[i * n + j] for j in range(n)) for i in range(n))
    return FiniteAlgebra(n, leq, box, dia, name or A.name)


def is_iso(A: FiniteAlgebra, B: FiniteAlgebra) -> bool:
    return A.size == B.size and canonical_form(A) == canonical_form(B)


# -- subdirectly irreducible closures ------------------------------------------------

def si_quotients(A: FiniteAlgebra, max_congruences: int = 100_000) -> tuple[FiniteAlgebra, ...]:
    """Subdirectly irreducible homomorphic images, deduplicated up to
    isomorphism and sorted by (size, canonical form).  These are the quotients
    by congruences whose strict upper bounds have a least element."""
    out: dict[tuple, FiniteAlgebra] = {}
    for theta in cmi_congruences(A, max_congruences):
        Q, _ = quotient(A, theta)
        out.setdefault(canonical_form(Q), canonical_algebra(Q))
    return tuple(sorted(out.values(), key=lambda q: (q.size, canonical_form(q))))


@lru_cache(maxsize=None)
def hs_si(A: FiniteAlgebra, max_subuniverses: int = 10_000) -> tuple[FiniteAlgebra, ...]:
    """Subdirectly irreducible members of HS(A) up to isomorphism.  For the
    lattice-based algebras here this is the subdirectly irreducible part of
    the variety generated by A."""
    out: dict[tuple, FiniteAlgebra] = {}
    for universe in subuniverses(A, limit=max_subuniverses):
        sub, _ = subalgebra_from_universe(A, universe)
        for q in si_quotients(sub):
            out.setdefault(canonical_form(q), q)
    return tuple(sorted(out.values(), key=lambda q: (q.size, canonical_form(q))))
