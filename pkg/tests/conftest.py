"""Shared fixtures and independent brute-force oracles used by the tests."""
import itertools

import pytest

from poma import FiniteAlgebra, corpus, validate
from poma.enumeration import canonical_poset
from poma.morphisms import canonical_form


def labeled_bounded_dls(n):
    """Brute-force oracle: every bounded distributive lattice on n labeled
    elements whose identity labeling is a linear extension (every poset has
    one, so this finds every isomorphism type)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in itertools.product((False, True), repeat=len(pairs)):
        leq = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(pairs, bits):
            leq[i][j] = b
        ok = True
        for i in range(n):
            for j in range(n):
                if not leq[i][j]:
                    continue
                for k in range(n):
                    if leq[j][k] and not leq[i][k]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        ident = tuple(range(n))
        A = FiniteAlgebra.make(leq, ident, ident)
        rep = validate(A)
        if rep.is_bounded_lattice and rep.is_distributive:
            yield A


def oracle_bdl_count(n):
    """Number of bounded distributive lattices with exactly n elements, up to
    isomorphism, via the labeled brute-force oracle."""
    seen = set()
    for A in labeled_bounded_dls(n):
        seen.add(canonical_poset(A.leq))
    return len(seen)


def _box_candidates(L):
    n = L.size
    out = []
    for table in itertools.product(range(n), repeat=n):
        if table[L.top()] != L.top():
            continue
        if all(table[L.meet(a, b)] == L.meet(table[a], table[b])
               for a in range(n) for b in range(n)):
            out.append(table)
    return out


def _dia_candidates(L):
    n = L.size
    out = []
    for table in itertools.product(range(n), repeat=n):
        if table[L.bottom()] != L.bottom():
            continue
        if all(table[L.join(a, b)] == L.join(table[a], table[b])
               for a in range(n) for b in range(n)):
            out.append(table)
    return out


def oracle_algebras(kind, max_size):
    """Brute-force oracle over all operator-table pairs on all labeled
    lattices, filtered by validate, deduplicated by canonical form."""
    found = {}
    for n in range(1, max_size + 1):
        lattice_skeletons = {}
        for L in labeled_bounded_dls(n):
            lattice_skeletons.setdefault(canonical_poset(L.leq), L)
        for L in lattice_skeletons.values():
            for box in _box_candidates(L):
                for dia in _dia_candidates(L):
                    A = FiniteAlgebra(L.size, L.leq, box, dia)
                    if validate(A).flag(kind):
                        found.setdefault(canonical_form(A), A)
    return sorted(found.values(), key=lambda a: (a.size, canonical_form(a)))


CORPUS_LABELS = ("C2", "B2", "D3", "C3a", "C3b", "D4", "C4a", "C4b",
                 "C5a", "C5b", "C6a", "C6b", "A4", "D5a", "D5b", "B4",
                 "EX44III", "EX44IV")


def corpus_label_of(A):
    for name in CORPUS_LABELS:
        B = corpus(name)
        if B.size == A.size and canonical_form(B) == canonical_form(A):
            return name
    return None


@pytest.fixture(scope="session")
def fig2_algebras():
    return [corpus(n) for n in ("C2", "D3", "C3a", "C3b", "D4", "C4a", "C4b",
                                "C5a", "C5b", "C6a", "C6b")]
