"""
Enumeration and the bottom of the subvariety lattice
====================================================

All finite bounded distributive lattices arise as downset lattices of posets;
their PS4 expansions arise from pairs of fixed-point sublattices.  On top of
the enumeration sit variety handles: finitely generated varieties compared
through the subdirectly irreducible parts of their HS-closures.
"""
from collections import Counter

from poma import (corpus, covers_poset, enum_algebras, enum_bdl,
                  figure4_handles, hs_si, includes, variety_of)
from poma.dot import variety_poset_dot
from poma.enumeration import EnumerationTask
from poma.varieties import (splitting_c3a, splitting_d3, theorem610_battery)

print("bounded distributive lattices by size:",
      dict(Counter(L.size for L in enum_bdl(8))))

algs = enum_algebras(EnumerationTask("PS4", 6))
print("positive S4-algebras up to size 6:", dict(Counter(a.size for a in algs)))

# The subdirectly irreducible part of a generated variety, by inspection:
print("si members of V(D4):", [q.size for q in hs_si(corpus("D4"))])
print("V(D3) includes V(C2):",
      includes(variety_of([corpus("D3")]), variety_of([corpus("C2")])))

# The bottom of the subvariety lattice: sixteen handles, twenty-one covers.
handles = list(figure4_handles())
edges = covers_poset(handles)
for i, j in sorted(edges):
    print(f"  {handles[i].label} < {handles[j].label}")
print(variety_poset_dot(handles, edges).splitlines()[0])

# Splitting equations: satisfaction is equivalent to excluding the splitter.
print("splitting check on C4a:", splitting_c3a(corpus("C4a")).consistent)
print("splitting check on D4:", splitting_d3(corpus("D4")).consistent)

# The battery behind the smallest modal cover: among subdirectly irreducible
# PS4 algebras with idempotent operator composites, only C2 and D4 exist.
report = theorem610_battery(6)
print("idempotence battery at bound 6:", report.passed, report.witnesses)
