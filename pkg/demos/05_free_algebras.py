"""
Free algebras: finite free objects, the 37-element landmark, and growth
=======================================================================
"""
from poma import (corpus, figure1_algebra, free_over, free_zero, is_iso,
                  lemma53_growth, sigma_terms, term_to_str, verify_figure1)

# Free algebras over a finite basis live inside a product of copies of the
# basis, one coordinate per generator assignment.  Over the four-chain D4 the
# one-generated free algebra is a five-chain:
fr = free_over([corpus("D4")], 1)
print("free over D4, one generator:", fr.algebra.size, "elements,",
      "generator index", fr.generators[0])

# Zero-generated free algebras collapse to the subalgebra of constants:
print("free_zero over D3 is the two-chain:",
      is_iso(free_zero([corpus("D3")]), corpus("C2")))

# The free one-generated positive S4-algebra is finite: 37 elements.  It is
# shipped as data and guarded by a five-stage battery: axioms, generation,
# the catalog of its eleven subdirectly irreducible quotients, the universal
# property against every enumerated small algebra, and the landmark subposet.
res = figure1_algebra()
print("the free one-generated algebra has", res.algebra.size, "elements")
print("seven landmark terms:", [term_to_str(t) for t in sigma_terms()])
report = verify_figure1(enum_bound=4)
for line in report.lines():
    print(" ", line)

# Two generators already break finiteness: over the descending-order frame
# the alternating box-join tower keeps producing new values, one per world.
for n in (4, 8, 12):
    print(f"growth tower on {n} worlds:", lemma53_growth(n).distinct_count,
          "distinct values")
