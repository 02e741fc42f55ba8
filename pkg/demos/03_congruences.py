"""
Congruences: generation, lattices, irreducibility, and a CEP failure
====================================================================
"""
from poma import (cg, cg_dl, con_lattice, corpus, has_cep, is_si, is_simple,
                  is_simple_lemma45, is_well_connected, monolith)
from poma.morphisms import subalgebra_generated

# Principal congruences close a pair under all operations.  Merging the
# middle of D3 with the top forces the box images 0 and 1 together, so the
# whole algebra collapses:
d3 = corpus("D3")
print("Cg(middle, top) on D3:", cg(d3, [(1, 2)]).to_json_obj())

# The flat five-chain has two incomparable congruences meeting in the
# identity, so it is not subdirectly irreducible:
flat5 = corpus("EX44IV")
print("congruences of the flat five-chain:",
      [p.to_json_obj() for p in con_lattice(flat5)])
print("flat five-chain si?", is_si(flat5))

# D4 is subdirectly irreducible; its monolith is the least non-identity
# congruence.
print("monolith of D4:", monolith(corpus("D4")).to_json_obj())

# For bounded distributive lattices the principal congruence is definable by
# two equations, with no closure computation at all:
chain = corpus("EX44III")
print("order-definable congruence:", cg_dl(chain, 1, 2).to_json_obj())

# The eight-element cube with fully collapsed operators is simple (the direct
# criterion for positive K4-algebras agrees), yet each of its four-element
# chains is a non-simple subalgebra: the congruence extension property fails.
cube = corpus("EX46", 3)
print("cube simple?", is_simple(cube), "criterion:", is_simple_lemma45(cube))
print("cube well-connected?", is_well_connected(cube))
result = has_cep(cube)
sub, theta = result.witness
print("CEP holds?", bool(result), "| witness subalgebra size:", sub.size,
      "congruence:", theta.to_json_obj())
atom = 1
coatom = next(x for x in range(cube.size)
              if cube.leq[atom][x] and (x, cube.top()) in cube.covers())
sub4, _ = subalgebra_generated(cube, [atom, coatom])
print("the chain through an atom and a coatom generates",
      sub4.size, "elements")
