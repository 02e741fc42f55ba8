"""
A first tour: the algebra carrier, the named corpus, and validation
====================================================================

A finite positive modal algebra is a bounded distributive lattice plus two
unary tables.  The order matrix is the source of truth; everything else
(meets, joins, bounds) is derived from it.
"""
from poma import FiniteAlgebra, corpus, validate

# The catalog ships the small landmark algebras by name.  D4 is the
# four-chain whose box fixes the lower middle and whose diamond fixes the
# upper middle:
d4 = corpus("D4")
print("D4 order matrix:", d4.leq)
print("D4 box/diamond tables:", d4.box, d4.diamond)

# validate() checks every axiom exhaustively and reports flags plus the first
# violating tuple for anything that fails.
report = validate(d4)
print("D4 is PS4:", report.is_ps4)

# B2 collapses everything: box is constantly top, diamond constantly bottom.
# That is a positive K4-algebra but not S4 (box 0 = 1 is not below 0):
b2 = corpus("B2")
rep = validate(b2)
print("B2 flags:", rep.is_pma, rep.is_pk4, rep.is_ps4)
print("B2 violations:", rep.violations)

# Parametric families: powerset algebras where box remembers the first atom,
# and fully collapsed powerset algebras.
print("AN_MINUS(3) size:", corpus("AN_MINUS", 3).size)
print("EX46(3) is PS4:", validate(corpus("EX46", 3)).is_ps4)

# Algebras serialize to a canonical JSON form (stable byte-for-byte):
print(d4.to_json())
roundtrip = FiniteAlgebra.from_json(d4.to_json())
assert roundtrip == d4
