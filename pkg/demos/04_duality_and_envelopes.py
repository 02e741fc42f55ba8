"""
Finite duality: prime filters, relational frames, and Boolean envelopes
=======================================================================

Every positive modal algebra embeds into the powerset algebra of its
prime-filter frame; the upset algebra of that frame reproduces the original
algebra exactly.
"""
from poma import (boolean_envelope, complex_algebra, corpus, dual_space,
                  is_fsi, is_simple, is_well_connected, kappa, kripke_eval,
                  open_filters, prime_filters, upset_algebra, validate)
from poma.dot import algebra_dot, dual_space_dot
from poma.terms import parse_term

d4 = corpus("D4")
print("prime filters of D4:", [sorted(f) for f in prime_filters(d4)])

X = dual_space(d4)
print("accessibility relation:", X.R)
h = kappa(d4)
print("representation is an isomorphism:", h.is_valid() and h.is_bijective)
print("round-trip size:", upset_algebra(X).size)

# The Boolean envelope is an honest modal algebra (with complement); the
# identity three-chain has a four-element envelope with identity operators,
# which is no longer well-connected:
env = boolean_envelope(corpus("EX44III"))
print("envelope size:", env.algebra.size,
      "| well-connected:", is_well_connected(env.algebra))

# The flat five-chain is not fsi, but its envelope is simple:
env2 = boolean_envelope(corpus("EX44IV"))
print("flat five-chain envelope simple:", is_simple(env2.algebra))
print("fsi transfers:", is_fsi(boolean_envelope(corpus("D4")).algebra))

# Congruences of an envelope correspond to its open filters:
env_d3 = boolean_envelope(corpus("D3"))
print("open filters of M(D3):", len(open_filters(env_d3.modal)))

# Complex algebras of frames: a preorder gives a positive S4-algebra.
geq = {(i, j) for i in range(4) for j in range(4) if i >= j}
A = complex_algebra(4, geq)
print("complex algebra over a 4-world descending frame is PS4:",
      validate(A).is_ps4)
print("frame-level evaluation:",
      sorted(kripke_eval(4, geq, parse_term("box x"), {"x": frozenset({0, 2})})))

# DOT exports for diagrams:
print(algebra_dot(corpus("A4")).splitlines()[0])
print(dual_space_dot(X).splitlines()[0])
