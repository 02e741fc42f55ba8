"""
The term language: parsing, evaluation, and sequent translations
================================================================

Terms use an ASCII grammar: /\\ and \\/ for the lattice operations, box and
dia for the modalities, ~ for equality and <= for the order (sugar for a
meet equation).
"""
from poma import (corpus, eval_term, holds_eq, holds_pos_exist, holds_quasi,
                  parse_equation, parse_pos_exist, parse_quasi, parse_sequent,
                  parse_term, rho, tau, term_to_str)

t = parse_term("box(x /\\ dia y)")
print("parsed:", t)
print("printed back:", term_to_str(t))

# Evaluation is plain structural recursion over the tables.  In the
# three-chain D3, the middle element is sent to the bounds by both operators:
d3 = corpus("D3")
print("dia(middle) in D3:", eval_term(d3, parse_term("dia x"), {"x": 1}))

# Equation checking is exhaustive over all assignments; a failure comes with
# the lexicographically first counterexample.
eq = parse_equation("dia box dia x ~ dia x")
print("C3a satisfies the c3a-splitting equation?", holds_eq(corpus("C3a"), eq))

# Quasi-equations: premises and a conclusion.
q = parse_quasi("x ~ dia x => x ~ 0")
print("B2 satisfies", q, "->", bool(holds_quasi(corpus("B2"), q)))

# Positive existential sentences separate algebras that equations cannot:
sentence = parse_pos_exist("E x . box x ~ 0 & dia x ~ 1")
print("sentence holds in C2:", holds_pos_exist(corpus("C2"), sentence))
print("sentence holds in D3:", holds_pos_exist(corpus("D3"), sentence))

# Sequents translate to order statements and back.
from poma.terms import equation_to_str, sequent_to_str

s = parse_sequent("{x, y} |> box x")
print("tau:", equation_to_str(tau(s)))
print("rho of x ~ y:", [sequent_to_str(r) for r in rho(parse_equation("x ~ y"))])
