"""
Structural completeness at desk scale
=====================================

A quasi-equation is admissible when every substitution making its premises
valid also makes its conclusion valid; equivalently, when it holds in the
free algebras.  The deciders classify finitely generated varieties of
positive K4-algebras.
"""
from poma import (asc_necessary, classify_quasi, corpus, is_hsc_pk4, is_psc,
                  is_sc_pk4, lemma22_check, open_problem_scan, parse_quasi,
                  theorem93_battery, variety_of)


def handle(*names):
    return variety_of([corpus(n) for n in names], "V(" + ",".join(names) + ")")


# Exactly three non-trivial varieties are structurally complete, and they are
# also the hereditarily structurally complete ones:
for name in ("B2", "C2", "D4", "D3", "C3a", "C4b"):
    v = handle(name)
    print(f"{v.label}: SC={is_sc_pk4(v).status}  HSC={is_hsc_pk4(v).status}")

# Passive structural completeness admits infinitely many witnesses; the
# first-atom powerset family is PSC, the collapsed-operator family is not.
for spec in ((("AN_MINUS", 2),), (("AN_MINUS", 3),), (("AN_SIMPLE", 2),)):
    gens = [corpus(n, p) for n, p in spec]
    v = variety_of(gens)
    print(f"{v.label}: PSC={is_psc(v).status}")
    print("  zero-generated free algebra simple or trivial:", lemma22_check(v))

# Active structural completeness over PS4 reduces to two idempotence
# equations once the three splitting algebras are excluded:
print("ASC over V(D4):", asc_necessary(handle("D4")).status)
print("ASC over V(C3b):", asc_necessary(handle("C3b")).status)

# Classifying a single quasi-equation: validity, activity (is there a
# premise-solving substitution?), and bounded admissibility.
cls = classify_quasi(handle("C2"), parse_quasi("x ~ box x => x ~ 1"))
print("classification:", cls.status, "| activity:", cls.activity_status,
      "| admissibility:", cls.admissibility_status)

# Structurally complete varieties satisfy bounded box/diamond convergence:
print("convergence exponents for V(D4):", theorem93_battery(handle("D4")).witness)

# The open question - an ASC-but-not-SC variety of positive K4-algebras -
# is exposed as a bounded scan; verdicts outside PS4 are never conclusive.
rows = open_problem_scan(3)
print("bounded open-problem candidates:",
      [r.label for r in rows if r.candidate])
