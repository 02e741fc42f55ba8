import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poma import (Box, Diamond, Equation, Join, Leq, Meet, ONE,
                  PosExistSentence, QuasiEquation, Var, ZERO, corpus,
                  eval_term, holds_eq, holds_pos_exist, holds_quasi,
                  parse_equation, parse_pos_exist, parse_quasi, parse_sequent,
                  parse_term, rho, tau, term_to_str)
from poma.errors import ParseError, PomaError
from poma.terms import (equation_to_str, make_sequent, pos_exist_to_str,
                        quasi_to_str, sequent_to_str)

X, Y = Var("x"), Var("y")


def test_parse_grammar_cases():
    assert parse_term("box(x /\\ dia y)") == Box(Meet(X, Diamond(Y)))
    assert parse_term("0") == ZERO
    assert parse_term("1") == ONE
    assert parse_term("box box x") == Box(Box(X))
    # precedence: unary > meet > join, left associative
    assert parse_term("x \\/ y /\\ x") == Join(X, Meet(Y, X))
    assert parse_term("x /\\ y /\\ x") == Meet(Meet(X, Y), X)
    assert parse_term("box x \\/ y") == Join(Box(X), Y)
    assert parse_term("(x \\/ y) /\\ x") == Meet(Join(X, Y), X)


def test_order_sugar_desugars_to_meet_equation():
    eq = parse_equation("box x /\\ box box x <= x")
    lhs = Meet(Box(X), Box(Box(X)))
    assert eq == Equation(Meet(lhs, X), lhs)
    assert Leq(X, Y) == Equation(Meet(X, Y), X)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_term("x /\\ ")
    assert err.value.position == 5
    with pytest.raises(ParseError):
        parse_term("x y")
    with pytest.raises(ParseError):
        parse_equation("x ~ y ~ z")


def test_parse_quasi_and_sequent():
    q = parse_quasi("x ~ dia x & x ~ y => x ~ 0")
    assert len(q.premises) == 2
    assert q.conclusion == Equation(X, ZERO)
    assert parse_quasi("x ~ 1") == QuasiEquation((), Equation(X, ONE))
    s = parse_sequent("{x, y} |> box x")
    assert s.antecedent == frozenset((X, Y))
    assert s.succedent == Box(X)
    empty = parse_sequent("{} |> x")
    assert empty.antecedent == frozenset()


def test_parse_pos_exist():
    s = parse_pos_exist("E x . box x ~ 0 & dia x ~ 1")
    assert s.variables == ("x",)
    assert len(s.matrix) == 2
    disj = parse_pos_exist("E x y . x ~ 0 | y ~ 1")
    assert len(disj.matrix) == 1 and len(disj.matrix[0]) == 2
    with pytest.raises(PomaError):
        PosExistSentence(("x",), ((Equation(Y, ZERO),),))


_term_strategy = st.recursive(
    st.one_of(st.builds(Var, st.sampled_from(["x", "y", "z"])),
              st.just(ZERO), st.just(ONE)),
    lambda ch: st.one_of(st.builds(Box, ch), st.builds(Diamond, ch),
                         st.builds(Meet, ch, ch), st.builds(Join, ch, ch)),
    max_leaves=20)


@settings(max_examples=300, deadline=None)
@given(_term_strategy)
def test_print_parse_round_trip(t):
    assert parse_term(term_to_str(t)) == t


@settings(max_examples=100, deadline=None)
@given(_term_strategy)
def test_print_of_parse_is_fixed_point(t):
    printed = term_to_str(t)
    assert term_to_str(parse_term(printed)) == printed


def test_eval_examples():
    d3 = corpus("D3")
    assert eval_term(d3, Diamond(X), {"x": 1}) == 2
    assert eval_term(d3, Box(X), {"x": 1}) == 0
    for name in ("C2", "D4", "C6a"):
        A = corpus(name)
        for e in range(A.size):
            assert eval_term(A, Meet(X, ONE), {"x": e}) == e
    with pytest.raises(PomaError):
        eval_term(d3, X, {})


def test_holds_eq_examples():
    assert holds_eq(corpus("D4"), parse_equation("box dia x ~ box x"))
    res = holds_eq(corpus("C3a"), parse_equation("dia box dia x ~ dia x"))
    assert not res.holds
    assert res.witness == {"x": 1}          # lexicographically first violation


def test_witness_order_is_lexicographic():
    res = holds_eq(corpus("B2"), parse_equation("box x ~ x"))
    assert res.witness == {"x": 0}


def test_holds_quasi():
    b2 = corpus("B2")
    assert holds_quasi(b2, parse_quasi("x ~ dia x => x ~ 0"))
    d3 = corpus("D3")
    bad = holds_quasi(d3, parse_quasi("box x ~ 0 => x ~ 0"))
    assert not bad.holds and bad.witness == {"x": 1}


def test_holds_pos_exist():
    sentence = parse_pos_exist("E x . box x ~ 0 & dia x ~ 1")
    assert not holds_pos_exist(corpus("C2"), sentence)
    assert holds_pos_exist(corpus("D3"), sentence)


def test_tau_examples():
    g1, g2, phi = Var("g1"), Var("g2"), Var("phi")
    eq = tau(make_sequent([g1, g2], phi))
    lhs = Meet(g1, g2)
    assert eq == Equation(Meet(lhs, phi), lhs)
    assert tau(make_sequent([], phi)) == Equation(Meet(ONE, phi), ONE)


def test_rho_example():
    left, right = rho(Equation(X, Y))
    assert left.antecedent == frozenset((X,)) and left.succedent == Y
    assert right.antecedent == frozenset((Y,)) and right.succedent == X


def test_sequent_antecedent_collapses_duplicates():
    s = make_sequent([X, X, Y], X)
    assert len(s.antecedent) == 2


@settings(max_examples=150, deadline=None)
@given(_term_strategy, _term_strategy, st.sampled_from(["C2", "B2", "D3", "D4", "C6a"]))
def test_algebraizability_round_trip(lhs, rhs, name):
    """An equation holds exactly when both of its sequent translations do."""
    A = corpus(name)
    eq = Equation(lhs, rhs)
    translated = [tau(s) for s in rho(eq)]
    assert holds_eq(A, eq).holds == all(holds_eq(A, t).holds for t in translated)


@settings(max_examples=150, deadline=None)
@given(_term_strategy, st.sampled_from(["C2", "B2", "D3", "D4", "C6b", "EX44IV"]),
       st.data())
def test_eval_monotone_in_each_variable(t, name, data):
    A = corpus(name)
    from poma.terms import term_variables
    names = sorted(term_variables(t))
    base = {v: data.draw(st.integers(0, A.size - 1)) for v in names}
    if not names:
        return
    v = data.draw(st.sampled_from(names))
    lo = data.draw(st.integers(0, A.size - 1))
    others = [e for e in range(A.size) if A.leq[lo][e]]
    hi = data.draw(st.sampled_from(others))
    low_asg = dict(base, **{v: lo})
    high_asg = dict(base, **{v: hi})
    assert A.leq[eval_term(A, t, low_asg)][eval_term(A, t, high_asg)]


def test_printing_other_syntax():
    q = parse_quasi("x ~ y => x ~ 0")
    assert parse_quasi(quasi_to_str(q)) == q
    s = parse_sequent("{x} |> y")
    assert parse_sequent(sequent_to_str(s)) == s
    e = parse_pos_exist("E x . x ~ 1 | x ~ 0 & dia x ~ 1")
    assert parse_pos_exist(pos_exist_to_str(e)) == e
    assert equation_to_str(Equation(X, Y)) == "x ~ y"
