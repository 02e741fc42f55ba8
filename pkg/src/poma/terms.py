"""Syntax for the positive modal language: terms, equations, quasi-equations,
positive existential sentences, sequents, plus parsing, printing, evaluation
and the sequent/equation translations.

Concrete grammar (ASCII): ``/\\`` meet, ``\\/`` join, ``box``/``dia`` unary
prefixes, ``0``/``1`` bounds, ``~`` equality, ``<=`` order sugar, ``&``
premise conjunction, ``=>`` quasi-equation arrow, ``{a, b} |> c`` sequents,
``E x y . eq | eq & eq`` positive existential sentences (``|`` separates the
equations of one clause).  Unary binds tighter than ``/\\`` which binds
tighter than ``\\/``; binary operators associate to the left.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .algebras import FiniteAlgebra
from .errors import ParseError, PomaError


@dataclass(frozen=True)
class Term:
    kind: str                    # var zero one meet join box dia
    args: tuple["Term", ...] = ()
    var: str = ""


ZERO = Term("zero")
ONE = Term("one")


def Var(name: str) -> Term:
    if not name:
        raise PomaError("variable names must be non-empty")
    return Term("var", (), name)


def Meet(s: Term, t: Term) -> Term:
    return Term("meet", (s, t))


def Join(s: Term, t: Term) -> Term:
    return Term("join", (s, t))


def Box(t: Term) -> Term:
    return Term("box", (t,))


def Diamond(t: Term) -> Term:
    return Term("dia", (t,))


def box_power(t: Term, n: int) -> Term:
    for _ in range(n):
        t = Box(t)
    return t


def diamond_power(t: Term, n: int) -> Term:
    for _ in range(n):
        t = Diamond(t)
    return t


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term


def Leq(s: Term, t: Term) -> Equation:
    """The order statement ``s <= t`` desugared to ``s /\\ t ~ s``."""
    return Equation(Meet(s, t), s)


@dataclass(frozen=True)
class QuasiEquation:
    premises: tuple[Equation, ...]
    conclusion: Equation


@dataclass(frozen=True)
class PosExistSentence:
    variables: tuple[str, ...]
    matrix: tuple[tuple[Equation, ...], ...]   # conjunction of disjunctions

    def __post_init__(self):
        bound = set(self.variables)
        for clause in self.matrix:
            for eq in clause:
                for v in term_variables(eq.lhs) | term_variables(eq.rhs):
                    if v not in bound:
                        raise PomaError(f"unbound variable {v!r} in sentence")


@dataclass(frozen=True)
class Sequent:
    antecedent: frozenset[Term]
    succedent: Term


def make_sequent(antecedent, succedent: Term) -> Sequent:
    return Sequent(frozenset(antecedent), succedent)


def term_variables(t: Term) -> set[str]:
    if t.kind == "var":
        return {t.var}
    out: set[str] = set()
    for a in t.args:
        out |= term_variables(a)
    return out


def equation_variables(e: Equation) -> set[str]:
    return term_variables(e.lhs) | term_variables(e.rhs)


# -- printing -----------------------------------------------------------------

_LEVEL = {"var": 0, "zero": 0, "one": 0, "box": 1, "dia": 1, "meet": 2, "join": 3}


def term_to_str(t: Term) -> str:
    def render(t: Term, ceiling: int) -> str:
        kind = t.kind
        if kind == "var":
            s = t.var
        elif kind == "zero":
            s = "0"
        elif kind == "one":
            s = "1"
        elif kind in ("box", "dia"):
            inner = render(t.args[0], _LEVEL[kind])
            s = f"{'box' if kind == 'box' else 'dia'} {inner}"
        else:
            op = " /\\ " if kind == "meet" else " \\/ "
            lhs = render(t.args[0], _LEVEL[kind])
            rhs = render(t.args[1], _LEVEL[kind] - 1)
            s = f"{lhs}{op}{rhs}"
        if _LEVEL[kind] > ceiling:
            return f"({s})"
        return s
    return render(t, 3)


def equation_to_str(e: Equation) -> str:
    return f"{term_to_str(e.lhs)} ~ {term_to_str(e.rhs)}"


def quasi_to_str(q: QuasiEquation) -> str:
    head = " & ".join(equation_to_str(p) for p in q.premises)
    tail = equation_to_str(q.conclusion)
    return f"{head} => {tail}" if head else tail


def sequent_to_str(s: Sequent) -> str:
    inner = ", ".join(sorted(term_to_str(t) for t in s.antecedent))
    return "{" + inner + "} |> " + term_to_str(s.succedent)


def pos_exist_to_str(s: PosExistSentence) -> str:
    clauses = " & ".join(" | ".join(equation_to_str(e) for e in clause)
                         for clause in s.matrix)
    return "E " + " ".join(s.variables) + " . " + clauses


# -- parsing ------------------------------------------------------------------

_SYMBOLS = ("/\\", "\\/", "<=", "=>", "|>", "~", "&", "(", ")", "{", "}", ",",
            "|", ".", "0", "1")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        two = text[i:i + 2]
        if two in _SYMBOLS:
            tokens.append(("sym", two, i))
            i += 2
            continue
        if c in _SYMBOLS:
            tokens.append(("sym", c, i))
            i += 1
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word in ("box", "dia"):
                tokens.append(("op", word, i))
            else:
                tokens.append(("ident", word, i))
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, val, at = self.next()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", at)

    def fail(self, message: str):
        raise ParseError(message, self.peek()[2])

    def atom(self) -> Term:
        kind, val, at = self.next()
        if kind == "sym" and val == "0":
            return ZERO
        if kind == "sym" and val == "1":
            return ONE
        if kind == "op":
            return Box(self.atom()) if val == "box" else Diamond(self.atom())
        if kind == "ident":
            return Var(val)
        if kind == "sym" and val == "(":
            t = self.term()
            self.expect(")")
            return t
        raise ParseError(f"expected a term, found {val or 'end of input'!r}", at)

    def meet_chain(self) -> Term:
        t = self.atom()
        while self.peek()[1] == "/\\":
            self.next()
            t = Meet(t, self.atom())
        return t

    def term(self) -> Term:
        t = self.meet_chain()
        while self.peek()[1] == "\\/":
            self.next()
            t = Join(t, self.meet_chain())
        return t

    def equation(self) -> Equation:
        lhs = self.term()
        kind, val, at = self.next()
        if val == "~":
            return Equation(lhs, self.term())
        if val == "<=":
            return Leq(lhs, self.term())
        raise ParseError(f"expected '~' or '<=', found {val or 'end of input'!r}", at)

    def quasi(self) -> QuasiEquation:
        eqs = [self.equation()]
        while self.peek()[1] == "&":
            self.next()
            eqs.append(self.equation())
        if self.peek()[1] == "=>":
            self.next()
            return QuasiEquation(tuple(eqs), self.equation())
        if len(eqs) == 1:
            return QuasiEquation((), eqs[0])
        self.fail("premise list must end with '=>'")

    def sequent(self) -> Sequent:
        self.expect("{")
        ante: list[Term] = []
        if self.peek()[1] != "}":
            ante.append(self.term())
            while self.peek()[1] == ",":
                self.next()
                ante.append(self.term())
        self.expect("}")
        self.expect("|>")
        return make_sequent(ante, self.term())

    def pos_exist(self) -> PosExistSentence:
        kind, val, at = self.next()
        if not (kind == "ident" and val == "E"):
            raise ParseError("positive existential sentences start with 'E'", at)
        names = []
        while self.peek()[0] == "ident":
            names.append(self.next()[1])
        if not names:
            self.fail("expected at least one bound variable")
        self.expect(".")
        matrix = [self.clause()]
        while self.peek()[1] == "&":
            self.next()
            matrix.append(self.clause())
        return PosExistSentence(tuple(names), tuple(matrix))

    def clause(self) -> tuple[Equation, ...]:
        eqs = [self.equation()]
        while self.peek()[1] == "|":
            self.next()
            eqs.append(self.equation())
        return tuple(eqs)

    def done(self):
        kind, val, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing input {val!r}", at)


def _parse(text: str, production: str):
    p = _Parser(text)
    node = getattr(p, production)()
    p.done()
    return node


def parse_term(text: str) -> Term:
    return _parse(text, "term")


def parse_equation(text: str) -> Equation:
    return _parse(text, "equation")


def parse_quasi(text: str) -> QuasiEquation:
    return _parse(text, "quasi")


def parse_sequent(text: str) -> Sequent:
    return _parse(text, "sequent")


def parse_pos_exist(text: str) -> PosExistSentence:
    return _parse(text, "pos_exist")


# -- evaluation ---------------------------------------------------------------

def eval_term(A: FiniteAlgebra, t: Term, asg: dict[str, int]) -> int:
    kind = t.kind
    if kind == "var":
        try:
            return asg[t.var]
        except KeyError:
            raise PomaError(f"unassigned variable {t.var!r}")
    if kind == "zero":
        return A.bottom()
    if kind == "one":
        return A.top()
    if kind == "box":
        return A.box[eval_term(A, t.args[0], asg)]
    if kind == "dia":
        return A.diamond[eval_term(A, t.args[0], asg)]
    x = eval_term(A, t.args[0], asg)
    y = eval_term(A, t.args[1], asg)
    return A.meet(x, y) if kind == "meet" else A.join(x, y)


def assignments(A: FiniteAlgebra, variables) -> Iterator[dict[str, int]]:
    """All assignments, lexicographic by variable name then element index."""
    names = sorted(variables)
    for combo in itertools.product(range(A.size), repeat=len(names)):
        yield dict(zip(names, combo))


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    witness: dict | None = None

    def __bool__(self):
        return self.holds


def eq_holds_under(A: FiniteAlgebra, e: Equation, asg: dict[str, int]) -> bool:
    return eval_term(A, e.lhs, asg) == eval_term(A, e.rhs, asg)


def holds_eq(A: FiniteAlgebra, e: Equation) -> CheckResult:
    for asg in assignments(A, equation_variables(e)):
        if not eq_holds_under(A, e, asg):
            return CheckResult(False, asg)
    return CheckResult(True)


def holds_quasi(A: FiniteAlgebra, q: QuasiEquation) -> CheckResult:
    variables = set()
    for e in q.premises:
        variables |= equation_variables(e)
    variables |= equation_variables(q.conclusion)
    for asg in assignments(A, variables):
        if all(eq_holds_under(A, p, asg) for p in q.premises):
            if not eq_holds_under(A, q.conclusion, asg):
                return CheckResult(False, asg)
    return CheckResult(True)


def holds_pos_exist(A: FiniteAlgebra, s: PosExistSentence) -> bool:
    for asg in assignments(A, s.variables):
        if all(any(eq_holds_under(A, e, asg) for e in clause)
               for clause in s.matrix):
            return True
    return False


# -- sequent translations -------------------------------------------------------

def tau(s: Sequent) -> Equation:
    """Collapse a sequent into the order statement "meet of premises <= head";
    an empty antecedent reads as the unit."""
    terms = sorted(s.antecedent, key=term_to_str)
    if not terms:
        lhs = ONE
    else:
        lhs = terms[0]
        for t in terms[1:]:
            lhs = Meet(lhs, t)
    return Leq(lhs, s.succedent)


def rho(e: Equation) -> tuple[Sequent, Sequent]:
    return (make_sequent([e.lhs], e.rhs), make_sequent([e.rhs], e.lhs))
