"""Finite positive modal algebras: carrier, axiom checks, canonical JSON format.

An algebra is a finite bounded distributive lattice together with two unary
operator tables (`box`, `diamond`).  The order matrix is the single source of
truth; meet/join tables and the bounds are derived and memoized at
construction whenever the order actually is a bounded lattice.  Construction
only rejects *structurally* malformed input (wrong shapes, out-of-range
entries); axiom failures are reported by :func:`validate`, never raised.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .errors import StructuralError

BoolMatrix = tuple[tuple[bool, ...], ...]


def _freeze_matrix(rows) -> BoolMatrix:
    return tuple(tuple(bool(x) for x in row) for row in rows)


@dataclass(frozen=True)
class FiniteAlgebra:
    """Carrier with elements ``0..size-1``; ``leq[i][j]`` iff ``i <= j``."""

    size: int
    leq: BoolMatrix
    box: tuple[int, ...]
    diamond: tuple[int, ...]
    name: str = field(default="", compare=False)

    # derived lattice data; None when the order is not a bounded lattice
    _meet: Optional[tuple[tuple[int, ...], ...]] = field(
        default=None, init=False, compare=False, repr=False)
    _join: Optional[tuple[tuple[int, ...], ...]] = field(
        default=None, init=False, compare=False, repr=False)
    _bottom: Optional[int] = field(default=None, init=False, compare=False, repr=False)
    _top: Optional[int] = field(default=None, init=False, compare=False, repr=False)
    _order_defect: Optional[tuple[str, tuple[int, ...]]] = field(
        default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        n = self.size
        if n < 1:
            raise StructuralError("size must be >= 1")
        if len(self.leq) != n or any(len(row) != n for row in self.leq):
            raise StructuralError("leq must be a size x size matrix")
        for table, label in ((self.box, "box"), (self.diamond, "diamond")):
            if len(table) != n:
                raise StructuralError(f"{label} table must have {n} entries")
            for v in table:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise StructuralError(f"{label} table entry {v!r} out of range")
        defect, meet, join, bot, top = _derive_order(n, self.leq)
        object.__setattr__(self, "_order_defect", defect)
        object.__setattr__(self, "_meet", meet)
        object.__setattr__(self, "_join", join)
        object.__setattr__(self, "_bottom", bot)
        object.__setattr__(self, "_top", top)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def make(cls, leq, box, diamond, name: str = "") -> "FiniteAlgebra":
        rows = _freeze_matrix(leq)
        return cls(len(rows), rows, tuple(box), tuple(diamond), name)

    @classmethod
    def from_dict(cls, obj: dict) -> "FiniteAlgebra":
        try:
            size = obj["size"]
            leq = obj["leq"]
            box = obj["box"]
            diamond = obj["diamond"]
        except (KeyError, TypeError) as exc:
            raise StructuralError(f"missing key in algebra object: {exc}")
        if not isinstance(size, int) or len(leq) != size:
            raise StructuralError("size does not match leq matrix")
        return cls.make(leq, box, diamond, obj.get("name", ""))

    @classmethod
    def from_json(cls, text: str) -> "FiniteAlgebra":
        return cls.from_dict(json.loads(text))

    # -- canonical serialization ---------------------------------------------

    def to_dict(self) -> dict:
        obj = {
            "size": self.size,
            "leq": [[1 if x else 0 for x in row] for row in self.leq],
            "box": list(self.box),
            "diamond": list(self.diamond),
        }
        if self.name:
            obj["name"] = self.name
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    # -- lattice structure ---------------------------------------------------

    @property
    def is_lattice(self) -> bool:
        return self._order_defect is None

    def _require_lattice(self):
        if self._order_defect is not None:
            code, witness = self._order_defect
            raise StructuralError(f"not a bounded lattice: {code} at {witness}")

    def meet(self, x: int, y: int) -> int:
        self._require_lattice()
        return self._meet[x][y]

    def join(self, x: int, y: int) -> int:
        self._require_lattice()
        return self._join[x][y]

    def bottom(self) -> int:
        self._require_lattice()
        return self._bottom

    def top(self) -> int:
        self._require_lattice()
        return self._top

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def meet_all(self, xs: Iterable[int]) -> int:
        out = self.top()
        for x in xs:
            out = self.meet(out, x)
        return out

    def join_all(self, xs: Iterable[int]) -> int:
        out = self.bottom()
        for x in xs:
            out = self.join(out, x)
        return out

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (x, y) with y covering x, for Hasse-diagram output."""
        n, leq = self.size, self.leq
        out = []
        for x in range(n):
            for y in range(n):
                if x == y or not leq[x][y]:
                    continue
                if not any(leq[x][z] and leq[z][y] and z != x and z != y
                           for z in range(n)):
                    out.append((x, y))
        return out

    def relabel(self, order: tuple[int, ...], name: str = "") -> "FiniteAlgebra":
        """Algebra with element k standing for old element ``order[k]``."""
        n = self.size
        pos = [0] * n
        for k, old in enumerate(order):
            pos[old] = k
        leq = tuple(tuple(self.leq[order[i]][order[j]] for j in range(n))
                    for i in range(n))
        box = tuple(pos[self.box[order[i]]] for i in range(n))
        dia = tuple(pos[self.diamond[order[i]]] for i in range(n))
        return FiniteAlgebra(n, leq, box, dia, name)

    def rename(self, name: str) -> "FiniteAlgebra":
        return FiniteAlgebra(self.size, self.leq, self.box, self.diamond, name)

    def __repr__(self):
        label = self.name or f"algebra<{self.size}>"
        return f"FiniteAlgebra({label}, size={self.size})"


def _derive_order(n: int, leq: BoolMatrix):
    """Check partial order + bounded lattice; derive meet/join/bounds.

    Returns (defect, meet, join, bottom, top); defect is (code, witness) or
    None, and the remaining entries are None whenever there is a defect.
    """
    for i in range(n):
        if not leq[i][i]:
            return ("order-reflexive", (i,)), None, None, None, None
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                return ("order-antisymmetric", (i, j)), None, None, None, None
    for i in range(n):
        for j in range(n):
            if not leq[i][j]:
                continue
            row_j = leq[j]
            row_i = leq[i]
            for k in range(n):
                if row_j[k] and not row_i[k]:
                    return ("order-transitive", (i, j, k)), None, None, None, None
    bottoms = [i for i in range(n) if all(leq[i][j] for j in range(n))]
    if not bottoms:
        return ("lattice-bottom", ()), None, None, None, None
    tops = [i for i in range(n) if all(leq[j][i] for j in range(n))]
    if not tops:
        return ("lattice-top", ()), None, None, None, None
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            lower = [k for k in range(n) if leq[k][i] and leq[k][j]]
            best = [k for k in lower if all(leq[l][k] for l in lower)]
            if len(best) != 1:
                return ("lattice-meet", (i, j)), None, None, None, None
            meet[i][j] = meet[j][i] = best[0]
            upper = [k for k in range(n) if leq[i][k] and leq[j][k]]
            best = [k for k in upper if all(leq[k][l] for l in upper)]
            if len(best) != 1:
                return ("lattice-join", (i, j)), None, None, None, None
            join[i][j] = join[j][i] = best[0]
    return (None,
            tuple(tuple(row) for row in meet),
            tuple(tuple(row) for row in join),
            bottoms[0], tops[0])


@dataclass(frozen=True)
class ModalAlgebra:
    """A Boolean-complemented algebra: positive carrier plus complement table."""

    algebra: FiniteAlgebra
    complement: tuple[int, ...]

    def __post_init__(self):
        A = self.algebra
        if len(self.complement) != A.size:
            raise StructuralError("complement table has wrong length")
        if A.is_lattice:
            for x, c in enumerate(self.complement):
                if A.meet(x, c) != A.bottom() or A.join(x, c) != A.top():
                    raise StructuralError(f"element {x} is not complemented by {c}")


@dataclass(frozen=True)
class ValidationReport:
    is_bounded_lattice: bool
    is_distributive: bool
    is_pma: bool
    is_pk4: bool
    is_ps4: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]

    def flag(self, kind: str) -> bool:
        return {"PMA": self.is_pma, "PK4": self.is_pk4, "PS4": self.is_ps4}[kind]


@lru_cache(maxsize=None)
def validate(A: FiniteAlgebra) -> ValidationReport:
    """Exhaustively check the lattice and operator axioms.

    Flags are cumulative: ps4 implies pk4 implies pma.  Every false flag is
    justified by at least one recorded violation, and each violation names
    the first offending tuple in index order.
    """
    violations: list[tuple[str, tuple[int, ...]]] = []
    if A._order_defect is not None:
        violations.append(A._order_defect)
        return ValidationReport(False, False, False, False, False, tuple(violations))

    n = A.size
    meet, join = A._meet, A._join
    box, dia = A.box, A.diamond
    leq = A.leq

    distributive = True
    for a in range(n):
        row = meet[a]
        for b in range(n):
            for c in range(n):
                if row[join[b][c]] != join[row[b]][row[c]]:
                    violations.append(("distributivity", (a, b, c)))
                    distributive = False
                    break
            if not distributive:
                break
        if not distributive:
            break

    def first_violation(code, pred, arity):
        if arity == 1:
            for a in range(n):
                if not pred(a):
                    violations.append((code, (a,)))
                    return False
        else:
            for a in range(n):
                for b in range(n):
                    if not pred(a, b):
                        violations.append((code, (a, b)))
                        return False
        return True

    top, bot = A._top, A._bottom
    pma = True
    if box[top] != top:
        violations.append(("box-top", (top,)))
        pma = False
    if dia[bot] != bot:
        violations.append(("diamond-bottom", (bot,)))
        pma = False
    pma &= first_violation("box-meet", lambda a, b: box[meet[a][b]] == meet[box[a]][box[b]], 2)
    pma &= first_violation("diamond-join", lambda a, b: dia[join[a][b]] == join[dia[a]][dia[b]], 2)
    pma &= first_violation("box-diamond-meet",
                           lambda a, b: leq[meet[box[a]][dia[b]]][dia[meet[a][b]]], 2)
    pma &= first_violation("box-diamond-join",
                           lambda a, b: leq[box[join[a][b]]][join[box[a]][dia[b]]], 2)
    pma = pma and distributive

    pk4 = pma
    if pma:
        pk4 &= first_violation("box-transitive", lambda a: leq[box[a]][box[box[a]]], 1)
        pk4 &= first_violation("diamond-transitive", lambda a: leq[dia[dia[a]]][dia[a]], 1)

    ps4 = pk4
    if pk4:
        ps4 &= first_violation("box-decreasing", lambda a: leq[box[a]][a], 1)
        ps4 &= first_violation("diamond-increasing", lambda a: leq[a][dia[a]], 1)

    return ValidationReport(True, distributive, bool(pma), bool(pk4), bool(ps4),
                            tuple(violations))


# spec-level operation aliases -------------------------------------------------

def meet(A: FiniteAlgebra, x: int, y: int) -> int:
    return A.meet(x, y)


def join(A: FiniteAlgebra, x: int, y: int) -> int:
    return A.join(x, y)


def bottom(A: FiniteAlgebra) -> int:
    return A.bottom()


def top(A: FiniteAlgebra) -> int:
    return A.top()


def is_pma(A: FiniteAlgebra) -> bool:
    return validate(A).is_pma


def is_pk4(A: FiniteAlgebra) -> bool:
    return validate(A).is_pk4


def is_ps4(A: FiniteAlgebra) -> bool:
    return validate(A).is_ps4


def chain_order(n: int) -> BoolMatrix:
    return tuple(tuple(i <= j for j in range(n)) for i in range(n))


def subset_order(masks: tuple[int, ...]) -> BoolMatrix:
    """Inclusion order on a family of bitmasks."""
    return tuple(tuple((a & b) == a for b in masks) for a in masks)


def powerset_masks(n_atoms: int) -> tuple[int, ...]:
    """All subsets of an n_atoms set, as bitmasks sorted by (cardinality, value)."""
    masks = sorted(range(1 << n_atoms), key=lambda m: (bin(m).count("1"), m))
    return tuple(masks)
