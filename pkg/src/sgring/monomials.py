"""Exponent vectors, pure-difference binomials, and monomial orders.

A monomial is an exponent tuple over a fixed, ordered variable list; variable
names live with the ideal that owns them, not here.  Coefficients are fixed to
+1/-1 throughout the package (every ideal in scope is a pure-difference
lattice ideal), so a binomial is an ordered pair of exponent tuples and no
field arithmetic exists anywhere.

The same tuples double as points of N^d (semigroup elements and degrees).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import InputError

Vec = tuple[int, ...]


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vec, v: Vec) -> Vec:
    """Componentwise difference; raises if any entry would go negative."""
    out = tuple(a - b for a, b in zip(u, v, strict=True))
    if any(c < 0 for c in out):
        raise InputError(f"difference {u} - {v} leaves N^d")
    return out


def vec_leq(u: Vec, v: Vec) -> bool:
    return all(a <= b for a, b in zip(u, v, strict=True))


def scale(k: int, u: Vec) -> Vec:
    return tuple(k * a for a in u)


def total_degree(m: Vec) -> int:
    return sum(m)


def lcm_monomial(m1: Vec, m2: Vec) -> Vec:
    return tuple(max(a, b) for a, b in zip(m1, m2, strict=True))


def divides(m1: Vec, m2: Vec) -> bool:
    return all(a <= b for a, b in zip(m1, m2, strict=True))


def quotient(m1: Vec, m2: Vec) -> Vec:
    """m1 / m2, defined only when m2 divides m1."""
    if not divides(m2, m1):
        raise InputError(f"{m2} does not divide {m1}")
    return tuple(a - b for a, b in zip(m1, m2, strict=True))


class Binomial(NamedTuple):
    """lead - tail with coefficients +1/-1; lead is order-maximal once normalized."""

    lead: Vec
    tail: Vec


# The zero marker is None; every constructor that can cancel returns Optional.

LT, EQ, GT = -1, 0, 1

_GRADINGS = ("degree", "negdegree", "none", "lazard")
_TIEBREAKS = ("lex", "revlex")


@dataclass(frozen=True)
class Order:
    """A monomial order: grading, tie-break, and variable priority (highest first).

    grading "negdegree" marks a local order (not a well-order); callers must
    route those through the standard-basis machinery.  grading "lazard" is the
    internal global order used there: total degree over all variables first,
    then negdegree + tie-break over the priority list minus its last entry
    (the homogenizing variable, which sits lowest).  blocks, when set, splits
    the priority list into consecutive blocks compared left to right; the
    first block then eliminates.
    """

    grading: str
    tiebreak: str
    priority: Vec
    blocks: Optional[Vec] = None
    homog_index: Optional[int] = None

    def __post_init__(self):
        if self.grading not in _GRADINGS:
            raise InputError(f"unknown grading {self.grading!r}")
        if self.tiebreak not in _TIEBREAKS:
            raise InputError(f"unknown tiebreak {self.tiebreak!r}")
        if sorted(self.priority) != list(range(len(self.priority))):
            raise InputError("priority must be a permutation of variable indices")
        if self.blocks is not None and sum(self.blocks) != len(self.priority):
            raise InputError("block sizes must cover the priority list")

    @property
    def nvars(self) -> int:
        return len(self.priority)

    def is_local(self) -> bool:
        return self.grading == "negdegree"


def _cmp_chunk(grading: str, tiebreak: str, chunk: Vec, m1: Vec, m2: Vec) -> int:
    if grading != "none":
        d1 = sum(m1[i] for i in chunk)
        d2 = sum(m2[i] for i in chunk)
        if d1 != d2:
            bigger_wins = grading == "degree"
            return (GT if d1 > d2 else LT) if bigger_wins else (LT if d1 > d2 else GT)
    if tiebreak == "lex":
        for i in chunk:
            d = m1[i] - m2[i]
            if d:
                return GT if d > 0 else LT
    else:
        # revlex: last nonzero entry of the difference, read highest-to-lowest
        # priority, negative => m1 greater.
        for i in reversed(chunk):
            d = m1[i] - m2[i]
            if d:
                return GT if d < 0 else LT
    return EQ


def compare(order: Order, m1: Vec, m2: Vec) -> int:
    """Total order on monomials: returns -1, 0, or 1."""
    if len(m1) != order.nvars or len(m2) != order.nvars:
        raise InputError("monomial does not match the order's variable set")
    if order.grading == "lazard":
        d1, d2 = sum(m1), sum(m2)
        if d1 != d2:
            return GT if d1 > d2 else LT
        return _cmp_chunk("negdegree", order.tiebreak, order.priority[:-1], m1, m2)
    if order.blocks is None:
        return _cmp_chunk(order.grading, order.tiebreak, order.priority, m1, m2)
    pos = 0
    for size in order.blocks:
        chunk = order.priority[pos:pos + size]
        c = _cmp_chunk(order.grading, order.tiebreak, chunk, m1, m2)
        if c:
            return c
        pos += size
    return EQ


def _natural(nvars: int, priority: Optional[Vec]) -> Vec:
    return tuple(range(nvars)) if priority is None else tuple(priority)


def degrevlex(nvars: int, priority: Optional[Vec] = None) -> Order:
    return Order("degree", "revlex", _natural(nvars, priority))


def deglex(nvars: int, priority: Optional[Vec] = None) -> Order:
    return Order("degree", "lex", _natural(nvars, priority))


def negdegrevlex(nvars: int, priority: Optional[Vec] = None) -> Order:
    return Order("negdegree", "revlex", _natural(nvars, priority))


def negdeglex(nvars: int, priority: Optional[Vec] = None) -> Order:
    return Order("negdegree", "lex", _natural(nvars, priority))


def elimination_order(nelim: int, nvars: int) -> Order:
    """Block order eliminating the first nelim variables; degrevlex inside blocks."""
    return Order("degree", "revlex", tuple(range(nvars)), blocks=(nelim, nvars - nelim))


def oriented(lead: Vec, tail: Vec, order: Order) -> Optional[Binomial]:
    """Normalize so lead is order-maximal; None is the zero marker."""
    c = compare(order, lead, tail)
    if c == EQ:
        return None
    return Binomial(lead, tail) if c == GT else Binomial(tail, lead)


def s_pair(f: Binomial, g: Binomial, order: Order) -> Optional[Binomial]:
    """S(f,g) = (lcm/LM(f))*f - (lcm/LM(g))*g, normalized; None when it cancels.

    Unit coefficients keep the result a pure difference: the lcm terms cancel
    exactly and the two cofactored tails either differ or cancel to zero.
    """
    l = lcm_monomial(f.lead, g.lead)
    u = vec_add(quotient(l, f.lead), f.tail)
    v = vec_add(quotient(l, g.lead), g.tail)
    if u == v:
        return None
    return oriented(u, v, order)


def homogenize(b: Binomial, x0: int) -> Binomial:
    """Pad the lower-degree side with x0 so both sides have equal total degree."""
    if b.lead[x0] or b.tail[x0]:
        raise InputError("homogenizing variable already used")
    d = total_degree(b.lead) - total_degree(b.tail)
    if d == 0:
        return b
    pad = lambda m, k: tuple(e + k if i == x0 else e for i, e in enumerate(m))
    if d > 0:
        return Binomial(b.lead, pad(b.tail, d))
    return Binomial(pad(b.lead, -d), b.tail)


def dehomogenize(b: Binomial, x0: int) -> Optional[Binomial]:
    """Zero out x0's exponent on both sides; None if the sides then collide."""
    zero = lambda m: tuple(0 if i == x0 else e for i, e in enumerate(m))
    lead, tail = zero(b.lead), zero(b.tail)
    if lead == tail:
        return None
    return Binomial(lead, tail)


def format_monomial(m: Vec, names: tuple[str, ...]) -> str:
    parts = []
    for e, name in zip(m, names, strict=True):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_binomial(b: Optional[Binomial], names: tuple[str, ...]) -> str:
    if b is None:
        return "0"
    return f"{format_monomial(b.lead, names)} - {format_monomial(b.tail, names)}"
