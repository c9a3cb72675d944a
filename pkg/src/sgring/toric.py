"""Defining binomial ideals of semigroup rings.

toric_ideal computes the kernel of the monomial map attached to a numerical
or affine semigroup, either by variable elimination through the Buchberger
engine or — for numerical semigroups with large generators, where the
auxiliary-variable route is too slow — by linking the connected components of
divisor graphs, which yields a minimal generating set directly.  Divisor
graphs of degrees past frobenius + 2*max(generator) are complete, so the scan
window is certified.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Optional, Sequence, Union

from .errors import Deadline, InputError, tick
from .groebner import GroebnerBasis, _elements, buchberger, homogenize_ideal
from .monomials import (
    Binomial,
    Order,
    Vec,
    compare,
    degrevlex,
    elimination_order,
    oriented,
    scale,
    vec_add,
)
from .semigroups import AffineSemigroup, GluingSpec, NumericalSemigroup

_GRAPH_THRESHOLD = 50  # largest generator before elimination gets too slow


def gamma_degree(m: Vec, degree_map: Sequence[Vec]) -> Vec:
    """Image of a monomial under the monomial map: sum of exponent * variable degree."""
    out = (0,) * len(degree_map[0])
    for e, d in zip(m, degree_map):
        if e:
            out = vec_add(out, scale(e, d))
    return out


@dataclass(frozen=True)
class BinomialIdeal:
    variables: tuple[str, ...]
    generators: tuple[Binomial, ...]
    degree_map: tuple[Vec, ...]

    def __post_init__(self):
        if len(self.variables) != len(self.degree_map):
            raise InputError("one degree vector per variable required")
        for b in self.generators:
            if len(b.lead) != len(self.variables):
                raise InputError("generator does not match the variable set")
            if gamma_degree(b.lead, self.degree_map) != gamma_degree(b.tail, self.degree_map):
                raise InputError(f"generator {b} is not homogeneous for the degree map")

    def __iter__(self):
        return iter(self.generators)


def _canonical(els, order: Order) -> tuple[Binomial, ...]:
    def cmp(a: Binomial, b: Binomial) -> int:
        return compare(order, a.lead, b.lead) or compare(order, a.tail, b.tail)

    out = [oriented(b.lead, b.tail, order) for b in els]
    if any(b is None for b in out):
        raise InputError("zero binomial in generating set")
    return tuple(sorted(set(out), key=cmp_to_key(cmp)))


def _x_names(e: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(e))


def _toric_by_elimination(vecs: tuple[Vec, ...], deadline) -> list[Binomial]:
    d, e = len(vecs[0]), len(vecs)
    gens = []
    for j, a in enumerate(vecs):
        lead = a + (0,) * e
        tail = (0,) * d + tuple(1 if i == j else 0 for i in range(e))
        gens.append(Binomial(lead, tail))
    gb = buchberger(gens, elimination_order(d, d + e), deadline)
    out = []
    for b in gb.elements:
        if not any(b.lead[:d]) and not any(b.tail[:d]):
            out.append(Binomial(b.lead[d:], b.tail[d:]))
    return out


def _toric_by_divisor_graphs(s: NumericalSemigroup, deadline) -> list[Binomial]:
    gens = s.generators
    e = len(gens)

    def factorization(v: int) -> list[int]:
        fac = [0] * e
        while v:
            for i, g in enumerate(gens):
                if v >= g and (v - g) in s:
                    fac[i] += 1
                    v -= g
                    break
            else:  # pragma: no cover - v is always a member here
                raise AssertionError
        return fac

    out: list[Binomial] = []
    bound = s.frobenius() + 2 * gens[-1]
    for b in range(2 * gens[0], bound + 1):
        tick(deadline)
        if b not in s:
            continue
        verts = [i for i, g in enumerate(gens) if b >= g and (b - g) in s]
        if len(verts) < 2:
            continue
        comp = {i: i for i in verts}

        def find(i: int) -> int:
            while comp[i] != i:
                comp[i] = comp[comp[i]]
                i = comp[i]
            return i

        for ii, i in enumerate(verts):
            for j in verts[ii + 1:]:
                rest = b - gens[i] - gens[j]
                if rest >= 0 and rest in s:
                    comp[find(i)] = find(j)
        roots = sorted({find(i) for i in verts})
        if len(roots) < 2:
            continue
        reps = []
        for r in roots:
            fac = factorization(b - gens[r])
            fac[r] += 1
            reps.append(tuple(fac))
        out.extend(Binomial(reps[0], rep) for rep in reps[1:])
    return out


def toric_ideal(s: Union[NumericalSemigroup, AffineSemigroup],
                deadline: Optional[Deadline] = None,
                method: str = "auto") -> BinomialIdeal:
    """Generators of the kernel of the monomial map x_i -> t^{a_i}."""
    if isinstance(s, NumericalSemigroup):
        vecs = tuple((g,) for g in s.generators)
        numerical: Optional[NumericalSemigroup] = s
    elif isinstance(s, AffineSemigroup):
        vecs = s.generators
        numerical = None
    else:
        raise InputError("toric_ideal expects a semigroup")
    if method == "auto":
        method = ("graph" if numerical is not None and max(s.generators) > _GRAPH_THRESHOLD
                  else "elimination")
    if method == "graph":
        if numerical is None:
            raise InputError("the divisor-graph method only covers numerical semigroups")
        raw = _toric_by_divisor_graphs(numerical, deadline)
    elif method == "elimination":
        raw = _toric_by_elimination(vecs, deadline)
    else:
        raise InputError(f"unknown toric method {method!r}")
    e = len(vecs)
    return BinomialIdeal(_x_names(e), _canonical(raw, degrevlex(e)), vecs)


def projective_closure_ideal(s: NumericalSemigroup,
                             deadline: Optional[Deadline] = None) -> BinomialIdeal:
    """Ideal of the projective closure: homogenize the reduced degree-revlex
    basis with the fresh variable sitting lowest."""
    if not isinstance(s, NumericalSemigroup):
        raise InputError("projective closure is defined for numerical semigroups")
    ideal = toric_ideal(s, deadline)
    e = s.embedding_dim
    gb = buchberger(ideal.generators, degrevlex(e), deadline)
    hgb = homogenize_ideal(gb)
    top = s.generators[-1]
    dmap = tuple((g, top - g) for g in s.generators) + ((0, top),)
    return BinomialIdeal(_x_names(e) + ("x0",), hgb.elements, dmap)


def glued_ideal_generators(spec: GluingSpec, gb1, gb2) -> BinomialIdeal:
    """G1 over the x block, G2 over the y block, and the linking binomial
    rho = x^b - y^a, over the disjoint union of variables."""
    e1 = spec.left.embedding_dim
    e2 = spec.right.embedding_dim
    pad1 = (0,) * e1
    pad2 = (0,) * e2
    els = [Binomial(b.lead + pad2, b.tail + pad2) for b in _elements(gb1)]
    els += [Binomial(pad1 + b.lead, pad1 + b.tail) for b in _elements(gb2)]
    els.append(Binomial(spec.b + pad2, pad1 + spec.a))
    names = _x_names(e1) + tuple(f"y{j + 1}" for j in range(e2))
    dmap = tuple((spec.q * m,) for m in spec.left.generators)
    dmap += tuple((spec.p * n,) for n in spec.right.generators)
    return BinomialIdeal(names, _canonical(els, degrevlex(e1 + e2)), dmap)


def _align(i: BinomialIdeal, j: BinomialIdeal) -> tuple[Binomial, ...]:
    """Permute j's variables so its degree map matches i's; identity if equal."""
    if i.degree_map == j.degree_map:
        return j.generators
    if sorted(i.degree_map) != sorted(j.degree_map):
        raise InputError("degree maps differ: the ideals live over different rings")
    take = {}
    used: set[int] = set()
    for pos, d in enumerate(j.degree_map):
        for target, dd in enumerate(i.degree_map):
            if target not in used and dd == d:
                take[pos] = target
                used.add(target)
                break
    n = len(i.degree_map)

    def perm(m: Vec) -> Vec:
        out = [0] * n
        for pos, exp in enumerate(m):
            out[take[pos]] = exp
        return tuple(out)

    return tuple(Binomial(perm(b.lead), perm(b.tail)) for b in j.generators)


def ideal_equals(i: BinomialIdeal, j: BinomialIdeal,
                 deadline: Optional[Deadline] = None) -> bool:
    """Reduced bases under the canonical degree-revlex order coincide."""
    if len(i.variables) != len(j.variables):
        raise InputError("ideals live in different ambient rings")
    order = degrevlex(len(i.variables))
    gi = buchberger(i.generators, order, deadline)
    gj = buchberger(_align(i, j), order, deadline)
    return gi.elements == gj.elements
