"""Sparse multivariate polynomials over an exact field, polynomial
ideals, and a budgeted Buchberger engine.

Monomials are exponent tuples; the default term order is graded
reverse lexicographic over the ring's declared variable order.  The
Groebner routine counts S-polynomial reductions against a budget and
raises BudgetExceeded rather than running unbounded; callers translate
that into an explicit "inconclusive" outcome, never into a claim.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

DEFAULT_GROEBNER_BUDGET = 200_000


class BudgetExceeded(Exception):
    """Raised when a Groebner run exhausts its reduction budget."""

    def __init__(self, steps: int):
        super().__init__(f"budget exhausted after {steps} S-polynomial reductions")
        self.steps = steps


def _mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def grevlex_key(m: tuple):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: tuple):
    return m


_ORDER_KEYS = {"grevlex": grevlex_key, "lex": lex_key}


class PolyRing:
    """A polynomial ring: coefficient field, variable names, term order."""

    def __init__(self, coeff_field, variables: Sequence[str], order: str = "grevlex"):
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        if order not in _ORDER_KEYS:
            raise ValueError(f"unknown term order {order!r}")
        self.field = coeff_field
        self.vars = tuple(variables)
        self.order = order
        self.key = _ORDER_KEYS[order]
        self._zero_mono = (0,) * len(self.vars)

    def nvars(self) -> int:
        return len(self.vars)

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return MultiPoly(self, {self._zero_mono: self.field.one()})

    def const(self, value) -> "MultiPoly":
        c = self.field.of(value)
        return MultiPoly(self, {self._zero_mono: c} if c else {})

    def var(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(self.vars)))
        return MultiPoly(self, {mono: self.field.one()})

    def gens(self) -> List["MultiPoly"]:
        return [self.var(v) for v in self.vars]

    def with_order(self, order: str) -> "PolyRing":
        return PolyRing(self.field, self.vars, order)

    def __repr__(self):
        return f"{self.field}[{', '.join(self.vars)}]<{self.order}>"


class MultiPoly:
    """terms: exponent tuple -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Dict[tuple, object]):
        self.ring = ring
        self.terms = terms

    def _lift(self, other) -> Optional["MultiPoly"]:
        if isinstance(other, MultiPoly):
            return other if other.ring is self.ring else None
        try:
            c = self.ring.field.of(other)
        except TypeError:
            return None
        return MultiPoly(self.ring, {self.ring._zero_mono: c} if c else {})

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            elif m in terms:
                del terms[m]
        return MultiPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return self.ring.zero()
        terms: Dict[tuple, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                s = terms.get(m)
                s = c if s is None else s + c
                if s:
                    terms[m] = s
                elif m in terms:
                    del terms[m]
        return MultiPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "MultiPoly":
        c = self.ring.field.of(c)
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, {m: co * c for m, co in self.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset((m, hash(c)) for m, c in self.terms.items()))

    # -- order-dependent structure -------------------------------------

    def leading_monomial(self) -> tuple:
        if not self.terms:
            raise ValueError("leading monomial of the zero polynomial")
        return max(self.terms, key=self.ring.key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def monic(self) -> "MultiPoly":
        if not self.terms:
            return self
        lc = self.leading_coeff()
        one = self.ring.field.one()
        if lc == one:
            return self
        inv = one / lc
        return MultiPoly(self.ring, {m: c * inv for m, c in self.terms.items()})

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {self.ring._zero_mono}

    def constant_value(self):
        if not self.terms:
            return self.ring.field.zero()
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[self.ring._zero_mono]

    def sorted_terms(self) -> List[Tuple[tuple, object]]:
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    # -- evaluation / substitution -------------------------------------

    def evaluate(self, point: Dict[str, object]):
        """Full evaluation; point must bind every variable that occurs."""
        f = self.ring.field
        values = [point.get(v) for v in self.ring.vars]
        total = f.zero()
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    if v is None:
                        raise ValueError("unbound variable in evaluation")
                    term = term * (f.of(v) ** e)
            total = total + term
        return total

    def subs(self, mapping: Dict[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials (of the same ring) for variables."""
        ring = self.ring
        out = ring.zero()
        cache: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                cache[key] = mapping.get(ring.vars[i], ring.var(ring.vars[i])) ** e
            return cache[key]

        for m, c in self.terms.items():
            term = ring.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def map_coefficients(self, fn, new_ring: PolyRing) -> "MultiPoly":
        terms = {}
        for m, c in self.terms.items():
            nc = fn(c)
            if nc:
                terms[m] = nc
        return MultiPoly(new_ring, terms)

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [
                (v if e == 1 else f"{v}^{e}")
                for v, e in zip(self.ring.vars, m)
                if e
            ]
            cs = str(c)
            if factors:
                body = "*".join(factors)
                parts.append(body if cs == "1" else f"({cs})*{body}")
            else:
                parts.append(f"({cs})" if ("+" in cs or "-" in cs[1:]) else cs)
        return " + ".join(parts)


def reduce_poly(f: MultiPoly, gens: Sequence[MultiPoly]) -> MultiPoly:
    """Full multivariate division remainder of f by gens (in list order)."""
    ring = f.ring
    gens = [g for g in gens if g]
    if not gens:
        return f
    lead = [(g.leading_monomial(), g.leading_coeff(), g) for g in gens]
    remainder_terms: Dict[tuple, object] = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=ring.key)
        c = work.pop(m)
        if not c:
            continue
        for lm, lc, g in lead:
            if _mono_divides(lm, m):
                factor = c / lc
                shift = _mono_div(m, lm)
                for gm, gc in g.terms.items():
                    t = _mono_mul(gm, shift)
                    if t == m:
                        continue  # leading term cancels by construction
                    prev = work.get(t)
                    val = -(factor * gc) if prev is None else prev - factor * gc
                    if val:
                        work[t] = val
                    elif prev is not None:
                        del work[t]
                break
        else:
            remainder_terms[m] = c
    return MultiPoly(ring, remainder_terms)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    ring = f.ring
    lmf, lmg = f.leading_monomial(), g.leading_monomial()
    lcm = _mono_lcm(lmf, lmg)
    mf = MultiPoly(ring, {_mono_div(lcm, lmf): ring.field.one() / f.leading_coeff()})
    mg = MultiPoly(ring, {_mono_div(lcm, lmg): ring.field.one() / g.leading_coeff()})
    return mf * f - mg * g


def interreduce(gens: Sequence[MultiPoly]) -> List[MultiPoly]:
    """Reduce each generator against the others until stable; monic output."""
    basis = [g.monic() for g in gens if g]
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1 :]
            r = reduce_poly(basis[i], others)
            if r.terms != basis[i].terms:
                changed = True
                if r:
                    basis[i] = r.monic()
                else:
                    del basis[i]
                break
    basis.sort(key=lambda p: p.ring.key(p.leading_monomial()))
    return basis


def groebner_basis(
    gens: Sequence[MultiPoly],
    budget: int = DEFAULT_GROEBNER_BUDGET,
) -> List[MultiPoly]:
    """Reduced Groebner basis in the ring's term order.

    Deterministic: normal selection strategy with tuple tie-breaks.
    Raises BudgetExceeded after ``budget`` S-polynomial reductions.
    Short-circuits to [1] as soon as a unit enters the basis.
    """
    basis = interreduce(gens)
    if not basis:
        return []
    ring = basis[0].ring
    one = ring.one()
    if any(p.is_constant() for p in basis):
        return [one]

    pairs = set()

    def lm(i):
        return basis[i].leading_monomial()

    def add_pairs(j):
        for i in range(j):
            pairs.add((i, j))

    basis = list(basis)
    for j in range(len(basis)):
        add_pairs(j)

    steps = 0
    while pairs:
        # Normal strategy: smallest lcm in the term order, then index order.
        def pair_key(p):
            i, j = p
            return (ring.key(_mono_lcm(lm(i), lm(j))), i, j)

        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        fi, fj = basis[i], basis[j]
        lmi, lmj = lm(i), lm(j)
        lcm = _mono_lcm(lmi, lmj)
        # Buchberger's product criterion.
        if lcm == _mono_mul(lmi, lmj):
            continue
        # Chain criterion: some k with lm(k) | lcm and both pairs handled.
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _mono_divides(lm(k), lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        if steps >= budget:
            raise BudgetExceeded(steps)
        steps += 1
        r = reduce_poly(s_polynomial(fi, fj), basis)
        if not r:
            continue
        if r.is_constant():
            return [one]
        basis.append(r.monic())
        add_pairs(len(basis) - 1)

    return interreduce(basis)


@dataclass
class PolyIdeal:
    """A finitely generated ideal with a cached Groebner basis."""

    ring: PolyRing
    generators: List[MultiPoly]
    _groebner: Optional[List[MultiPoly]] = dataclass_field(default=None, repr=False)

    def groebner(self, budget: int = DEFAULT_GROEBNER_BUDGET) -> List[MultiPoly]:
        if self._groebner is None:
            self._groebner = groebner_basis(self.generators, budget)
        return self._groebner

    def reduce(self, f: MultiPoly, budget: int = DEFAULT_GROEBNER_BUDGET) -> MultiPoly:
        return reduce_poly(f, self.groebner(budget))

    def contains(self, f: MultiPoly, budget: int = DEFAULT_GROEBNER_BUDGET) -> bool:
        return not self.reduce(f, budget)


def ideal_is_trivial(ideal: PolyIdeal, budget: int = DEFAULT_GROEBNER_BUDGET) -> str:
    """Decide whether 1 lies in the ideal: 'yes', 'no', or 'inconclusive'.

    'yes' and 'no' are both conclusive: a completed reduced Groebner
    basis decides membership of 1 (over an algebraically closed field,
    'no' means the variety is nonempty).  Budget exhaustion is reported
    as 'inconclusive', never as either answer.
    """
    try:
        basis = ideal.groebner(budget)
    except BudgetExceeded:
        return "inconclusive"
    if len(basis) == 1 and basis[0].is_constant() and basis[0]:
        return "yes"
    return "no"


# ---------------------------------------------------------------------------
# Division-free helpers for matrices of polynomials (used when building
# polynomial systems from symbolic basis changes).
# ---------------------------------------------------------------------------


def poly_mat_mul(a: List[List[MultiPoly]], b: List[List[MultiPoly]]) -> List[List[MultiPoly]]:
    n, m, p = len(a), len(b), len(b[0])
    ring = a[0][0].ring
    return [
        [sum((a[i][k] * b[k][j] for k in range(m)), ring.zero()) for j in range(p)]
        for i in range(n)
    ]


def poly_mat_det(m: List[List[MultiPoly]]) -> MultiPoly:
    n = len(m)
    ring = m[0][0].ring
    if n == 1:
        return m[0][0]
    det = ring.zero()
    sign = 1
    for j in range(n):
        if m[0][j]:
            minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
            term = m[0][j] * poly_mat_det(minor)
            det = det + (term if sign > 0 else -term)
        sign = -sign
    return det


def poly_mat_adjugate(m: List[List[MultiPoly]]) -> List[List[MultiPoly]]:
    """adj(m) with m @ adj(m) = det(m) * I."""
    n = len(m)
    ring = m[0][0].ring
    if n == 1:
        return [[ring.one()]]
    adj = [[ring.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [m[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            cof = poly_mat_det(minor)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj
