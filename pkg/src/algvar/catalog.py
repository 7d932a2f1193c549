"""The builtin catalog of four-dimensional Zinbiel and nilpotent
Leibniz algebras: names, variety tags, multiplication tables, parameter
conventions, and expected derivation-algebra dimensions.

Entries are stored as symbolic product tables; ``structure`` realizes
them over Q(i) (parameters bound) or over a rational-function tower
(parameters generic).  The zero algebra C4 is a first-class entry since
the degeneration graph and the component reports reference it.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import AlgebraStructure
from .scalars import QQI, GaussianRational, RationalFunctionField, tower

I = GaussianRational(0, 1)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class DerCase:
    """One derivation-dimension case: conditions is a tuple of
    (param, value) equalities; empty means the generic case."""

    conditions: Tuple[Tuple[str, GaussianRational], ...]
    value: int


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    tags: frozenset  # subset of {"N", "Z", "L"}
    params: Tuple[str, ...]
    products: Tuple[Tuple[int, int, Tuple[Tuple[int, object], ...]], ...]
    der_cases: Tuple[DerCase, ...]
    # Parameter values that get their own vertex in the degeneration
    # graph (the catalog's case-split values).
    special_values: Tuple[GaussianRational, ...] = ()
    # For entries identified under a parameter symmetry, a callable-free
    # description: "negate" means p and -p give isomorphic algebras.
    identification: Optional[str] = None
    normalization: Optional[str] = None

    @property
    def dim(self) -> int:
        return 4

    def is_family(self) -> bool:
        return bool(self.params)

    def generic_der_dim(self) -> int:
        for case in self.der_cases:
            if not case.conditions:
                return case.value
        raise ValueError(f"{self.name} has no generic derivation case")

    def der_dim_at(self, bindings: Dict[str, GaussianRational]) -> int:
        best = None
        for case in self.der_cases:
            if all(bindings.get(p) == v for p, v in case.conditions):
                if case.conditions or best is None:
                    if case.conditions:
                        return case.value
                    best = case.value
        if best is None:
            raise ValueError(f"no derivation case matches {bindings}")
        return best


def _entry(name, tags, products, der, params=(), specials=(), ident=None, norm=None):
    prods = tuple(
        (i, j, tuple((k, c) for k, c in combo)) for (i, j), combo in products.items()
    )
    if isinstance(der, int):
        cases = (DerCase((), der),)
    else:
        cases = tuple(der)
    return CatalogEntry(
        name=name,
        tags=frozenset(tags),
        params=tuple(params),
        products=prods,
        der_cases=cases,
        special_values=tuple(GaussianRational.of(s) for s in specials),
        identification=ident,
        normalization=norm,
    )


def builtin_catalog() -> List[CatalogEntry]:
    """Every catalog entry, in display order, zero algebra included."""
    e = []
    # -- Zinbiel, not three-step nilpotent associative ----------------
    e.append(_entry("Z1C", "Z", {(1, 1): [(2, 1)], (1, 2): [(3, HALF)], (2, 1): [(3, 1)]}, 6))
    e.append(
        _entry(
            "Z1",
            "Z",
            {
                (1, 1): [(2, 1)],
                (1, 2): [(3, 1)],
                (1, 3): [(4, 1)],
                (2, 1): [(3, 2)],
                (2, 2): [(4, 3)],
                (3, 1): [(4, 3)],
            },
            4,
        )
    )
    e.append(
        _entry(
            "Z2",
            "Z",
            {(1, 1): [(3, 1)], (1, 2): [(4, 1)], (1, 3): [(4, 1)], (3, 1): [(4, 2)]},
            5,
        )
    )
    e.append(
        _entry(
            "Z3",
            "Z",
            {(1, 1): [(3, 1)], (1, 3): [(4, 1)], (2, 2): [(4, 1)], (3, 1): [(4, 2)]},
            4,
        )
    )
    e.append(
        _entry("Z4", "Z", {(1, 2): [(3, 1)], (1, 3): [(4, 1)], (2, 1): [(3, -1)]}, 5)
    )
    e.append(
        _entry(
            "Z5",
            "Z",
            {(1, 2): [(3, 1)], (1, 3): [(4, 1)], (2, 1): [(3, -1)], (2, 2): [(4, 1)]},
            4,
        )
    )
    # -- three-step nilpotent associative (both Zinbiel and Leibniz) --
    e.append(_entry("N1C2", "NZL", {(1, 1): [(2, 1)]}, 10))
    e.append(_entry("N1sq", "NZL", {(1, 1): [(2, 1)], (3, 3): [(4, 1)]}, 6))
    e.append(_entry("N1C", "NZL", {(1, 2): [(3, 1)], (2, 1): [(3, -1)]}, 10))
    e.append(
        _entry(
            "N2C",
            "NZL",
            {(1, 1): [(3, 1)], (1, 2): [(3, 1)], (2, 2): [(3, "beta")]},
            8,
            params=("beta",),
        )
    )
    e.append(
        _entry("N3C", "NZL", {(1, 1): [(3, 1)], (1, 2): [(3, 1)], (2, 1): [(3, 1)]}, 8)
    )
    e.append(
        _entry(
            "N1",
            "NZL",
            {(1, 2): [(3, 1)], (2, 1): [(4, 1)], (2, 2): [(3, -1)]},
            5,
        )
    )
    e.append(
        _entry(
            "N2",
            "NZL",
            {
                (1, 1): [(3, 1)],
                (1, 2): [(4, 1)],
                (2, 1): [(3, ("neg", "gamma"))],
                (2, 2): [(4, -1)],
            },
            [
                DerCase((), 4),
                DerCase((("gamma", GaussianRational(0)),), 5),
                DerCase((("gamma", GaussianRational(1)),), 6),
            ],
            params=("gamma",),
            specials=(0, 1),
        )
    )
    e.append(
        _entry(
            "N3",
            "NZL",
            {
                (1, 1): [(4, 1)],
                (1, 2): [(4, "alpha")],
                (2, 1): [(4, ("neg", "alpha"))],
                (2, 2): [(4, 1)],
                (3, 3): [(4, 1)],
            },
            [DerCase((), 5), DerCase((("alpha", GaussianRational(0)),), 7)],
            params=("alpha",),
            specials=(0,),
            ident="negate",
            norm="Re(alpha)>0, or Re(alpha)=0 and Im(alpha)>=0",
        )
    )
    e.append(
        _entry(
            "N4",
            "NZL",
            {
                (1, 2): [(4, 1)],
                (1, 3): [(4, 1)],
                (2, 1): [(4, -1)],
                (2, 2): [(4, 1)],
                (3, 1): [(4, 1)],
            },
            5,
        )
    )
    e.append(
        _entry(
            "N5",
            "NZL",
            {(1, 1): [(4, 1)], (1, 2): [(4, 1)], (2, 1): [(4, -1)], (3, 3): [(4, 1)]},
            5,
        )
    )
    e.append(_entry("N6", "NZL", {(1, 2): [(3, 1)], (2, 1): [(4, 1)]}, 6))
    e.append(
        _entry(
            "N7",
            "NZL",
            {
                (1, 1): [(4, 1)],
                (1, 2): [(3, 1)],
                (2, 1): [(3, -1)],
                (2, 2): [(3, 2), (4, 1)],
            },
            5,
        )
    )
    e.append(_entry("N8", "NZL", {(2, 1): [(4, 1)], (2, 2): [(3, 1)]}, 7))
    e.append(
        _entry(
            "N9",
            "NZL",
            {(1, 2): [(4, 1)], (2, 1): [(4, "alpha")], (2, 2): [(3, 1)]},
            7,
            params=("alpha",),
        )
    )
    e.append(
        _entry(
            "N10",
            "NZL",
            {(1, 2): [(4, 1)], (2, 1): [(4, -1)], (3, 3): [(4, 1)]},
            8,
        )
    )
    # -- nilpotent Leibniz, not three-step nilpotent associative ------
    e.append(_entry("L1C", "L", {(1, 1): [(2, 1)], (2, 1): [(3, 1)]}, 6))
    e.append(
        _entry(
            "L1",
            "L",
            {(1, 2): [(3, 1)], (1, 3): [(4, 1)], (2, 1): [(3, -1)], (3, 1): [(4, -1)]},
            7,
        )
    )
    e.append(
        _entry("L2", "L", {(1, 1): [(2, 1)], (2, 1): [(3, 1)], (3, 1): [(4, 1)]}, 4)
    )
    e.append(
        _entry(
            "L3",
            "L",
            {(1, 1): [(3, 1)], (1, 2): [(4, 1)], (2, 1): [(3, 1)], (3, 1): [(4, 1)]},
            4,
        )
    )
    e.append(
        _entry("L4", "L", {(1, 1): [(3, 1)], (2, 1): [(3, 1)], (3, 1): [(4, 1)]}, 5)
    )
    e.append(
        _entry(
            "L5",
            "L",
            {(1, 1): [(3, 1)], (2, 1): [(3, 1)], (2, 2): [(4, 1)], (3, 1): [(4, 1)]},
            3,
        )
    )
    e.append(
        _entry(
            "L6",
            "L",
            {
                (1, 1): [(3, 1)],
                (1, 2): [(4, 1)],
                (2, 1): [(3, 1)],
                (2, 2): [(4, 1)],
                (3, 1): [(4, 1)],
            },
            4,
        )
    )
    e.append(
        _entry("L7", "L", {(1, 1): [(3, 1)], (1, 2): [(4, 1)], (3, 1): [(4, 1)]}, 5)
    )
    e.append(
        _entry("L8", "L", {(1, 1): [(3, 1)], (2, 2): [(4, 1)], (3, 1): [(4, 1)]}, 4)
    )
    e.append(
        _entry(
            "L9",
            "L",
            {
                (1, 2): [(3, -1), (4, 1)],
                (1, 3): [(4, -1)],
                (2, 1): [(3, 1)],
                (3, 1): [(4, 1)],
            },
            5,
        )
    )
    e.append(
        _entry(
            "L10",
            "L",
            {
                (1, 2): [(3, -1)],
                (1, 3): [(4, -1)],
                (2, 1): [(3, 1)],
                (2, 2): [(4, 1)],
                (3, 1): [(4, 1)],
            },
            5,
        )
    )
    e.append(
        _entry(
            "L11",
            "L",
            {
                (1, 1): [(4, 1)],
                (1, 2): [(3, -1)],
                (1, 3): [(4, -1)],
                (2, 1): [(3, 1)],
                (2, 2): [(4, 1)],
                (3, 1): [(4, 1)],
            },
            4,
        )
    )
    e.append(
        _entry(
            "L12",
            "L",
            {
                (1, 1): [(4, 1)],
                (1, 2): [(3, -1)],
                (1, 3): [(4, -1)],
                (2, 1): [(3, 1)],
                (3, 1): [(4, 1)],
            },
            6,
        )
    )
    # -- the zero algebra ----------------------------------------------
    e.append(_entry("C4", "NZL", {}, 16))
    return e


_CATALOG_CACHE: Optional[Dict[str, CatalogEntry]] = None


def catalog_by_name() -> Dict[str, CatalogEntry]:
    global _CATALOG_CACHE
    if _CATALOG_CACHE is None:
        _CATALOG_CACHE = {entry.name: entry for entry in builtin_catalog()}
    return _CATALOG_CACHE


def get_entry(name: str) -> CatalogEntry:
    try:
        return catalog_by_name()[name]
    except KeyError:
        raise KeyError(f"unknown catalog entry {name!r}") from None


def _scalar_in_field(field, spec):
    """Product-table scalars: numbers, parameter names, or ('neg', name)."""
    if isinstance(spec, tuple) and spec and spec[0] == "neg":
        return -_scalar_in_field(field, spec[1])
    if isinstance(spec, str):
        return _symbol_in_field(field, spec)
    return field.of(spec)


def _symbol_in_field(field, name: str):
    if isinstance(field, RationalFunctionField):
        if field.var == name:
            return field.gen()
        return field.of(_symbol_in_field(field.base, name))
    raise KeyError(f"parameter {name!r} is not bound in {field}")


def structure(
    entry: CatalogEntry,
    bindings: Optional[Dict[str, object]] = None,
    base_field=None,
) -> AlgebraStructure:
    """Realize an entry as an exact structure-constant tensor.

    Unbound parameters become generators of a rational-function tower
    over Q(i) (the "generic member"); bound parameters are substituted
    exactly.  Excluded values are not rejected here: instantiating a
    family at a case-split value is how those cases are computed.
    """
    bindings = dict(bindings or {})
    for p in bindings:
        if p not in entry.params:
            raise KeyError(f"{entry.name} has no parameter {p!r}")
    free = [p for p in entry.params if p not in bindings]
    field = base_field if base_field is not None else QQI
    if free:
        field = tower(free, field)
    products = {}
    for i, j, combo in entry.products:
        terms = []
        for k, spec in combo:
            if isinstance(spec, str) and spec in bindings:
                value = field.of(bindings[spec])
            elif (
                isinstance(spec, tuple)
                and spec
                and spec[0] == "neg"
                and spec[1] in bindings
            ):
                value = -field.of(bindings[spec[1]])
            else:
                value = _scalar_in_field(field, spec)
            terms.append((k, value))
        products[(i, j)] = terms
    return AlgebraStructure.from_products(field, entry.dim, products)


def instantiate(entry: CatalogEntry, bindings: Dict[str, object]) -> AlgebraStructure:
    """Fully bound instantiation over Q(i)."""
    missing = [p for p in entry.params if p not in bindings]
    if missing:
        raise KeyError(f"unbound parameter(s) {missing} for {entry.name}")
    return structure(entry, bindings)


def structure_in_field(entry: CatalogEntry, field, env: Dict[str, object]) -> AlgebraStructure:
    """Realize an entry over an explicit field with every parameter
    bound in env (values are elements of that field)."""
    products = {}
    for i, j, combo in entry.products:
        terms = []
        for k, spec in combo:
            if isinstance(spec, str):
                terms.append((k, env[spec]))
            elif isinstance(spec, tuple) and spec and spec[0] == "neg":
                terms.append((k, -env[spec[1]]))
            else:
                terms.append((k, field.of(spec)))
        products[(i, j)] = terms
    return AlgebraStructure.from_products(field, entry.dim, products)


def normalize_n3_parameter(alpha: GaussianRational) -> GaussianRational:
    """Canonical representative under the alpha ~ -alpha identification:
    Re > 0, or Re = 0 and Im >= 0."""
    if alpha.re > 0 or (alpha.re == 0 and alpha.im >= 0):
        return alpha
    return -alpha


# The derivation column shipped with the catalog is a claim under
# verification, and it fails for exactly these cells: recomputing the
# dimension from the stored tensors (exact nullspace; independently
# cross-checked) gives a different value.  The N2-at-1 cell is forced:
# in the basis (e1+e2, e1, e3, e3+e4) the N2(1) tensor coincides with
# N8, so its derivation algebra has N8's dimension.
# Keys: (entry name, parameter value or None for the generic case);
# values: (claimed, recomputed).
DERIVATION_DISCREPANCIES = {
    ("N2", None): (4, 5),
    ("N2", GaussianRational(1)): (6, 7),
    ("N10", None): (8, 7),
}


@dataclass(frozen=True)
class Identification:
    """Two catalog vertices that are the same algebra, with the basis
    rows exhibiting the isomorphism (rows of the matrix taking the
    first structure's tensor to the second's)."""

    first: str
    first_bindings: Tuple[Tuple[str, GaussianRational], ...]
    second: str
    basis_rows: Tuple[Tuple[int, ...], ...]


# N2 at gamma=1 and N8 carry identical structures up to the listed
# basis change; the degeneration edge between them is an isomorphism,
# not a proper degeneration.
IDENTIFICATIONS = (
    Identification(
        first="N2",
        first_bindings=(("gamma", GaussianRational(1)),),
        second="N8",
        basis_rows=((1, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 1, 1)),
    ),
)


def identified_with(name: str, bindings: Optional[Dict[str, GaussianRational]] = None):
    """The partner entry name if (name, bindings) is identified with
    another vertex, else None."""
    bindings = bindings or {}
    for ident in IDENTIFICATIONS:
        if ident.first == name and all(
            bindings.get(p) == v for p, v in ident.first_bindings
        ):
            if len(bindings) == len(ident.first_bindings):
                return ident.second
        if ident.second == name and not bindings:
            return ident.first
    return None
