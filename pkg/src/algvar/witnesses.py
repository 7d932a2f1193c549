"""Verification of degeneration witnesses: parametrized bases whose
transported structure constants are pole-free at t = 0 with the target
tensor as their exact limit.

Family parameters are handled symbolically (a rational-function tower
over Q(i)); a declared helper symbol with a polynomial relation (e.g. a
square root the basis needs) lives in a quotient extension, and a
witness only verifies when the limit is free of the helper symbol, so
the result does not depend on a choice of root.  Family-as-source
assertions substitute the parametrized index for the family parameter
before transport.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Optional, Tuple

from .catalog import CatalogEntry, get_entry, structure_in_field
from .dsl import ENum, ESym, EBin, Expr, ParsedWitness, Ref, eval_expr
from .linalg import Matrix
from .scalars import (
    QQI,
    ExtElement,
    GaussianRational,
    PoleError,
    QuotientField,
    RationalFunctionField,
    ZeroDivisorError,
)


@dataclass
class WitnessReport:
    witness: str
    source: str
    target: str
    verified: bool
    failures: List[str] = dataclass_field(default_factory=list)

    def __bool__(self):
        return self.verified


def _tower_with_gens(names):
    """Build Q(i)(n1)(n2)... and return (field, {name: generator})."""
    field = QQI
    gens: Dict[str, object] = {}
    for name in names:
        field = RationalFunctionField(field, name)
        gens = {k: field.of(v) for k, v in gens.items()}
        gens[name] = field.gen()
    return field, gens


def _ref_bindings(ref: Ref, entry: CatalogEntry) -> Dict[str, Expr]:
    """Bound parameters of a reference, keyed by parameter name."""
    if ref.binding is None:
        return {}
    pname = ref.param or (entry.params[0] if entry.params else None)
    if pname is None:
        raise ValueError(f"{ref.name} takes no parameter")
    if pname not in entry.params:
        raise ValueError(f"{ref.name} has no parameter {pname!r}")
    return {pname: ref.binding}


def _relation_poly(relation, pfield, env, helper: str):
    """Coefficients of lhs - rhs as a polynomial in the helper symbol."""
    work = RationalFunctionField(pfield, helper)
    wenv = {k: work.of(v) for k, v in env.items()}
    wenv[helper] = work.gen()
    value = eval_expr(EBin("-", relation[0], relation[1]), work, wenv)
    if len(value.den) != 1:
        raise ValueError("helper relation must be polynomial in the helper symbol")
    inv = pfield.one() / value.den[0]
    return [c * inv for c in value.num]


def verify_witness(
    witness: ParsedWitness,
    source_bindings: Optional[Dict[str, object]] = None,
    t_scale: Optional[GaussianRational] = None,
) -> WitnessReport:
    """Transport the source tensor along the witness basis and compare
    the t -> 0 limit with the target tensor, all exactly.

    source_bindings specializes symbolic source parameters (values are
    Q(i) scalars); target parameters tied to source parameters follow
    automatically.  t_scale substitutes t -> s*t first, which must not
    change the verdict or the limit.
    """
    report = WitnessReport(
        witness=witness.name,
        source=witness.source.name,
        target=witness.target.name,
        verified=False,
    )
    src_entry = get_entry(witness.source.name)
    dst_entry = get_entry(witness.target.name)
    source_bindings = dict(source_bindings or {})

    # -- split parameters into symbolic and bound ----------------------
    src_bound: Dict[str, Expr] = dict(_ref_bindings(witness.source, src_entry))
    for p, v in source_bindings.items():
        if p not in src_entry.params:
            raise ValueError(f"{src_entry.name} has no parameter {p!r}")
        src_bound[p] = ENum(v) if not isinstance(v, Expr) else v
    dst_bound = _ref_bindings(witness.target, dst_entry)

    indexed_param = None
    if witness.source.star:
        if witness.index is None:
            report.failures.append(
                "family-as-source witness must declare a parametrized index"
            )
            return report
        indexed_param = witness.index[0]
        if indexed_param not in src_entry.params:
            report.failures.append(
                f"index parameter {indexed_param!r} is not a parameter of {src_entry.name}"
            )
            return report
    elif witness.index is not None:
        report.failures.append("parametrized index given for a non-family source")
        return report

    free = []
    for p in src_entry.params:
        if p not in src_bound and p != indexed_param:
            free.append(p)
    for p in dst_entry.params:
        if p not in dst_bound and p not in free:
            free.append(p)

    pfield, env = _tower_with_gens(free)
    for p, expr in src_bound.items():
        env[p] = eval_expr(expr, pfield, env)
    for p, expr in dst_bound.items():
        env[p] = eval_expr(expr, pfield, env)

    # -- helper symbol extension ---------------------------------------
    helper = None
    ext = pfield
    if witness.relation is not None:
        syms = witness.relation[0].symbols() | witness.relation[1].symbols()
        candidates = sorted(syms - set(env) - {"t", "i"})
        if len(candidates) != 1:
            report.failures.append(
                f"helper relation must introduce exactly one new symbol, got {candidates}"
            )
            return report
        helper = candidates[0]
        try:
            coeffs = _relation_poly(witness.relation, pfield, env, helper)
            ext = QuotientField(pfield, coeffs, helper)
        except (ValueError, ZeroDivisionError) as e:
            report.failures.append(f"bad helper relation: {e}")
            return report
        env = {k: ext.of(v) for k, v in env.items()}
        env[helper] = ext.gen()

    # -- the t-line ------------------------------------------------------
    tfield = RationalFunctionField(ext, "t")
    env = {k: tfield.of(v) for k, v in env.items()}
    tvalue = tfield.gen()
    if t_scale is not None:
        tvalue = tfield.of(t_scale) * tvalue
    env["t"] = tvalue
    if indexed_param is not None:
        env[indexed_param] = eval_expr(witness.index[1], tfield, env)

    # -- basis matrix ------------------------------------------------------
    if sorted(witness.rows) != [1, 2, 3, 4]:
        report.failures.append("witness must define E1..E4")
        return report
    rows = []
    for idx in range(1, 5):
        vec = [tfield.zero()] * 4
        for j, coeff in witness.rows[idx]:
            vec[j - 1] = vec[j - 1] + eval_expr(coeff, tfield, env)
        rows.append(vec)
    basis = Matrix(tfield, rows)
    try:
        source = structure_in_field(src_entry, tfield, env)
        transported = source.constants_in_basis(basis)
    except ZeroDivisorError as e:
        report.failures.append(f"helper arithmetic hit a zero divisor: {e}")
        return report
    except ZeroDivisionError:
        report.failures.append("basis matrix is singular as a matrix of rational functions")
        return report

    # -- target tensor over the parameter field --------------------------
    tgt_env = {}
    for p in dst_entry.params:
        tgt_env[p] = env[p]
    target = structure_in_field(dst_entry, tfield, tgt_env)

    ok = True
    for i in range(4):
        for j in range(4):
            for k in range(4):
                value = transported.constants[i][j][k]
                want_t = target.constants[i][j][k]
                try:
                    limit = value.eval_at_zero()
                except PoleError as e:
                    ok = False
                    report.failures.append(
                        f"c[{i+1},{j+1},{k+1}] has a pole at t=0 (order {-e.order})"
                    )
                    continue
                if isinstance(limit, ExtElement) and not limit.is_base():
                    ok = False
                    report.failures.append(
                        f"c[{i+1},{j+1},{k+1}] limit still involves the helper "
                        f"symbol: {limit}"
                    )
                    continue
                want = want_t.eval_at_zero()  # target is t-free by construction
                if limit != want:
                    ok = False
                    report.failures.append(
                        f"c[{i+1},{j+1},{k+1}] limit is {limit}, target wants {want}"
                    )
    report.verified = ok
    return report


def scaling_witness(entry_name: str) -> ParsedWitness:
    """The universal degeneration onto the zero algebra: E_i = t*e_i."""
    rows = {i: ((i, ESym("t")),) for i in range(1, 5)}
    entry = get_entry(entry_name)
    src = Ref(entry_name, param=entry.params[0]) if entry.params else Ref(entry_name)
    return ParsedWitness(
        name=f"scale_{entry_name}_to_zero",
        source=src,
        target=Ref("C4"),
        rows=rows,
    )
