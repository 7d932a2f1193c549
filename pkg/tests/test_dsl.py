from fractions import Fraction

import pytest

from algvar.catalog import get_entry, structure
from algvar.dsl import (
    DslError,
    ENum,
    eval_expr,
    parse_document,
    serialize,
)
from algvar.scalars import QQI, tower


def test_parse_algebra_matches_builtin():
    doc = parse_document("algebra N6 { dim 4; e1*e2 = e3; e2*e1 = e4 }")
    alg = doc.algebras[0]
    assert alg.name == "N6" and alg.dim == 4
    assert set(alg.products) == {(1, 2), (2, 1)}
    built = {}
    for (i, j), combo in alg.products.items():
        built[(i, j)] = [(k, eval_expr(c, QQI, {})) for k, c in combo]
    from algvar.algebra import AlgebraStructure

    A = AlgebraStructure.from_products(QQI, 4, built)
    assert A == structure(get_entry("N6"))


def test_parse_zero_algebra():
    doc = parse_document("algebra A { dim 4 }")
    assert doc.algebras[0].products == {}


def test_parse_witness_with_scaling():
    text = "witness w1 : Z5 -> Z4 { E1 = e1; E2 = t*e2; E3 = t*e3; E4 = t*e4 }"
    w = parse_document(text).witnesses[0]
    assert w.source.name == "Z5" and w.target.name == "Z4"
    assert len(w.rows) == 4
    F = tower(["t"])
    t = F.gen()
    combo = w.rows[2]
    assert combo == ((2, next(iter(combo))[1]),)
    assert eval_expr(combo[0][1], F, {"t": t}) == t


def test_parse_witness_with_index_and_relation():
    text = """
    witness n1_to_n9 : N1 -> N9(alpha) {
      E1 = (t/u)*e1; E2 = (1/u)*e1 + u*e2; E3 = e4 - alpha*e3; E4 = t*e3;
      where u^2 = alpha + 1;
    }
    witness fam : N2(*) -> N1 { E1 = t*e1; E2 = t*e2; E3 = t^2*e4; E4 = t*e3; index gamma = -1/t }
    """
    doc = parse_document(text)
    w1, w2 = doc.witnesses
    assert w1.relation is not None
    assert w1.target.param == "alpha" and w1.target.is_symbolic()
    assert w2.source.star and w2.index[0] == "gamma"


def test_parse_certificate_and_claims():
    text = """
    certificate c_n9 for N9(alpha) {
      flags: S1*S1 in S3, S2*S2 = 0, S1 o S3 = 0, S1 o S2 in S4;
      equations: x1_2_4 - alpha*x2_1_4;
      basis: e1 -> e2, e2 -> e1, e3 -> e3, e4 -> e4;
    }
    claim N9(alpha) !-> N1C via certificate c_n9 unless alpha + 1 = 0;
    claim Z5 !-> N10 via ann_r;
    claim Z5 -> Z4 via witness w1;
    """
    doc = parse_document(text)
    cert = doc.certificates[0]
    assert len(cert.flags) == 4
    assert cert.flags[1].c == 5
    assert cert.basis_images[1] == ((2, ENum(Fraction(1))),)
    c1, c2, c3 = doc.claims
    assert c1.kind == "non-degeneration" and c1.unless is not None
    assert c2.proof_kind == "criterion" and c2.proof_name == "ann_r"
    assert c3.kind == "degeneration" and c3.proof_name == "w1"


def test_roundtrip_canonical_form():
    text = """
    algebra Z1C { dim 4; e1*e1 = e2; e1*e2 = 1/2*e3; e2*e1 = e3 }
    witness w : N3(alpha != 0) -> N2C(beta) {
      E1 = e1; E2 = 1/2*e1 + (1/(2*alpha))*e2 + (u/(2*alpha))*e3; E3 = e4; E4 = t*e3;
      where u^2 = 4*alpha^2*beta - alpha^2 - 1;
    }
    claim N9(alpha) !-> N2C(beta) via certificate c unless (1-alpha)^2*beta + alpha = 0;
    """
    doc1 = parse_document(text)
    out1 = serialize(doc1)
    doc2 = parse_document(out1)
    out2 = serialize(doc2)
    assert out1 == out2
    assert doc1.algebras == doc2.algebras
    assert doc1.witnesses == doc2.witnesses
    assert doc1.claims == doc2.claims


def test_error_positions():
    with pytest.raises(DslError) as exc:
        parse_document("algebra A { dim 4; e1*e9 = e2 }")
    assert exc.value.line == 1
    with pytest.raises(DslError) as exc:
        parse_document("algebra A { dim 4; e1*e2 = e3; e1*e2 = e4 }")
    assert "duplicate product" in exc.value.message
    with pytest.raises(DslError):
        parse_document("algebra A { dim 4; e1*e2 }")
    with pytest.raises(DslError) as exc:
        parse_document("widget A { }")
    assert "expected one of" in exc.value.message
    with pytest.raises(DslError):
        parse_document("claim A -> B via telepathy t;")


def test_fraction_literals_fold():
    doc = parse_document("algebra A { dim 4; e1*e1 = -1/2*e3 }")
    combo = doc.algebras[0].products[(1, 1)]
    assert combo == ((3, ENum(Fraction(-1, 2))),)


def test_expression_evaluation_with_imaginary():
    doc = parse_document("algebra A { dim 4; e1*e1 = 2*i*e2 }")
    combo = doc.algebras[0].products[(1, 1)]
    from algvar.scalars import GaussianRational

    assert eval_expr(combo[0][1], QQI, {}) == GaussianRational(0, 2)
