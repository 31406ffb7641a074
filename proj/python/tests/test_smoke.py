import json

import pytest

import cobord


def test_group_law_low_order():
    ctx = cobord.FglContext(2)
    assert ctx.sum.to_text() == "x + y - p1*x*y"
    assert ctx.sum.to_latex() == "x + y - p_{1} x y"
    assert ctx.inverse.to_text() == "-x - p1*x^2"


def test_k_series_and_terms():
    ctx = cobord.FglContext(3)
    two = cobord.k_series(ctx, 2)
    assert two.to_text() == "2*x - p1*x^2 + 2*p1^2*x^3 - 2*p2*x^3"
    assert two.terms()[1] == ("-1", {"p1": 1, "x": 2})
    assert cobord.k_series(ctx, 0).is_zero()


def test_revert_roundtrip():
    s = cobord.Series.parse("t + 1/2*p1*t^2 + 1/3*p2*t^3", ["t"], 3)
    assert cobord.series_revert(cobord.series_revert(s)) == s
    assert cobord.series_revert(s).to_text() == "t - 1/2*p1*t^2 + 1/2*p1^2*t^3 - 1/3*p2*t^3"


def test_lemma_counterexample():
    ctx = cobord.FglContext(2)
    report = cobord.lemma_check(ctx, 2)
    assert report.verdict
    assert report.difference.to_text() == "-3*p1*x^2"
    assert cobord.epsilon_space(report.class_resolution) == report.class_naive
    assert not cobord.lemma_check(ctx, 1).verdict


def test_realizations_and_combination():
    ctx = cobord.FglContext(3)
    sigma1 = cobord.SingularityId.parse("sigma1")
    trivial = cobord.realization_trivial(sigma1, 1, 1)
    p1 = cobord.realization_p1(ctx, 1, 2)
    assert p1.poly.to_text() == "-a1 + b1 - p1*a1^2 + p1*a1*b1"
    assert cobord.check_realization(p1, sigma1)
    combined = cobord.combine_affine(trivial, p1, 2)
    assert combined.poly == trivial.poly * 2 - p1.poly
    with pytest.raises(cobord.UsageError):
        cobord.combine_affine(trivial, p1, "1/2")
    assert cobord.combine_affine(trivial, p1, "1/2", allow_rational=True).poly.to_text()


def test_divisibility():
    t = cobord.thom_poly(cobord.SingularityId.sigma(2), 2, 2)
    cofactor = cobord.CharClassPoly.parse("p1 + a1", 2, 2, mode="cohomology")
    report = cobord.divisibility_check(cofactor * t, t)
    assert report.divisible and report.integral
    assert report.quotient == cofactor
    assert not cobord.divisibility_check(cobord.CharClassPoly.parse("a1", 2, 2, "cohomology"), t).divisible


def test_chern_dold_and_json():
    ctx = cobord.FglContext(3)
    poly = cobord.CharClassPoly.parse("b1 - a1", 1, 1)
    ch = cobord.chern_dold_poly(ctx, poly)
    assert ch.mode == "cohomology"
    assert ch.homogeneous_part(1) == poly.with_mode("cohomology")
    doc = json.loads(poly.to_json())
    assert doc["schema_version"] == "1"
    assert cobord.CharClassPoly.from_json(poly.to_json()) == poly


def test_errors_map_to_python_exceptions():
    with pytest.raises(cobord.ParseError):
        cobord.CharClassPoly.parse("a1 ^^ 2", 1, 1)
    with pytest.raises(cobord.ConfigurationError):
        cobord.FglContext(0)
    with pytest.raises(cobord.DomainError):
        cobord.series_revert(cobord.Series.parse("2*t", ["t"], 3))
    with pytest.raises(cobord.TruncationError):
        cobord.chern_dold_poly(cobord.FglContext(2), cobord.CharClassPoly.parse("a1^3", 1, 1))
    assert issubclass(cobord.TruncationError, cobord.DomainError)


def test_run_matches_cli():
    code, out, err = cobord.run(["kseries", "--k", "1", "--order", "5"])
    assert (code, out, err) == (0, "x\n", "")
    code, _, err = cobord.run(["kseries", "--k", "2", "--order", "0"])
    assert code == 1 and err
