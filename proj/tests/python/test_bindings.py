import pytest

import tsrforge as tf
from oracle import count_g_plus_lambda, count_x3x2x_lambda


def test_field_and_polynomial_basics():
    f4 = tf.Field.extension(2, 2)
    assert f4.order == 4
    assert f4.modulus == [1, 1, 1]
    a = f4.parse("a")
    assert f4.mul(a, f4.inv(a)) == 1
    p = tf.Polynomial(f4, "x^3 + x^2 + x + a")
    assert str(p) == "x^3 + x^2 + x + a"
    assert p.degree == 3
    assert tf.is_primitive(p)
    assert tf.Polynomial(f4, "0").degree is None


def test_certificate_round_trip():
    f2 = tf.Field.prime(2)
    cert = tf.primitivity_certificate(tf.Polynomial(f2, "x^4 + x + 1"))
    assert cert["group_order"] == 15
    assert tf.verify_certificate(cert)
    cert["witnesses"][0] = "1"
    assert not tf.verify_certificate(cert)
    assert tf.primitivity_certificate(tf.Polynomial(f2, "x^4 + x^3 + x^2 + x + 1")) is None


def test_search_and_spec_round_trip():
    r = tf.search_primitive_tsr(5, 2, 3)
    assert r["replay"] == "ok"
    spec = r["spec"]
    assert tf.normalize_spec(spec) == spec
    assert tf.tsr_charpoly(spec) == r["charpoly"] == tf.tsr_charpoly_direct(spec)
    assert tf.is_primitive_tsr(spec)
    assert tf.tsr_period(spec) == 5**6 - 1


def test_errors_map_to_python_exceptions():
    with pytest.raises(tf.TsrError, match="InvalidParity"):
        tf.search_primitive_tsr(3, 2, 2)
    with pytest.raises(tf.BudgetExhaustedError):
        tf.search_primitive_tsr(2, 2, 3, budget=0)
    with pytest.raises(tf.TsrError, match="SingularB"):
        tf.tsr_charpoly({"q": 2, "m": 2, "n": 2, "c": [1], "B": [[1, 1], [1, 1]]})


def test_counts():
    assert tf.closed_form_count("lfsr_prim", 2, 1, 4) == 2
    assert tf.closed_form_count("sigma_prim", 2, 2, 2) == 16
    assert tf.closed_form_count("gl_order", 2, 2, 1) == 6
    assert [tf.count_trace_one_classes(m)[0] for m in range(2, 11)] == [1, 1, 1, 2, 3, 6, 7, 16, 25]
    assert tf.count_trace_one_elements(6) == 2 * 3 * 6
    assert tf.cyclotomic_coset_leaders(2) == [1, 7]


def test_special_sets_agree_with_python_oracle():
    # Pure-Python field arithmetic under the same moduli.
    cases = [(2, [1, 1, 1], 3), (3, [2, 2, 1], 3), (2, [1, 1, 1], 4), (3, [1, 2, 0, 1], 3)]
    for p, modulus, n in cases:
        m = len(modulus) - 1
        ours = tf.enumerate_special_primitives(p, m, n, "P_mnq")
        assert len(ours) == count_g_plus_lambda(p, modulus, n)
    assert count_x3x2x_lambda(5, [2, 4, 1]) == 4


def test_tsrp_theorem():
    specs = tf.enumerate_tsrp(2, 2, 3)
    pc = len(tf.enumerate_special_primitives(2, 2, 3, "P_qmn"))
    assert len(specs) == tf.tsrp_count_theorem(2, 2, 3, pc) == 2
    assert tf.tsrp_upper_bound(2, 2, 2) == 2


def test_tables_and_verify():
    files = tf.build_table("t3")
    assert set(files) == {"t3.csv", "t3_counts.csv", "t3_listed.csv"}
    assert files == tf.build_table("t3", threads=3)
    results = tf.run_verify("quick")
    assert all(ok for _, ok, _ in results)
    bad = tf.run_verify("quick", inject_fault=True)
    assert [name for name, ok, _ in bad if not ok][0] == "charpoly-formula"


def test_trace_one_quadratic():
    q = tf.find_trace_one_quadratic(2)
    assert str(q) == "x^2 + ax + a"
    f2 = tf.Field.prime(2)
    assert tf.conjugate_product(q, 2) == tf.Polynomial(f2, "x^4 + x^3 + 1")
