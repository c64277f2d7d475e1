from fractions import Fraction

import pytest

import gencert


def test_version():
    assert gencert.__version__ == "0.1.0"


def test_psl34_is_one_fifth():
    assert gencert.psl34_bound() == Fraction(1, 5)


def test_omega_minus_14_2_drops_sigma0():
    cert = gencert.verify("omega-", 14, 2)
    assert cert["witness"]["r"] == "43"
    assert cert["sigma0_dropped"]
    assert gencert.fraction(cert["total"]) == Fraction(9, 262144)
    assert cert["verdict"] == "certified"
    assert gencert.certificate_checksum_ok(cert)


def test_keeping_sigma0_is_inconclusive():
    cert = gencert.verify("omega-", 14, 2, drop_sigma0=False)
    assert cert["verdict"] == "inconclusive"
    assert gencert.fraction(cert["total"]) >= 1


def test_tampered_certificate_fails_checksum():
    cert = gencert.verify("psl", 9, 2)
    cert["total"] = "0/1"
    assert not gencert.certificate_checksum_ok(cert)


def test_certificates_are_deterministic():
    assert gencert.verify("omega+", 14, 3) == gencert.verify("omega+", 14, 3)


def test_small_n_routing():
    assert gencert.verify("psp", 12, 2)["method"] == "small-n"
    assert gencert.verify("psp", 12, 2, method="generic")["verdict"] == "inconclusive"


def test_psp4_bound():
    b = gencert.psp4_bound(8)
    assert gencert.fraction(b["assembled"]) < 1
    assert gencert.psp4_bound(4)["verdict"] == "inconclusive"


def test_sweep_sorted_and_certified():
    pts = gencert.sweep("psl", "9..11", [2, 3, 4, 5])
    keys = [(int(p["spec"]["n"]), int(p["spec"]["q"])) for p in pts]
    assert keys == sorted(keys)
    assert {p["status"] for p in pts} == {"certified"}


def test_classify():
    assert gencert.classify("PSL3(4)")["p"] == "7"
    rec = gencert.classify("PSU8(2)")
    assert (rec["case"], rec["e"], rec["r"]) == ("theorem2", 14, "43")


def test_ppd():
    assert gencert.primitive_prime_divisors(2, 6) == []
    assert gencert.primitive_prime_divisors(2, 11) == ["23", "89"]


def test_select_r():
    w = gencert.select_r("psl", 9, 3)
    assert w["r"] == "757"


@pytest.mark.parametrize("args", [("psl", 7, 2), ("psl", 9, 6), ("psp", 13, 2)])
def test_invalid_specs_raise(args):
    with pytest.raises(ValueError):
        gencert.verify(*args)
