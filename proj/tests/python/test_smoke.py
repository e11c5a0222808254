import json
from pathlib import Path

import pytest

import cidim

SAMPLES = Path(__file__).resolve().parents[2] / "samples"


def sample(name):
    return (SAMPLES / name).read_text()


def loads(text):
    return json.loads(text)


def test_ring_info_socle():
    j = loads(cidim.ring_info(sample("ring_socle.json")))
    assert j["characteristic"] == 101
    assert j["variables"] == ["s", "t"]
    assert j["artinian"] is True
    assert j["top_degree"] == 1
    assert j["complete_intersection"] is False
    assert j["depth"]["display"] == "0"


def test_pd_of_two_term_complex():
    j = loads(cidim.pd(sample("ring_socle.json"), sample("two_term_socle.json")))
    assert j["kind"] == "finite"
    assert j["value"] == 1
    assert j["certified"] is True


def test_betti_doubling_row():
    j = loads(
        cidim.betti(
            sample("ring_socle.json"), sample("residue_field_socle.json"), cutoff=8
        )
    )
    totals = [row["total"] for row in j["levels"]]
    assert totals == [2**n for n in range(9)]


def test_polynomial_ring_betti_row_complete():
    j = loads(
        cidim.resolve(sample("ring_poly.json"), sample("residue_field_poly.json"))
    )
    totals = [row["total"] for row in j["levels"]]
    assert totals == [1, 2, 1]
    assert j["complete"] is True
    assert j["pd"]["value"] == 2
    assert "components" in j["resolution"]


def test_hierarchy_display():
    j = loads(
        cidim.hierarchy(
            sample("ring_hypersurface.json"),
            sample("residue_field_hypersurface.json"),
            sample("deformations_hypersurface.json"),
        )
    )
    assert j["display"] == "gdim 0 = pci 0 = ci 0 <= pd >= 10"
    assert j["chain_ok"] is True
    assert j["equality_ok"] is True


def test_poincare_constant_series():
    j = loads(
        cidim.poincare(
            sample("ring_hypersurface.json"), sample("residue_field_hypersurface.json")
        )
    )
    assert j["series"]["coefficients"] == [1] * 11
    assert j["complexity"]["kind"] == "exact"
    assert j["complexity"]["value"] == 1


def test_parse_error_is_value_error():
    with pytest.raises(ValueError, match="bad ring json"):
        cidim.ring_info("{not json")
    with pytest.raises(ValueError, match="unknown variable"):
        cidim.pd(
            sample("ring_socle.json"),
            '{"kind":"module","generator_degrees":[0],'
            '"relations":{"rows":1,"cols":1,"entries":[["q"]]}}',
        )


def test_reports_reparse_deterministically():
    a = cidim.gdim(sample("ring_poly.json"), sample("residue_field_poly.json"))
    b = cidim.gdim(sample("ring_poly.json"), sample("residue_field_poly.json"))
    assert a == b
    assert loads(a)["value"] == 2


def test_verify_suite_passes():
    j = cidim.report(cidim.verify, seed=20260823)
    assert j["total"] == 8
    assert j["passed"] == 8
    assert [c["id"] for c in j["cases"]] == list(range(1, 9))
