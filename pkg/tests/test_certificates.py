import json

import pytest

from minorham.certificates import check_certificate, hamilton_certificate, minor_certificate
from minorham.families import g_k, herschel, petersen
from minorham.graph import complete_graph


def test_cycle_certificate():
    cert = hamilton_certificate(complete_graph(6))
    assert cert["kind"] == "HamiltonCycle" and cert["schema"] == 1
    assert check_certificate(cert)
    assert check_certificate(json.dumps(cert))


def test_tough_cut_certificate():
    cert = hamilton_certificate(herschel(), tough_cut_size=5)
    assert cert["kind"] == "ToughnessCut" and len(cert["cut"]) == 5 and cert["components"] == 6
    assert check_certificate(cert)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_gk_tough_cut_names(k):
    g = g_k(k)
    cert = hamilton_certificate(g, tough_cut_size=5)
    assert sorted(g.label(v) for v in cert["cut"]) == ["u4", "u5", "x", "y", "z"]


def test_exhaustion_certificate():
    cert = hamilton_certificate(petersen(), tough_cut_size=4)
    assert cert["kind"] == "ExhaustionProof" and cert["nodes"] > 0
    assert check_certificate(cert)
    cert["transcript"] += 1
    assert not check_certificate(cert)


def test_minor_certificates():
    yes = minor_certificate(herschel(), 5)
    no = minor_certificate(herschel(), 6)
    assert yes["kind"] == "MinorModel" and no["kind"] == "MinorFreeExhaustion"
    assert check_certificate(yes) and check_certificate(no)


@pytest.mark.parametrize("mutate", [
    lambda c: c.update(cycle=c["cycle"][:-1]),
    lambda c: c.update(cycle=list(reversed(c["cycle"][1:])) + c["cycle"][:1] + [0]),
    lambda c: c.update(schema=2),
    lambda c: c.update(kind="Nonsense"),
])
def test_tampered_cycle_rejected(mutate):
    cert = hamilton_certificate(complete_graph(5))
    mutate(cert)
    assert not check_certificate(cert)


def test_empty_cut_rejected():
    cert = hamilton_certificate(herschel(), tough_cut_size=5)
    cert["cut"], cert["components"] = [], 1
    assert not check_certificate(cert)


def test_wrong_model_rejected():
    cert = minor_certificate(herschel(), 5)
    cert["model"]["S"] = cert["model"]["S"][:4] + cert["model"]["R1"][:1]
    assert not check_certificate(cert)
