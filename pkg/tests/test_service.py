import numpy as np
import pytest
from fastapi.testclient import TestClient

from triphase.service.app import create_app
from triphase.service.models import (
    DensityResponse,
    EvolveResponse,
    HolonomyResponse,
    PhaseResponse,
    VerifyResponse,
)


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def circle_spec(angle="alpha", center=(0.0, np.pi / 6, 0.0, np.pi / 2), winding=1):
    alpha, beta, gamma, theta = center
    return {
        "units": "radians",
        "path": {
            "kind": "circle",
            "angle": angle,
            "center": {"alpha": alpha, "beta": beta, "gamma": gamma, "theta": theta},
            "winding": winding,
        },
    }


def segment_spec():
    return {
        "units": "radians",
        "path": {
            "kind": "keyframes",
            "keyframes": [[0.0, 0.3, 0.0, 0.8], [1.3, 0.55, 0.4, 1.1]],
            "closed": False,
        },
    }


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"
    assert body["version"]


def test_phase_circle(client):
    r = client.post("/phase", json={"spec": circle_spec()})
    assert r.status_code == 200
    doc = PhaseResponse.model_validate(r.json())
    assert doc.status == "ok"
    assert doc.result_kind == "loop_phase"
    assert doc.closed
    assert doc.phase == pytest.approx(np.pi, abs=1e-10)
    assert doc.delta <= 1e-9
    assert len(doc.spec_digest) == 64


def test_phase_repeated_posts_identical_bytes(client):
    payload = {"spec": circle_spec(), "samples": 512}
    first = client.post("/phase", json=payload)
    second = client.post("/phase", json=payload)
    assert first.content == second.content


def test_phase_open_path_label(client):
    r = client.post("/phase", json={"spec": segment_spec()})
    assert r.status_code == 200
    doc = PhaseResponse.model_validate(r.json())
    assert doc.result_kind == "open_path_line_integral"
    assert not doc.closed
    assert doc.status == "ok"


def test_holonomy_level1(client):
    spec = circle_spec(center=(0.0, np.pi / 6, 0.0, 0.0))
    r = client.post("/holonomy", json={"spec": spec, "levels": [1]})
    assert r.status_code == 200
    doc = HolonomyResponse.model_validate(r.json())
    assert doc.status == "ok"
    assert doc.levels == [1]
    assert doc.matrix.re[0][0] == pytest.approx(-1.0, abs=1e-9)
    assert doc.matrix.im[0][0] == pytest.approx(0.0, abs=1e-9)
    assert doc.unitarity_error <= 1e-10


def test_holonomy_pair23_identity(client):
    spec = circle_spec(center=(0.0, 0.0, 0.0, 0.0))
    r = client.post("/holonomy", json={"spec": spec, "levels": [2, 3]})
    doc = HolonomyResponse.model_validate(r.json())
    got = np.array(doc.matrix.re) + 1j * np.array(doc.matrix.im)
    assert np.max(np.abs(got - np.eye(2))) <= 1e-9


def test_holonomy_open_path_is_422(client):
    r = client.post("/holonomy", json={"spec": segment_spec(), "levels": [1]})
    assert r.status_code == 422
    detail = r.json()["detail"]
    assert detail["error"] == "PathNotClosedError"
    assert "closed" in detail["message"]


def test_evolve_converges(client):
    spec = circle_spec(center=(0.0, 0.0, 0.0, np.pi / 3))
    r = client.post(
        "/evolve",
        json={"spec": spec, "levels": [1], "e1": 0.0, "e3": 5.0, "t_ladder": [5, 10]},
    )
    assert r.status_code == 200
    doc = EvolveResponse.model_validate(r.json())
    assert doc.status == "ok"
    assert not doc.warnings
    assert [e.total_time for e in doc.entries] == [5.0, 10.0]
    assert doc.entries[0].deviation > doc.entries[1].deviation
    assert doc.entries[0].dynamical_phase == pytest.approx(0.0)


def test_evolve_warns_when_not_adiabatic(client):
    # sweep rate comparable to the gap leaks population out of the level,
    # which shows up as a polar residual far above the 0.1 default
    spec = circle_spec(center=(0.0, 0.4, 0.0, np.pi / 4))
    r = client.post(
        "/evolve",
        json={"spec": spec, "levels": [1], "e1": 0.0, "e3": 5.0, "t_ladder": [1.6]},
    )
    assert r.status_code == 200
    doc = EvolveResponse.model_validate(r.json())
    assert doc.status == "warning"
    assert doc.warnings and "adiabatic" in doc.warnings[0]


def test_evolve_mixed_levels_is_422(client):
    r = client.post(
        "/evolve",
        json={"spec": circle_spec(), "levels": [2, 3], "e1": 0.0, "e3": 5.0},
    )
    assert r.status_code == 422
    assert r.json()["detail"]["error"] == "MixedLevelsError"


def test_evolve_parallel_matches_serial(client):
    spec = circle_spec(center=(0.0, 0.0, 0.0, np.pi / 3))
    base = {"spec": spec, "levels": [1], "e1": 0.0, "e3": 5.0, "t_ladder": [2, 4]}
    serial = client.post("/evolve", json={**base, "parallel": False})
    parallel = client.post("/evolve", json={**base, "parallel": True})
    assert serial.content == parallel.content


def test_density_south_pole(client):
    r = client.post("/density", json={"alpha": 0.0, "beta": 0.0, "gamma": 0.0, "theta": 0.0})
    assert r.status_code == 200
    doc = DensityResponse.model_validate(r.json())
    assert doc.status == "ok"
    assert doc.pure
    assert doc.bloch[7] == pytest.approx(-1.0)
    assert np.allclose(doc.bloch[:7], 0.0)
    assert doc.density.re[2][2] == pytest.approx(1.0)
    assert doc.route_error <= 1e-12


def test_verify_single_suite(client):
    r = client.post("/verify", json={"suite": "algebra"})
    assert r.status_code == 200
    doc = VerifyResponse.model_validate(r.json())
    assert doc.status == "ok"
    assert doc.passed
    assert len(doc.suites) == 1
    assert doc.suites[0].suite == "algebra"
    assert all(c.passed for c in doc.suites[0].checks)


@pytest.mark.parametrize(
    "endpoint,payload",
    [
        ("/phase", {"spec": {"units": "degrees", "path": {"kind": "circle", "angle": "alpha", "center": {}, "winding": 1}}}),
        ("/phase", {"spec": circle_spec(), "samples": 4}),
        ("/holonomy", {"spec": circle_spec(), "levels": [1], "segments": 32}),
        ("/holonomy", {"spec": circle_spec(), "levels": [1, 1]}),
        ("/holonomy", {"spec": circle_spec(), "levels": []}),
        ("/holonomy", {"spec": circle_spec(winding=0), "levels": [1]}),
        ("/evolve", {"spec": circle_spec(), "levels": [1], "t_ladder": [-2.0]}),
        ("/phase", {"spec": {"units": "radians", "path": {"kind": "keyframes", "keyframes": [[0.0, 0.0, 0.0]]}}}),
        ("/phase", {"spec": circle_spec(), "unexpected": 1}),
        ("/verify", {"suite": "none"}),
    ],
)
def test_validation_rejections(client, endpoint, payload):
    r = client.post(endpoint, json=payload)
    assert r.status_code == 422
    assert "detail" in r.json()


def test_levels_are_sorted_and_echoed(client):
    spec = circle_spec(center=(0.0, 0.0, 0.0, 0.0))
    r = client.post("/holonomy", json={"spec": spec, "levels": [3, 2]})
    assert r.status_code == 200
    assert HolonomyResponse.model_validate(r.json()).levels == [2, 3]
