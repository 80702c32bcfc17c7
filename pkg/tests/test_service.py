import pytest
from fastapi.testclient import TestClient

from annealpath.graphs import store_graph
from annealpath.service import app
from fixture_graphs import END, START, fixture_g1, fixture_g2, path_graph

client = TestClient(app)

G1_TEXT = store_graph(fixture_g1())
G2_TEXT = store_graph(fixture_g2())


def build_qubo_text(graph_text=G1_TEXT, start=START, end=END):
    resp = client.post("/qubo/build", json={"graph": graph_text, "start": start, "end": end})
    assert resp.status_code == 200
    return resp.json()["qubo"]


def test_health():
    assert client.get("/health").json() == {"status": "ok"}


class TestGraphEndpoints:
    def test_generate_ba(self):
        resp = client.post(
            "/graph/generate",
            json={"model": "ba", "total_vertices": 30, "n": 2, "seed": 1},
        )
        data = resp.json()
        assert data["vertex_count"] == 30
        assert data["edge_count"] == 1 + 2 * 28

    def test_generate_er_deterministic(self):
        req = {"model": "er", "total_vertices": 25, "p": 0.3, "seed": 9}
        a = client.post("/graph/generate", json=req).json()
        b = client.post("/graph/generate", json=req).json()
        assert a["graph"] == b["graph"] and a["graph_hash"] == b["graph_hash"]

    def test_generate_bad_model(self):
        resp = client.post("/graph/generate", json={"model": "ws", "total_vertices": 5, "seed": 0})
        assert resp.status_code == 422

    def test_reweight(self):
        resp = client.post("/graph/reweight", json={"graph": G1_TEXT, "seed": 3})
        assert resp.status_code == 200
        assert resp.json()["edge_count"] == 14

    def test_degree_distribution(self):
        resp = client.post("/graph/degree-distribution", json={"graph": store_graph(path_graph(3))})
        assert resp.json()["entries"] == {"1": pytest.approx(2 / 3), "2": pytest.approx(1 / 3)}

    def test_power_law_fit(self):
        gen = client.post(
            "/graph/generate",
            json={"model": "ba", "total_vertices": 300, "n": 5, "seed": 2},
        ).json()
        resp = client.post("/graph/power-law-fit", json={"graph": gen["graph"], "exponent": 3.0})
        assert resp.status_code == 200
        assert resp.json()["residual"] >= 0

    def test_parse_error_surfaces_line(self):
        resp = client.post("/graph/degree-distribution", json={"graph": "2\n0 0 1\n"})
        assert resp.status_code == 422
        assert "line 2" in resp.json()["detail"]


class TestQuboEndpoints:
    def test_build_and_energy(self):
        qubo_text = build_qubo_text()
        resp = client.post(
            "/qubo/energy", json={"qubo": qubo_text, "bits": [1, 0, 0, 0, 0, 0, 1, 1]}
        )
        assert resp.json()["energy"] == -6.0

    def test_ising(self):
        resp = client.post("/qubo/ising", json={"qubo": build_qubo_text()})
        data = resp.json()
        assert len(data["h"]) == 8
        assert isinstance(data["offset"], float)


class TestSolveEndpoints:
    def test_exact(self):
        resp = client.post("/solve/exact", json={"qubo": build_qubo_text()})
        data = resp.json()
        assert data["total_reads"] == 256
        assert data["rows"][0]["energy"] == -6.0
        assert data["rows"][0]["bitstring"] == "10000011"

    def test_sa(self):
        resp = client.post(
            "/solve/sa",
            json={"qubo": build_qubo_text(), "reads": 50, "sweeps": 50, "seed": 4},
        )
        data = resp.json()
        assert sum(r["occurrences"] for r in data["rows"]) == 50

    def test_exact_cap(self):
        gen = client.post(
            "/graph/generate", json={"model": "er", "total_vertices": 30, "p": 0.2, "seed": 0}
        ).json()
        qubo_text = build_qubo_text(gen["graph"], 0, 29)
        resp = client.post("/solve/exact", json={"qubo": qubo_text})
        assert resp.status_code == 422


class TestDecodeAnalyze:
    def test_decode_valid(self):
        resp = client.post(
            "/path/decode",
            json={"graph": G1_TEXT, "bits": [1, 0, 0, 0, 0, 0, 1, 1], "start": 0, "end": 7},
        )
        data = resp.json()
        assert data["valid"] and data["vertices"] == [0, 6, 7] and data["total_weight"] == 2

    def test_decode_invalid(self):
        resp = client.post(
            "/path/decode",
            json={"graph": G1_TEXT, "bits": [1, 0, 0, 0, 0, 0, 0, 1], "start": 0, "end": 7},
        )
        assert resp.json() == {
            "valid": False,
            "vertices": None,
            "total_weight": None,
            "failure_reason": "disconnected",
        }

    def test_analyze_g2(self):
        resp = client.post("/analyze", json={"graph": G2_TEXT, "start": 0, "end": 7})
        data = resp.json()
        assert data["decodes_to_shortest_path"]
        assert sorted(data["argmin_states"]) == ["10100001", "11000001"]

    def test_sweep(self):
        resp = client.post(
            "/analyze/sweep",
            json={"graph": G1_TEXT, "start": 0, "end": 7, "deltas": [3.0, 6.0]},
        )
        assert len(resp.json()["entries"]) == 2


class TestBaselineEndpoint:
    def test_dijkstra(self):
        resp = client.post("/baseline/dijkstra", json={"graph": G2_TEXT, "source": 0})
        data = resp.json()
        assert data["distances"][7] == 2

    def test_floyd_warshall_matrix(self):
        resp = client.post("/baseline/floyd_warshall", json={"graph": G2_TEXT})
        data = resp.json()
        assert data["n"] == 8
        assert data["distances"][0][7] == 2

    def test_unknown(self):
        assert client.post("/baseline/astar", json={"graph": G1_TEXT}).status_code == 422


class TestSpectrumEndpoint:
    def test_gap(self):
        qubo_text = "1 0 0\n0 0 1.0\n"
        resp = client.post("/spectrum/gap", json={"qubo": qubo_text, "grid_points": 21})
        data = resp.json()
        assert data["gaps"][0] == pytest.approx(2.0)
        assert data["gaps"][-1] == pytest.approx(1.0)


class TestChimeraEndpoint:
    def test_feasibility(self):
        gen = client.post(
            "/graph/generate", json={"model": "ba", "total_vertices": 600, "n": 2, "seed": 0}
        ).json()
        resp = client.post("/chimera/feasibility", json={"graph": gen["graph"]})
        data = resp.json()
        assert data["required_qubits"] == 1800 and data["fits"]


class TestBenchEndpoints:
    def test_vertices_then_fit_then_plot(self):
        resp = client.post(
            "/bench/vertices",
            json={"sizes": [10, 20, 40], "algorithms": ["dijkstra"], "seeds": [0]},
        )
        data = resp.json()
        assert len(data["records"]) == 3
        fit = client.post(
            "/fit", json={"records": data["records"], "models": ["affine_log", "affine_invsqrt"]}
        ).json()
        assert {f["model"] for f in fit["fits"]} == {"affine_log", "affine_invsqrt"}
        series = {
            "dijkstra": (
                [r["input_size"] for r in data["records"]],
                [r["wall_seconds"] for r in data["records"]],
            )
        }
        plot = client.post("/plot", json={"series": series}).json()
        assert plot["svg"].startswith("<svg")

    def test_edges(self):
        resp = client.post(
            "/bench/edges",
            json={"vertex_count": 12, "probs": [0.3, 0.7], "algorithms": ["exact"], "seeds": [0]},
        )
        data = resp.json()
        assert len(data["records"]) == 2
        assert data["csv"].startswith("algorithm,input_size,probability")
