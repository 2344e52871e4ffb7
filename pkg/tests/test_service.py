"""HTTP surface: endpoints, validation, error mapping, CSV streaming."""

import csv

import pytest
from fastapi.testclient import TestClient

from braidpoly.service.app import app
from braidpoly.service.schemas import AlexanderResponse, CheckResponse

client = TestClient(app)


class TestRoot:
    def test_health(self):
        response = client.get("/")
        assert response.status_code == 200
        body = response.json()
        assert body["name"] == "braidpoly"
        assert "version" in body


class TestAlexanderEndpoint:
    def test_trefoil(self):
        response = client.post("/alexander", json={"word": "s1^3", "strands": 2})
        assert response.status_code == 200
        body = response.json()
        assert body["poly_t"] == {"offset": 0, "coeffs": [1, -1, 1]}
        assert body["poly_s"] == {"offset": 0, "coeffs": [1, 1, 1]}
        assert body["degree"] == 2
        assert body["alternating_in_t"] is True
        assert body["is_zero"] is False

    def test_unknot(self):
        response = client.post(
            "/alexander", json={"word": "s1^1 s2^-1 s3^1", "strands": 4}
        )
        assert response.json()["poly_s"] == {"offset": 0, "coeffs": [1]}

    def test_split_closure(self):
        response = client.post("/alexander", json={"word": "s1", "strands": 3})
        body = response.json()
        assert body["is_zero"] is True
        assert body["poly_t"] == {"offset": 0, "coeffs": []}

    def test_round_trip_through_schema(self):
        response = client.post("/alexander", json={"word": "s1^3", "strands": 2})
        model = AlexanderResponse(**response.json())
        assert model.model_dump() == response.json()

    def test_bad_word_is_400(self):
        response = client.post("/alexander", json={"word": "zzz", "strands": 4})
        assert response.status_code == 400
        assert "syllable" in response.json()["detail"]

    def test_out_of_range_index_is_400(self):
        response = client.post("/alexander", json={"word": "s5", "strands": 4})
        assert response.status_code == 400

    def test_bad_strands_is_422(self):
        response = client.post("/alexander", json={"word": "s1", "strands": 1})
        assert response.status_code == 422


class TestSignatureEndpoint:
    def test_worked_example(self):
        response = client.post(
            "/signature", json={"strands": 4, "blocks": "3,2,5", "sign": "+"}
        )
        assert response.status_code == 200
        assert response.json() == {
            "value": -5,
            "method": "closed_form",
            "case": "n_even_positive",
        }

    def test_list_blocks_and_oracle(self):
        response = client.post(
            "/signature",
            json={"strands": 4, "blocks": [[3, 2, 5]], "oracle": True},
        )
        assert response.status_code == 200
        body = response.json()
        assert body["value"] == -5
        assert body["method"] == "seifert_oracle"

    def test_negative_sign(self):
        response = client.post(
            "/signature", json={"strands": 4, "blocks": "3,2,5", "sign": "-"}
        )
        assert response.json()["value"] == 5

    def test_oracle_needs_one_block(self):
        response = client.post(
            "/signature",
            json={"strands": 4, "blocks": "3,2,5;1,1,1", "oracle": True},
        )
        assert response.status_code == 400
        assert "block" in response.json()["detail"]

    def test_bad_block_shape_is_400(self):
        response = client.post(
            "/signature", json={"strands": 4, "blocks": "3,2"}
        )
        assert response.status_code == 400


class TestCheckEndpoint:
    def test_worked_example(self):
        response = client.post(
            "/check", json={"strands": 4, "blocks": "3,2,5", "sign": "+"}
        )
        assert response.status_code == 200
        body = response.json()
        assert body["components"] == 2
        assert body["is_knot"] is False
        assert body["sigma"] == -5
        assert body["degree"] == 7
        assert body["is_trapezoidal"] is True
        assert body["stable_length"] == 1
        assert body["bound_holds"] is True
        assert body["center"] == "7/2"

    def test_round_trip_through_schema(self):
        response = client.post(
            "/check", json={"strands": 4, "blocks": [[1, 1, 1]]}
        )
        model = CheckResponse(**response.json())
        assert model.model_dump() == response.json()


class TestCoeffsEndpoint:
    def test_values(self):
        response = client.post("/coeffs", json={"strands": 4, "blocks": 1})
        assert response.json() == {
            "a0": 1,
            "a1": 3,
            "a2": 6,
            "a3": 10,
            "thresholds_met": [True, True, True, True],
        }

    def test_threshold_masking(self):
        response = client.post(
            "/coeffs", json={"strands": 4, "blocks": 1, "min_entry": 3}
        )
        body = response.json()
        assert body["a2"] == 6
        assert body["a3"] is None
        assert body["thresholds_met"] == [True, True, True, False]

    def test_validation(self):
        response = client.post("/coeffs", json={"strands": 2, "blocks": 1})
        assert response.status_code == 422


class TestScanEndpoint:
    def test_small_grid(self):
        response = client.post(
            "/scan", json={"strands": 4, "m_max": 1, "max_entry": 2}
        )
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/csv")
        records = list(csv.reader(response.text.splitlines()))
        header, rows = records[0], records[1:]
        assert len(rows) == 8
        bound_col = header.index("bound_holds")
        assert all(row[bound_col] == "true" for row in rows)

    def test_deterministic(self):
        payload = {"strands": 4, "m_min": 1, "m_max": 2, "max_entry": 1}
        first = client.post("/scan", json=payload)
        second = client.post("/scan", json=payload)
        assert first.text == second.text

    def test_bad_range(self):
        response = client.post(
            "/scan", json={"m_min": 3, "m_max": 1, "max_entry": 2}
        )
        assert response.status_code == 422
