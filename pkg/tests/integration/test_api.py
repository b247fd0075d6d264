import os
from pathlib import Path
import shutil
from fastapi.testclient import TestClient
import pytest
from dotenv import load_dotenv

# Load test environment variables
test_env_path = Path(__file__).parent.parent / '.env.test'
load_dotenv(test_env_path)

from monoid_bench.api.app import app

client = TestClient(app)

BASIS = "A y. A z. (x = y.z -> (y = 1 | z = 1))"
MULT_2_1 = "x2.x2.x1.x1.x1.x2.x1.x1.x2.x2.x1.x1.x2.x1.x1.x1.x2.x2"


@pytest.fixture(autouse=True)
def setup_test_env():
    """Create test report directory if it doesn't exist"""
    test_data_path = Path(os.getenv('REPORT_STORAGE_PATH'))
    test_data_path.mkdir(parents=True, exist_ok=True)
    yield
    # Cleanup test files after tests
    if test_data_path.exists():
        shutil.rmtree(test_data_path)


def test_health_check():
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy"}


def test_eval_basis_formula():
    request_data = {
        "formula": BASIS,
        "bindings": {"x": "x1"},
        "monoid": "free:x1,x2",
        "bound": 3
    }
    response = client.post("/api/v1/eval", json=request_data)
    assert response.status_code == 200
    result = response.json()
    assert result["value"] is True
    assert result["bound"] == 3
    assert result["level"] == "Π₁"
    assert result["nodes"] > 0

    request_data["bindings"] = {"x": "x1.x2"}
    response = client.post("/api/v1/eval", json=request_data)
    assert response.status_code == 200
    assert response.json()["value"] is False


def test_eval_syntax_error():
    response = client.post("/api/v1/eval", json={"formula": "E x. x ="})
    assert response.status_code == 422
    assert "message" in response.json()


def test_eval_invalid_bound():
    response = client.post("/api/v1/eval", json={"formula": BASIS, "bound": -1})
    assert response.status_code == 422


def test_gadget_mult():
    response = client.post("/api/v1/gadget", json={"name": "mult", "args": ["2", "1"]})
    assert response.status_code == 200
    result = response.json()
    assert result["word"] == MULT_2_1
    assert result["witness_bound"] == 18
    assert result["assignment"]["x"] == "x1.x1"
    assert result["holds"] is None


def test_gadget_check():
    response = client.post("/api/v1/gadget",
                           json={"name": "centralizer", "args": ["3"], "check": True})
    assert response.status_code == 200
    assert response.json()["holds"] is True


def test_unknown_gadget():
    response = client.post("/api/v1/gadget", json={"name": "square", "args": []})
    assert response.status_code == 404
    assert "Unknown gadget" in response.json()["detail"]


def test_gadget_invalid_parameters():
    response = client.post("/api/v1/gadget", json={"name": "mult", "args": ["-1", "0"]})
    assert response.status_code == 422
    assert "non-negative" in response.json()["message"]


def test_verify_and_fetch_report():
    response = client.post("/api/v1/verify",
                           json={"suite": "trans", "max_size": 2, "save": "trans_run"})
    assert response.status_code == 200
    result = response.json()
    assert result["ok"] is True
    assert result["instances"] == 3
    assert result["rows"] == []
    assert result["storage_path"].endswith("trans_run.pkl")

    response = client.get("/api/v1/reports")
    assert response.status_code == 200
    assert response.json() == ["trans_run"]

    response = client.get("/api/v1/reports/trans_run")
    assert response.status_code == 200
    stored = response.json()
    assert stored["suite"] == "trans"
    assert stored["instances"] == 3


def test_unknown_suite():
    response = client.post("/api/v1/verify", json={"suite": "unknown"})
    assert response.status_code == 404
    assert "mult" in response.json()["detail"]


def test_invalid_report_id():
    response = client.get("/api/v1/reports/missing")
    assert response.status_code == 404


def test_translate():
    response = client.post("/api/v1/translate",
                           json={"interpretation": "nat-in-free", "formula": "0 = 0"})
    assert response.status_code == 200
    result = response.json()
    assert result["source"] == "0 = 0"
    assert result["source_level"] == "QF"


def test_translate_sort_error():
    response = client.post("/api/v1/translate",
                           json={"interpretation": "monoid-in-nat", "formula": "x + x = 4"})
    assert response.status_code == 422


def test_translate_in_a_monoid_of_another_kind():
    response = client.post("/api/v1/translate",
                           json={"interpretation": "nat-in-trace", "formula": "0 = 0",
                                 "monoid": "free:x1,x2"})
    assert response.status_code == 422
    assert "needs a trace monoid" in response.json()["message"]


def test_unknown_interpretation():
    response = client.post("/api/v1/translate",
                           json={"interpretation": "nat-in-group", "formula": "0 = 0"})
    assert response.status_code == 404


def test_member():
    response = client.post("/api/v1/member",
                           json={"element": "a.b.a.b", "generators": ["ab"]})
    assert response.status_code == 200
    result = response.json()
    assert result["member"] is True
    assert result["witness"] == "(a.b)(a.b)"
    assert result["indices"] == [0, 0]


def test_classify():
    response = client.post("/api/v1/classify", json={"formula": "A x. E y. x = y"})
    assert response.status_code == 200
    result = response.json()
    assert result["level"] == "Π₂"
    assert result["ascii"] == "Pi_2"


def test_code_and_decode():
    response = client.post("/api/v1/code", json={"value": "x1.x2"})
    assert response.status_code == 200
    assert response.json() == {"code": 133, "tuple": [1, 2]}

    response = client.post("/api/v1/code", json={"value": "(1,2)"})
    assert response.json()["code"] == 133

    response = client.post("/api/v1/decode", json={"code": 133})
    assert response.status_code == 200
    assert response.json() == {"tuple": [1, 2], "word": "x1.x2"}


def test_decode_malformed_code():
    response = client.post("/api/v1/decode", json={"code": 2})
    assert response.status_code == 422
    assert "length field" in response.json()["message"]
