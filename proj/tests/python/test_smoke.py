import pytest

import smartmash

QUERY = "find the signal strength of the provider of this phone number"
ONT = "http://smart.example/ont#"


@pytest.fixture(scope="module")
def fixtures():
    server = smartmash.FixtureServer(0)
    yield server
    server.stop()


@pytest.fixture()
def gateway(fixtures):
    return smartmash.Gateway(fixture_base_url=fixtures.base_url)


def test_validate_fixture_ontology():
    reports = smartmash.validate(smartmash.services_turtle())
    assert len(reports) == 4
    assert all(r["ok"] for r in reports)


def test_validate_rejects_bad_turtle():
    with pytest.raises(smartmash.EngineError) as info:
        smartmash.validate("@prefix : <urn:x#> .\n:a :b")
    assert info.value.code == "ParseError"


def test_health(gateway):
    status, body = gateway.health()
    assert status == 200
    assert body["status"] == "ok"
    assert body["services"] == 4


def test_analyze_two_stages(gateway):
    status, body = gateway.analyze(QUERY)
    assert status == 200
    services = [m["service"] for m in body["matchedServices"]]
    assert services[0].endswith("GetOperatorService")
    assert len(services) == 2
    assert body["formSpec"]["fields"][0]["label"] == "MSISDN"


def test_analyze_unknown_phrase_is_400(gateway):
    status, body = gateway.analyze("find the zorblax of this phone number")
    assert status == 400
    assert set(body) >= {"code", "message", "context"}


def test_execute_against_fixtures(gateway):
    status, body = gateway.execute(QUERY, {":GO_number_RI": "03123456"})
    assert status == 200, body
    literals = [n["literals"] for n in body["nodes"]]
    assert any(l.get(ONT + "providerName") == ["Alfa"] for l in literals)
    assert body["roots"]


def test_register_invalid_is_422(gateway):
    bad = smartmash.get_operator_turtle() + (
        "\n:GO_Extra_RLI a :RootInputParameter ;\n"
        "    :type :PhoneNumber ;\n"
        "    :rootInputOf :GetOperatorService .\n")
    status, body = gateway.register(bad)
    assert status == 422
    assert body["code"] == "ValidationFailed"
    assert gateway.health()[1]["services"] == 4
