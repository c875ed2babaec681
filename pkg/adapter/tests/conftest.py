import pytest
from fastapi.testclient import TestClient

from taletailor_adapter.config import AdapterConfig
from taletailor_adapter.server import create_adapter_app


@pytest.fixture(scope="session")
def adapter_app():
    return create_adapter_app(AdapterConfig())


@pytest.fixture()
def client(adapter_app):
    with TestClient(adapter_app, base_url="http://adapter.test") as test_client:
        yield test_client
