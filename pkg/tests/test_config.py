import logging

import common
from clone_entanglement.config import Settings, SettingsSingleton


def test_settings_defaults(monkeypatch):
    for name in ("CLONE_ENT_LOG_LEVEL", "CLONE_ENT_GCP_PROJECT", "CLONE_ENT_GCP_CREDENTIALS"):
        monkeypatch.delenv(name, raising=False)
    settings = SettingsSingleton.get_instance()
    assert settings == Settings()
    assert not settings.cloud_logging_enabled


def test_settings_are_cached_until_reset(monkeypatch):
    monkeypatch.setenv("CLONE_ENT_LOG_LEVEL", "debug")
    first = SettingsSingleton.get_instance()
    assert first.log_level == "DEBUG"
    monkeypatch.setenv("CLONE_ENT_LOG_LEVEL", "info")
    assert SettingsSingleton.get_instance() is first
    SettingsSingleton.reset()
    assert SettingsSingleton.get_instance().log_level == "INFO"


def test_cloud_logging_needs_an_existing_credentials_file(tmp_path):
    credentials = tmp_path / "sa.json"
    assert not Settings(gcp_project="proj", gcp_credentials=str(credentials)).cloud_logging_enabled
    credentials.write_text("{}")
    assert Settings(gcp_project="proj", gcp_credentials=str(credentials)).cloud_logging_enabled
    assert not Settings(gcp_credentials=str(credentials)).cloud_logging_enabled


def test_setup_logging_falls_back_to_stderr(monkeypatch):
    calls = []
    monkeypatch.setenv("CLONE_ENT_LOG_LEVEL", "info")
    monkeypatch.delenv("CLONE_ENT_GCP_PROJECT", raising=False)
    monkeypatch.setattr(logging, "basicConfig", lambda **kwargs: calls.append(kwargs))
    common.setup_logging()
    assert calls and calls[0]["level"] == logging.INFO


def test_setup_logging_ships_to_cloud_logging(monkeypatch, tmp_path):
    credentials = tmp_path / "sa.json"
    credentials.write_text("{}")
    monkeypatch.setenv("CLONE_ENT_GCP_PROJECT", "proj")
    monkeypatch.setenv("CLONE_ENT_GCP_CREDENTIALS", str(credentials))
    monkeypatch.setenv("CLONE_ENT_LOG_LEVEL", "warning")
    seen = {}

    class FakeClient:
        def __init__(self, project, credentials):
            seen["project"] = project
            seen["credentials"] = credentials

        def setup_logging(self, log_level):
            seen["log_level"] = log_level

    monkeypatch.setattr(common.service_account.Credentials, "from_service_account_file",
                        lambda path: f"credentials from {path}")
    monkeypatch.setattr(common.google.cloud.logging, "Client", FakeClient)
    common.setup_logging()
    assert seen == {"project": "proj", "credentials": f"credentials from {credentials}", "log_level": logging.WARNING}
