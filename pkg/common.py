import logging

import google.cloud.logging
from google.oauth2 import service_account

from clone_entanglement.config import SettingsSingleton


def setup_logging():
    """Route log records to Google Cloud Logging when a project and service account
    are configured, otherwise to stderr. stdout is reserved for command output."""
    settings = SettingsSingleton.get_instance()
    if settings.cloud_logging_enabled:
        credentials = service_account.Credentials.from_service_account_file(settings.gcp_credentials)
        logging_client = google.cloud.logging.Client(project=settings.gcp_project, credentials=credentials)
        logging_client.setup_logging(log_level=getattr(logging, settings.log_level, logging.WARNING))
        return
    logging.basicConfig(
        level=getattr(logging, settings.log_level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
