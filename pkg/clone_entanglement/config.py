import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv


@dataclass(frozen=True)
class Settings:
    log_level: str = "WARNING"
    gcp_project: Optional[str] = None
    gcp_credentials: Optional[str] = None

    @property
    def cloud_logging_enabled(self) -> bool:
        return bool(self.gcp_project and self.gcp_credentials and os.path.isfile(self.gcp_credentials))


# For lazy instantiation
class SettingsSingleton:
    _instance = None

    @classmethod
    def get_instance(cls) -> Settings:
        if cls._instance is not None:
            return cls._instance
        load_dotenv(override=False)
        cls._instance = Settings(
            log_level=os.getenv("CLONE_ENT_LOG_LEVEL", "WARNING").upper(),
            gcp_project=os.getenv("CLONE_ENT_GCP_PROJECT") or None,
            gcp_credentials=os.getenv("CLONE_ENT_GCP_CREDENTIALS") or None,
        )
        return cls._instance

    @classmethod
    def reset(cls):
        cls._instance = None
