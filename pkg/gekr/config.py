from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="GEKR_",
        case_sensitive=False,
        extra="ignore"
    )

    # n above this is evaluated in log space instead of exact rationals
    exact_threshold: int = 500

    workers: int = 1
    progress_interval: int = 10_000
    max_resamples: int = 1_000_000

    node_limit: int = 2_000_000
    pair_table_cap_mb: int = 256

    log_level: str = "WARNING"
    show_progress: bool = False


settings = Settings()
