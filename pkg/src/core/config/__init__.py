from core.config.config import AppConfig, config
from core.config.run_config import CHatMethod, PairMode, RunConfig

__all__ = ["config", "AppConfig", "RunConfig", "CHatMethod", "PairMode"]
