"""
Runtime configuration.

Values come from the environment (a local .env file is honoured when
python-dotenv is installed); CLI flags override them via Config.override.
"""

import os
from dataclasses import dataclass, replace

try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass  # dotenv not installed, using system env vars only

# Hard ceilings; configuration may lower them but never raise past these
ORACLE_HARD_CAP = 24
CANON_HARD_CAP = 12
ENUM_HARD_CAP = 10


def _env_int(name, default, minimum=0):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Config:
    oracle_cap: int = 20
    canon_cap: int = CANON_HARD_CAP
    enum_cap: int = ENUM_HARD_CAP
    workers: int = 1
    profile_budget: int = 200_000
    catalog_dir: str = 'catalog'
    log_level: str = 'INFO'

    def __post_init__(self):
        if self.oracle_cap > ORACLE_HARD_CAP:
            object.__setattr__(self, 'oracle_cap', ORACLE_HARD_CAP)
        if self.canon_cap > CANON_HARD_CAP:
            object.__setattr__(self, 'canon_cap', CANON_HARD_CAP)
        if self.enum_cap > ENUM_HARD_CAP:
            object.__setattr__(self, 'enum_cap', ENUM_HARD_CAP)

    def override(self, **changes):
        """Return a copy with the non-None keyword values applied"""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def load_config():
    """Build a Config from MT_* environment variables"""
    return Config(
        oracle_cap=_env_int('MT_ORACLE_CAP', 20),
        canon_cap=_env_int('MT_CANON_CAP', CANON_HARD_CAP),
        enum_cap=_env_int('MT_ENUM_CAP', ENUM_HARD_CAP),
        workers=_env_int('MT_WORKERS', os.cpu_count() or 1, minimum=1),
        profile_budget=_env_int('MT_PROFILE_BUDGET', 200_000, minimum=1),
        catalog_dir=os.environ.get('MT_CATALOG_DIR', 'catalog'),
        log_level=os.environ.get('MT_LOG_LEVEL', 'INFO').upper(),
    )


# Module-level settings used as defaults by the library
settings = load_config()
