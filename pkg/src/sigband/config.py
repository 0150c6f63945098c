"""
Configuration management using Dynaconf
"""
import os
from pathlib import Path
from typing import Literal

from dynaconf import Dynaconf
from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from .errors import ConfigError

# Python 3.12+ 환경에서 내장 tomllib 사용
try:
    import tomllib
except ImportError:
    tomllib = None

# 프로젝트 루트 경로
PROJECT_ROOT = Path(__file__).parent.parent.parent

# 설정 파일 경로
SETTINGS_FILE = PROJECT_ROOT / "settings.yaml"

# Dynaconf 설정 객체 생성 (SIGBAND_ 접두사 환경 변수가 파일 값을 덮어씀)
settings = Dynaconf(
    settings_files=[str(SETTINGS_FILE)],
    envvar_prefix="SIGBAND",
)


class NumericConfig(BaseModel):
    """수치 검증 설정"""
    tol: float = Field(1e-9, gt=0)
    seed: int = Field(42, ge=0, lt=2**64)
    samples: int = Field(1_000_000, ge=10_000)
    threshold: Literal["exact", "paper"] = "exact"
    workers: int = Field(0, ge=0)
    quad_limit: int = Field(200, ge=10)
    mc_chunk: int = Field(65536, ge=1024)


CONFIG_KEYS = tuple(NumericConfig.model_fields)


def get_version():
    """pyproject.toml에서 버전 정보를 읽어옵니다."""
    try:
        pyproject_path = PROJECT_ROOT / "pyproject.toml"

        if not pyproject_path.exists():
            logger.warning(f"pyproject.toml 파일을 찾을 수 없습니다: {pyproject_path}")
            return "0.1.0"  # 기본값

        if tomllib is None:
            logger.warning("tomllib 모듈을 찾을 수 없습니다. 기본 버전을 사용합니다.")
            return "0.1.0"

        with open(pyproject_path, "rb") as f:
            data = tomllib.load(f)
            return data.get("project", {}).get("version", "0.1.0")

    except Exception as e:
        logger.error(f"버전 정보 읽기 실패: {e}")
        return "0.1.0"


def get_numeric_config(**overrides) -> NumericConfig:
    """
    수치 설정 반환

    Args:
        overrides: CLI 플래그 값 (None 은 무시)

    Returns:
        NumericConfig: 검증된 설정
    """
    values = {key: settings.get(key) for key in CONFIG_KEYS}
    values.update({k: v for k, v in overrides.items() if v is not None})
    values = {k: v for k, v in values.items() if v is not None}
    try:
        return NumericConfig(**values)
    except ValidationError as e:
        raise ConfigError(f"invalid configuration: {e.errors()[0]['loc'][0]}: {e.errors()[0]['msg']}") from e


def load_config_file(path: str) -> None:
    """
    `key = value` 줄 단위 설정 파일을 settings 에 덮어씁니다.

    Args:
        path: 설정 파일 경로
    """
    config_path = Path(path)
    try:
        lines = config_path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e

    for number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{number}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lower()
        if key not in CONFIG_KEYS:
            raise ConfigError(f"{path}:{number}: unknown key '{key}'")
        settings.set(key, value, tomlfy=True)
        logger.debug(f"설정 덮어쓰기: {key} = {value}")


def get_workers(config: NumericConfig = None) -> int:
    """병렬 워커 수 반환 (0 이면 사용 가능한 코어 수)"""
    workers = (config or get_numeric_config()).workers
    return workers if workers > 0 else (os.cpu_count() or 1)


def check_settings():
    """설정 파일 존재 여부 확인 (없으면 기본값 사용)"""
    if not SETTINGS_FILE.exists():
        logger.debug(f"설정 파일이 없어 기본값을 사용합니다: {SETTINGS_FILE}")
        return False
    return True
