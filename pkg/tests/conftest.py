"""Pytest configuration and fixtures for sigband tests"""

import shutil
import tempfile
from pathlib import Path

import pytest
from typer.testing import CliRunner
from unittest.mock import patch

from sigband.config import CONFIG_KEYS, PROJECT_ROOT, settings


@pytest.fixture
def cli_runner():
    """CLI 테스트를 위한 CliRunner 인스턴스"""
    return CliRunner()


@pytest.fixture
def temp_config_file():
    """임시 `key = value` 설정 파일 생성"""
    content = "\n".join([
        "# 테스트 설정",
        "tol = 1e-8",
        "seed = 7",
        "samples = 20000",
        "threshold = paper",
        "workers = 2",
    ])
    with tempfile.NamedTemporaryFile(mode="w", suffix=".conf", delete=False, encoding="utf-8") as f:
        f.write(content + "\n")
        f.flush()
        yield f.name

    # Cleanup
    Path(f.name).unlink(missing_ok=True)


@pytest.fixture
def temp_project_root(tmp_path):
    """settings.sample.yaml 만 있는 임시 프로젝트 루트"""
    shutil.copy2(PROJECT_ROOT / "settings.sample.yaml", tmp_path / "settings.sample.yaml")
    return tmp_path


@pytest.fixture(autouse=True)
def mock_settings_check():
    """설정 파일 확인 모킹 (모든 테스트에 자동 적용)"""
    with patch("main.check_settings", return_value=True):
        yield


@pytest.fixture(autouse=True)
def reset_settings(monkeypatch):
    """--config 로 덮어쓴 값과 SIGBAND_ 환경 변수가 다음 테스트로 새지 않게 합니다."""
    for key in CONFIG_KEYS:
        monkeypatch.delenv(f"SIGBAND_{key.upper()}", raising=False)
    before = {key: settings.get(key) for key in CONFIG_KEYS}
    yield
    # None 은 get_numeric_config 에서 기본값으로 처리됩니다
    for key, value in before.items():
        settings.set(key, value)


@pytest.fixture
def temp_output_dir():
    """임시 출력 디렉토리"""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)
