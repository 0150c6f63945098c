"""
로깅 설정 및 관리 모듈 (loguru 기반)
"""
import sys
from pathlib import Path
from loguru import logger

from .config import settings

DEFAULT_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <5}</level> | <cyan>{extra[name]}</cyan> - <level>{message}</level>"


def get_logging_config():
    """로깅 설정 반환"""
    return {
        "level": settings.get("logging.level", "WARNING"),
        "format": settings.get("logging.format", DEFAULT_FORMAT),
        "rotation": settings.get("logging.rotation", "10 MB"),
        "retention": settings.get("logging.retention", "10 days"),
        "compression": settings.get("logging.compression", "zip"),
        "backtrace": settings.get("logging.backtrace", True),
        "diagnose": settings.get("logging.diagnose", False),
    }


def setup_logging(verbose: bool = False, quiet: bool = False):
    """loguru 로깅 설정

    콘솔 싱크는 stderr 입니다. stdout 은 CSV/JSON 출력 전용입니다.
    --verbose 는 DEBUG, --quiet 는 ERROR 이상만 콘솔에 남깁니다.
    """
    log_config = get_logging_config()
    level = log_config["level"]
    if verbose:
        level = "DEBUG"
    elif quiet:
        level = "ERROR"

    # 기본 핸들러 제거
    logger.remove()
    logger.configure(extra={"name": "sigband"})

    # 콘솔 핸들러 추가
    logger.add(
        sys.stderr,
        format=log_config["format"],
        level=level,
        colorize=True,
        backtrace=log_config["backtrace"],
        diagnose=log_config["diagnose"],
    )

    # 파일 핸들러 추가 (선택사항)
    if settings.get("logging.file_enabled", False):
        log_file = settings.get("logging.file_path", "logs/sigband.log")

        # 로그 디렉토리 생성
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)

        logger.add(
            log_file,
            format=log_config["format"],
            level=level,
            rotation=log_config["rotation"],
            retention=log_config["retention"],
            compression=log_config["compression"],
            backtrace=log_config["backtrace"],
            diagnose=log_config["diagnose"],
        )

    logger.debug("로깅 시스템 초기화 완료")
    return logger


def get_logger(name: str = None):
    """로거 인스턴스 반환"""
    if name:
        return logger.bind(name=name)
    return logger
