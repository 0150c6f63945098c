"""
분포 명세 문자열 `family:key=value,key=value` 의 해석과 직렬화
"""
from pydantic import ValidationError

from ..errors import SpecParseError
from .base import DistSpec
from .registry import get_family_registry


def validation_message(exc: ValidationError) -> str:
    """pydantic 검증 오류를 한 줄 메시지로 바꿉니다."""
    parts = []
    for error in exc.errors():
        msg = error.get("msg", "")
        if msg.startswith("Value error, "):
            msg = msg[len("Value error, "):]
        loc = ".".join(str(item) for item in error.get("loc", ()))
        if error.get("type") == "extra_forbidden":
            msg = f"unknown key '{loc}'"
        elif error.get("type") == "missing":
            msg = f"missing key '{loc}'"
        elif loc and error.get("type") != "value_error":
            msg = f"{loc}: {msg}"
        parts.append(msg)
    return "; ".join(parts)


def build_dist(family: str, params: dict) -> DistSpec:
    """
    계열 이름과 매개변수 딕셔너리로 DistSpec 을 만듭니다.

    Raises:
        SpecParseError: 알 수 없는 계열, 키 또는 범위를 벗어난 값
    """
    cls = get_family_registry().get_family(family)
    if cls is None:
        known = ", ".join(get_family_registry().family_names())
        raise SpecParseError(f"unknown family '{family}' (known: {known})")
    try:
        return cls.model_validate(params)
    except ValidationError as e:
        raise SpecParseError(validation_message(e)) from e


def parse_dist(text: str) -> DistSpec:
    """
    `family:key=value,...` 문자열을 해석합니다.

    계열 이름은 대소문자를 구분하지 않고, 키는 소문자로 맞춥니다.
    """
    if not text or not text.strip():
        raise SpecParseError("empty distribution specification")
    family, sep, body = text.strip().partition(":")
    if not family.strip():
        raise SpecParseError(f"missing family name in '{text}'")

    params: dict[str, str] = {}
    if sep and body.strip():
        for item in body.split(","):
            key, eq, value = item.partition("=")
            key = key.strip().lower()
            value = value.strip()
            if not eq or not key or not value:
                raise SpecParseError(f"malformed parameter '{item.strip()}' (expected key=value)")
            if key in params:
                raise SpecParseError(f"duplicate key '{key}'")
            params[key] = value
    return build_dist(family, params)


def format_dist(dist: DistSpec) -> str:
    """DistSpec 을 다시 명세 문자열로 (repr 정밀도)"""
    body = ",".join(f"{key}={value!r}" for key, value in dist.params().items())
    return f"{dist.family}:{body}"
