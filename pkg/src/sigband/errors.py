"""
sigband 예외 계층
"""


class SigbandError(Exception):
    """모든 sigband 예외의 기반 클래스"""


class DomainError(SigbandError, ValueError):
    """특수 함수 정의역 밖의 입력"""


class UnsupportedOperationError(SigbandError):
    """해당 분포 계열이 지원하지 않는 연산"""


class IncompatibleVariantError(SigbandError):
    """분포 계열과 맞지 않는 구간 변형"""


class SpecParseError(SigbandError, ValueError):
    """`family:key=value` 분포 문자열 파싱 실패"""


class ConfigError(SigbandError):
    """설정 파일 오류"""


class QuadratureError(SigbandError):
    """분할 한도 안에서 구적법이 수렴하지 않음"""

    def __init__(self, message: str, value: float, err_estimate: float):
        super().__init__(f"{message} (achieved error estimate {err_estimate:.3e})")
        self.value = value
        self.err_estimate = err_estimate


class GridError(SigbandError, ValueError):
    """스윕 격자점이 잘못됨"""

    def __init__(self, message: str, index: int):
        super().__init__(f"grid point {index}: {message}")
        self.index = index


class SelfCheckError(SigbandError):
    """두 계산 경로의 값이 허용 오차를 넘어 어긋남"""


class ReportIOError(SigbandError):
    """결과 파일 읽기/쓰기 실패"""
