"""
Commands 패키지 - CLI 명령어별 비즈니스 로직
"""

from .check import CheckCommand
from .info import InfoCommand
from .mc import McCommand
from .setup import SetupCommand
from .sweep import SweepCommand, parse_fixed
from .verify import VerifyCommand

__all__ = [
    "CheckCommand",
    "VerifyCommand",
    "SweepCommand",
    "McCommand",
    "InfoCommand",
    "SetupCommand",
    "parse_fixed",
]
