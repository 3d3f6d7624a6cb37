from .config import Config, DictAction
from .logging import get_logger, print_log
from .progressbar import ProgressBar
from .registry import build_from_cfg, registry
from .timer import Timer, TimerError
from .utils import check_file_exist, is_str, mkdir_or_exist, natural_key

__all__ = [
    'Config', 'DictAction', 'get_logger', 'print_log', 'ProgressBar',
    'build_from_cfg', 'registry', 'Timer', 'TimerError', 'check_file_exist',
    'is_str', 'mkdir_or_exist', 'natural_key'
]
