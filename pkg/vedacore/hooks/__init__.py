from .base_hook import BaseHook
from .builder import build_hook
from .hook_pool import HookPool
from .logger import LoggerHook

__all__ = ['BaseHook', 'build_hook', 'HookPool', 'LoggerHook']
