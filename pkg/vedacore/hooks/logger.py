from vedacore.misc import registry
from .base_hook import BaseHook


@registry.register_module('hook')
class LoggerHook(BaseHook):
    """Log the clause counters every ``interval`` given clauses."""

    def __init__(self, interval=500):
        self.interval = interval

    @staticmethod
    def _format(stats):
        log_items = []
        for name, val in stats.items():
            if isinstance(val, float):
                val = f'{val:.4f}'
            log_items.append(f'{name}: {val}')
        return ', '.join(log_items)

    def before_run(self, engine):
        engine.logger.debug(f'saturating {engine.stats["input"]} clauses')

    def after_iter(self, engine):
        if self.every_n_iters(engine, self.interval):
            engine.logger.info(
                f'Iter [{engine.iter}] {self._format(engine.stats)}')

    def after_run(self, engine):
        engine.logger.info(f'Done [{engine.iter}] '
                           f'{self._format(engine.stats)}')

    @property
    def modes(self):
        return ['prove']
