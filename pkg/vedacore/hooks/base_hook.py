from abc import ABCMeta, abstractmethod


class BaseHook(metaclass=ABCMeta):
    """Callbacks fired by a saturation engine.

    ``engine.iter`` counts given clauses, ``engine.stats`` holds the
    running counters.
    """

    def before_run(self, engine):
        pass

    def after_run(self, engine):
        pass

    def before_iter(self, engine):
        pass

    def after_iter(self, engine):
        pass

    def every_n_iters(self, engine, n):
        return engine.iter % n == 0 if n > 0 else False

    @property
    @abstractmethod
    def modes(self):
        pass
