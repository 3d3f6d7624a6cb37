# adapted from https://github.com/open-mmlab/mmcv
from time import perf_counter


class TimerError(Exception):

    def __init__(self, message):
        self.message = message
        super(TimerError, self).__init__(message)


class Timer:
    """A wall clock timer that can also act as a deadline.

    :Example:

    >>> timer = Timer()
    >>> timer.since_start()
    0.000...
    >>> timer.is_expired(100.0)
    False
    """

    def __init__(self, start=True):
        self._is_running = False
        if start:
            self.start()

    @property
    def is_running(self):
        """bool: indicate whether the timer is running"""
        return self._is_running

    def start(self):
        """Start the timer."""
        if not self._is_running:
            self._t_start = perf_counter()
            self._is_running = True

    def since_start(self):
        """Total time since the timer is started.

        Returns (float): Time in seconds.
        """
        if not self._is_running:
            raise TimerError('timer is not running')
        return perf_counter() - self._t_start

    def is_expired(self, limit):
        """Whether more than ``limit`` seconds passed since the start.

        ``None`` means no limit.
        """
        if limit is None:
            return False
        return self.since_start() > limit
