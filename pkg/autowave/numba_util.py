import logging

from autoconf import conf

logger = logging.getLogger(__name__)

logger.setLevel(level="INFO")


def jit(nopython=None, cache=None, parallel=None):
    """
    Decorator which compiles an array kernel with numba, using the `[numba]` section of the `general.ini` config
    for any setting not passed explicitly.

    If numba is not installed the undecorated Python function is returned, so every kernel must also be valid
    plain numpy code.
    """

    if nopython is None:
        nopython = conf.instance["general"]["numba"]["nopython"]
    if cache is None:
        cache = conf.instance["general"]["numba"]["cache"]
    if parallel is None:
        parallel = conf.instance["general"]["numba"]["parallel"]

    def wrapper(func):

        try:
            import numba
        except ModuleNotFoundError:
            logger.debug(f"numba not installed, {func.__name__} runs in pure Python")
            return func

        return numba.jit(
            func, nopython=nopython, cache=cache, parallel=parallel
        )

    return wrapper
