import time
from contextlib import contextmanager

import numpy as np


@contextmanager
def timed(logfunc, message, *args):
    started = time.perf_counter()
    yield
    logfunc('spent %.1f s. ' + message, time.perf_counter() - started, *args)


def format_score(value):
    """17 significant digits, enough for any float64 to round-trip."""
    return format(float(value), '.17g')


def format_weight(value):
    # repr() is the shortest decimal that parses back to the same float
    return repr(float(value))


def ranking_order(users, values):
    """Positions sorted by value descending, ties by user id ascending."""
    values = np.asarray(values, dtype=np.float64)
    by_user = sorted(range(len(users)), key=users.__getitem__)
    # stable sort on the negated values keeps the user order within ties
    return [by_user[k] for k in np.argsort(-values[by_user], kind='stable')]
