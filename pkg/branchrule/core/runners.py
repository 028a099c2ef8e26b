# -*- coding: utf-8 -*-

"""Cooperative greenlet runners. Work functions which want to share the
interpreter call `pause()` from time to time, which switches back to the
loop in wait_for_runners.
"""

import logging

import greenlet


LOG = logging.getLogger('branchrule.backend')


def wait_for_runners(runners):
    """Switches between given set of runners until all are finished."""
    while runners:
        LOG.debug(
            'Checking greenlets: {runners}'.format(**locals())
        )
        for run in list(runners):
            if run.dead:
                runners.remove(run)
                LOG.debug('Greenlet {run} is dead.'.format(**locals()))
            else:
                try:
                    run.switch()
                except Exception:
                    # kills remaining greenlets
                    for i in runners:
                        if i is not run and not i.dead:
                            LOG.debug('Killing greenlet: {}'.format(i))
                            i.throw()
                    raise


def pause():
    """Yields control to the parent greenlet when running inside a runner."""
    parent = greenlet.getcurrent().parent
    if parent:
        parent.switch()


def split(items, workers):
    """Splits sequence into at most `workers` contiguous chunks of nearly
    equal size. Returns list of (offset, chunk) pairs.
    """
    items = list(items)
    workers = max(1, min(workers, len(items)))
    size, rest = divmod(len(items), workers)
    chunks = []
    offset = 0
    for index in range(workers):
        length = size + (1 if index < rest else 0)
        chunks.append((offset, items[offset:offset + length]))
        offset += length
    return chunks


def run_partitioned(func, items, workers):
    """Runs func(item) for every item, items split among `workers` greenlets.
    Returns results in input order.
    """
    items = list(items)
    results = [None] * len(items)

    def _work(offset, chunk):
        for index, item in enumerate(chunk):
            results[offset + index] = func(item)
            pause()

    runners = set()
    for offset, chunk in split(items, workers):
        run = greenlet.greenlet(_work)
        LOG.debug('Starting runner for items %d..%d'
                  % (offset, offset + len(chunk) - 1))
        run.switch(offset, chunk)
        runners.add(run)
    wait_for_runners(runners)
    return results


def run_workers(func, arguments):
    """Runs func(*args) for each tuple in arguments as separate greenlets.
    Returns list of return values in order of arguments.
    """
    results = [None] * len(arguments)

    def _work(index, args):
        results[index] = func(*args)

    runners = set()
    for index, args in enumerate(arguments):
        run = greenlet.greenlet(_work)
        run.switch(index, args)
        runners.add(run)
    wait_for_runners(runners)
    return results
