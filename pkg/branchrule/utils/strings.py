# -*- coding: utf-8 -*-

import re


COLORS = {'nocolor': "\033[0m", 'red': "\033[0;31m",
          'green': "\033[32m", 'blue': "\033[34m",
          'yellow': "\033[33m"}
_COLOR_RE = re.compile('|'.join(re.escape(c) for c in COLORS.values()))


def color_text(text, color):
    """
    Returns given text string with appropriate color tag. Allowed values
    for color parameter are 'red', 'blue', 'green' and 'yellow'.
    """
    return '%s%s%s' % (COLORS[color], text, COLORS['nocolor'])


def strip_colors(text):
    return _COLOR_RE.sub('', text)


def state_format(msg, state, color=None, offset=60):
    """
    Formats state with offset according to given message. State is left
    uncolored when color is None.
    """
    space = offset - len(strip_colors(msg)) + len(state)
    state = '[ %s ]' % (color_text(state, color) if color else state)
    return state.rjust(max(space, len(state) + 1))


def state_message(msg, state, color=None):
    """
    Formats given message with state information.
    """
    return '%s%s' % (msg, state_format(msg, state, color))


def verdict_message(msg, verdict, skipped=False, color=False):
    """Returns message followed by PASS, FAIL or SKIP state."""
    if skipped:
        state, clr = 'SKIP', 'yellow'
    elif verdict:
        state, clr = 'PASS', 'green'
    else:
        state, clr = 'FAIL', 'red'
    return state_message(msg, state, clr if color else None)
