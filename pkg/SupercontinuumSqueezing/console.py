# -*- coding: utf-8 -*-
"""
Console helpers: coloured status messages and stage timing on standard error.
"""
import sys
import time as time_mod
from contextlib import contextmanager

try:
    import colorama
except ImportError:
    colorama = None


def color_text(text, color):
    """colour text for the terminal

    Parameters
    ----------
    text : str
        text to colour
    color : str
        name of a ``colorama.Fore`` colour, e.g. ``'CYAN'``

    Returns
    -------
    str
        coloured text, or the plain text when colorama is missing
    """
    try:
        return getattr(colorama.Fore, color) + text + colorama.Style.RESET_ALL
    except AttributeError:
        return text


def status(message, color=None, verbose=True):
    """print a status line to standard error if verbose"""
    if not verbose:
        return
    if color is not None:
        message = color_text(message, color)
    print(message, file=sys.stderr)


def error(message):
    """print an error line to standard error (always shown)"""
    print(color_text(message, 'RED'), file=sys.stderr)


@contextmanager
def stage(name, color='CYAN', verbose=True):
    """announce a pipeline stage and report its execution time"""
    status('Running ' + name, color, verbose)
    ts = time_mod.time()
    yield
    te = time_mod.time()
    status('Finished {0}'.format(name), 'GREEN', verbose)
    status('Execution Time: {0:>4.2f}'.format(te - ts), verbose=verbose)
