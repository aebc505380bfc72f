# -*- coding: utf-8 -*-
"""
Exceptions raised by the package.  The command line runner maps
:class:`InputError` to exit code 1 and :class:`NumericalError` to exit code 2.
"""


class SqueezingError(Exception):
    """base class for all package errors"""


class InputError(SqueezingError, ValueError):
    """bad user input: dimensions, file contents, parameters or flags"""


class NumericalError(SqueezingError, ArithmeticError):
    """a computation could not produce a trustworthy result"""


class RankDeficientError(NumericalError):
    """the window set does not determine every covariance entry

    Parameters
    ----------
    unconstrained : list of tuple(int, int)
        1-based ``(m, m')`` entries (``m <= m'``) left undetermined
    """

    def __init__(self, unconstrained):
        self.unconstrained = list(unconstrained)
        listing = ', '.join('({0},{1})'.format(i, j) for i, j in self.unconstrained)
        super().__init__('window set is rank deficient; unconstrained entries: '
                         + listing)
