"""Bidirectional programming with monadic profunctors.

Three instantiations share one interface (``pure``, ``bind``, ``comap``):

* :mod:`profmonad.biparser`: parsers and printers defined together,
* :mod:`profmonad.lens`: getters and putters with conflict predicates,
* :mod:`profmonad.bigen`: random generators paired with checkers.

:mod:`profmonad.core` holds partial functions and the law harness,
:mod:`profmonad.suites` the executable round-trip properties.
"""

from .core import PartialFn, partial_compose, partial_identity, safe_head, safe_tail

__all__ = ["PartialFn", "partial_compose", "partial_identity", "safe_head", "safe_tail"]
__version__ = "0.1.0"
