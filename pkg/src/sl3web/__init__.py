"""Exact combinatorics of sl3 webs: ladder words, flows, multitableaux, foams."""

from sl3web.laurent import LaurentPoly, qint

__all__ = ["LaurentPoly", "qint"]
__version__ = "0.1.0"
