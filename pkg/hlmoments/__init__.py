"""
Exact moment inversion for random finite abelian p-groups.
"""

from .version import __version__
