"""
Source package for foliation-kit.
"""

__version__ = "1.0.0"
