"""
zgamma - Discrete conformal maps Z^gamma and Log as square grid circle patterns
"""

__version__ = '1.0.0'
