"""Top-level package for hpfg."""

__author__ = """HPFG developers"""
__version__ = "0.1.0"
