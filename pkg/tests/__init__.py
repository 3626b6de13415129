"""Unit tests package for hpfg."""
