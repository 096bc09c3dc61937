"""
Test suite for sigma-trace.

Unit tests for the exact arithmetic layers, the trace engine, the oracle and
the sigma-conjugation suites.
"""
