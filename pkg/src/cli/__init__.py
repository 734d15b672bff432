"""
Command-line interface and output writers.
"""
