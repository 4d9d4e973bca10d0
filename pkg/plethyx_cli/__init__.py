"""
Command-line front end for plethyx.
"""
