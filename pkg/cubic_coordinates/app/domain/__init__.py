"""
Combinatorics of Tamari intervals and their cubic coordinates
"""
