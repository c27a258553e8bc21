"""
Core degree-reduction algorithms
"""
