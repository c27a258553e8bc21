"""
Test package for mdst-engine
"""
