"""
mdst-engine - approximate minimum degree spanning trees with verifiable certificates
"""

__version__ = "0.1.0"
