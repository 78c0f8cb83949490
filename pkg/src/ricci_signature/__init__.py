"""
Ricci signature toolkit

Ricci operators, scalar curvature and Ricci-eigenvalue signatures of
left-invariant metrics on low-dimensional Lie groups, with realizability
search and numerical verification of the closed forms known for the
four-dimensional family A_{4,9}^beta.
"""

__version__ = "0.3.0"
__author__ = "Ricci Signature Team"
