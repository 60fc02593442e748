"""
Meshtura - Polygonal Mesh Topology Toolkit

Validates meshes, computes quantitative topology, and builds cut graphs.
"""

__version__ = "0.1.0"
__author__ = "Meshtura Team"
