"""beamnet

Simulator for self-organizing wireless nodes that form regions by lateral inhibition, elect
region centroids by virtual-coordinate averaging, and add long-range sector beams between
regions.
"""

__version__ = "1.0.0"
