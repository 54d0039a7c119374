"""beamnet.utils

Utility functions are bits of standalone logic that act on a single thing (a graph, an angle, a
seed, a file). Functions should generally only be added as utilities if they are used in multiple
places (including tests).
"""
