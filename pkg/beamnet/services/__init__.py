"""beamnet.services

Services perform the multi-step logic of a simulation: placing nodes, running the region and
centroid protocols on the round engine, beamforming, and assembling trials into sweeps. If a bit
of logic only ever acts on a single value it probably belongs in `beamnet.utils` instead.
"""
