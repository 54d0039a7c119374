"""beamnet.commands

Subcommands of the `beamnet` command line; each module registers its own parser
"""

from . import plot, sweep, trial, validate
