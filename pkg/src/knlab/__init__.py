"""knlab: an exact computational laboratory for Keum-Naie surfaces.

Constructs the double-cover data behind a Keum-Naie surface from two
Legendre parameters and an invariant branch section, and mechanically
verifies the dimension counts, group identities, double-cover invariants,
and bicanonical relations the construction rests on.
"""

__version__ = "0.1.0"
