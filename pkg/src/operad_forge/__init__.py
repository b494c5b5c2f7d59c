"""Exact symbolic engine for the two-coloured operad of partially planar rooted trees.

Submodules:

* ``trees``         -- tree representation, canonical form, enumeration, JSON
* ``algebra``       -- Koszul signs, formal sums, grafting, symmetric-group action
* ``differential``  -- the stratum (codimension-one expansion) differential
* ``homology``      -- chain complexes, exact ranks, Betti numbers, f-vectors
* ``coderivation``  -- structure constants, coderivation lift, relation checking
* ``morphism``      -- the projection to binary operations and its verification
* ``calibration``   -- solver behind the projection's frozen skeleton table
* ``reporting``     -- DOT drawings, CSV summaries, PNG charts
* ``cli``           -- the ``operad-forge`` command line tool
"""

__version__ = "0.1.0"
