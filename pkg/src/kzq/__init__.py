"""kzq: exact lower K-theory invariants of finite group rings.

Computes rational and modular representation counts, Schur index data,
negative K-groups of integral group rings, and the image of the reduced
projective class group under rationalization, for small finite groups and
amalgams of them along index two subgroups. All arithmetic is exact.
"""

__version__ = "0.1.0"
