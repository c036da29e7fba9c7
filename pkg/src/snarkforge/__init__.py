"""snarkforge: construction and exact verification of Loupekhine-type snarks,
normal 5-edge-colorings, Petersen colorings, and Berge-Fulkerson coverings."""

__version__ = "0.1.0"
