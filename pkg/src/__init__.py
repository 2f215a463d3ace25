"""lambda-theories: clones, lambda-theories and lambda-algebras checked by normalization"""

__version__ = "0.1.0"
