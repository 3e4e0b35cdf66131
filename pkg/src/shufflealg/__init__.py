"""Exact computations in shuffle, preshuffle and grafting (bi)algebras."""

from .lincomb import DomainError, Lin, TensorElem

__version__ = "0.1.0"

__all__ = ["DomainError", "Lin", "TensorElem", "__version__"]
