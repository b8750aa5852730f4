from .normed_space import NormedSpace

__all__ = ["NormedSpace"]
