from .vector import Vector, Functional, OperatorMatrix

__all__ = ["Vector", "Functional", "OperatorMatrix"]
