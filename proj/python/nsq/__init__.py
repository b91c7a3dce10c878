"""Numerical semigroup quotients: exact membership, quotient-rank
certificates, counterexample families and randomized censuses."""

from ._nsq import *  # noqa: F401,F403
from ._nsq import (
    NumericalSemigroup,
    QuotientRep,
    quotient,
    verify_rep,
    quotient_rank_bounds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
