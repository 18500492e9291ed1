"""Kernel selection: compiled rank backend when built, pure Python otherwise."""

try:
    from lsbound._core.rank_cy import BACKEND, integer_rank, rational_rank
except ImportError:  # extension not built
    from lsbound._core.rank_py import BACKEND, integer_rank, rational_rank

__all__ = ["BACKEND", "integer_rank", "rational_rank"]
