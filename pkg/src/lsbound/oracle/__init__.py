from lsbound.oracle.realize import Realization, realize
from lsbound.oracle.shapovalov import (OracleCapError, ProbeReport,
                                       ShapovalovReport, boundedness_probe,
                                       estimate_cost, shapovalov_rank,
                                       truncated_character, verma_weight_basis)

__all__ = [
    "Realization", "realize", "OracleCapError", "ProbeReport",
    "ShapovalovReport", "boundedness_probe", "estimate_cost",
    "shapovalov_rank", "truncated_character", "verma_weight_basis",
]
