"""Boundedness of simple highest weight modules over basic classical Lie
superalgebras, with exact characters and an independent Verma-module rank
oracle."""

from lsbound.basegraph import (Base, NiComponent, all_bases, default_base,
                               distinguished_bases, nonisotropic_components,
                               odd_reflect, transport_weight)
from lsbound.characters import (FormalCharacter, HypothesisError,
                                char_multiply, degree_of, typical_character)
from lsbound.classifier import (ComponentVerdict, Verdict, classify,
                                classify_via_reduction, component_verdict,
                                degree_bound, is_bounded_sp_family,
                                is_strongly_typical, weyl_dimension)
from lsbound.oracle import (OracleCapError, ProbeReport, ShapovalovReport,
                            boundedness_probe, estimate_cost, realize,
                            shapovalov_rank, truncated_character,
                            verma_weight_basis)
from lsbound.rootdata import (Algebra, AlgebraError, AlgebraSpec, Root,
                              dominant_representative, integral_subsystem,
                              parse_algebra, parse_weight, rho_vectors,
                              simple_system)

__version__ = "0.1.0"
