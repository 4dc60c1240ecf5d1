"""Exact chromatic symmetric functions, their ascent refinement, and P-tableaux."""
from .analysis import (IntPoly, PositivityReport, e_positivity, independence_poly_from_csf,
                       independence_polynomial, matching_polynomial, net_closed_form,
                       uniqueness_scan)
from .chromatic import csf, csf_colorings, csf_subsets, qcsf_colorings
from .config import Config
from .errors import (ChromaticaError, ContractError, IncompleteCaseError, InconsistentInputError,
                     InvalidFamilyError, InvalidInputError, NotSymmetricError,
                     UnsupportedBasisError, UnsupportedSizeError)
from .graph import (Graph, IntervalSeq, generalized_net, generalized_spider, horseshoe_crab,
                    horseshoe_crab_seq, line_graph, nuig, spider)
from .partition import Partition, partitions_of
from .symfunc import Basis, SymFunc, TPoly, convert, multiply
from .tableaux import (PTableau, e_coefficients, enumerate_tableaux, injection_eta, injection_psi,
                       injection_xi, inv_weight, qcsf_tableaux, verify_injection)

__version__ = "0.1.0"
