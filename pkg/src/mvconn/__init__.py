"""Interval-valued t-norms and t-conorms over deMorgan lattices, with law checkers."""
from .connectives import (ConnectivePair, GeneralizedQuadruple, builtin_pair, check_bounds,
                          check_distributivity, check_duality, check_tconorm, check_tnorm,
                          get_pair, make_quadruple)
from .hyperops import HyperConnective, extend_to_sets
from .intervals import (EMPTY, Interval, interval_inf, interval_leq, interval_negate,
                        interval_sup, make_interval, members)
from .lattice import (UNIT, FiniteLattice, RationalChain, UnitInterval, boolean, chain,
                      check_demorgan_lattice, load_lattice)
from .report import Check, Report
from .sampling import Sampling
from .verifier import (InducedOrder, check_hyper_duality, check_hyperops, check_induced_order,
                       check_order_characterization, check_superlattice, run_regression)

__version__ = "0.1.0"
