"""Type C power fundamental polynomials and exact checks of their identities."""

from .errors import EvaluationError, InvariantError, ParseError, SubstitutionError, UsageError
from .kernels import IMPLEMENTATION as KERNELS
from .polycore import LaurentPoly, VarTable
from .qcalc import QIntSpec, RationalFunction, qfactorial, qint, qint_symbolic, ratfun_equal, verify_braiding_identities
from .symfun import LambdaRing, char_fund, char_fund_power, elem_sym, verify_symfun_identity
from .powerpoly import (
    power_elementary,
    power_elementary_sl,
    power_fundamental,
    power_sums_from_elementary,
    symmetric_reduce_oracle,
    verify_power_fundamental,
)
from .annulus import (
    loop_class,
    phi_map,
    reduce_at_root,
    transparency_defect,
    verify_defect_factorization,
    verify_loop_image,
)
from .serialize import parse_poly, render_json, render_text

__version__ = "0.1.0"
