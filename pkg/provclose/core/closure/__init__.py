from .cyclic import (
    closure_cyclic,
    every_cyclic_closed,
    is_closed_cyclic,
    isolation_holds,
    isolation_witness,
    membership_in_closure,
    nilpotent_closure_exponent,
)
from .result import ClosednessVerdict, ClosureResult, TraceStep
from .vp import HValue, KRootExp, h_value, in_k, root_exp_in_K, vtog_consistency_check

__all__ = [
    'ClosednessVerdict',
    'ClosureResult',
    'HValue',
    'KRootExp',
    'TraceStep',
    'closure_cyclic',
    'every_cyclic_closed',
    'h_value',
    'in_k',
    'is_closed_cyclic',
    'isolation_holds',
    'isolation_witness',
    'membership_in_closure',
    'nilpotent_closure_exponent',
    'root_exp_in_K',
    'vtog_consistency_check',
]
