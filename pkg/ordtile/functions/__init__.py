from .arg_type_check import method_arg_type_check
from .rationals import qstr, parse_rational, approx_str, human_rational
from .bitsets import iter_bits, interval_mask, mask_of, popcount
from .multiset import multiset_permutations
