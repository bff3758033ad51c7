"""q-ary Helberg codes: number-theoretic codes correcting up to ``d`` insertions and deletions."""
from .channel import DeletionPattern, delete_at, index_of, insert_at, random_deletions
from .codebook import contains, enumerate_codebook, max_size_search, size, SizeSearchResult
from .codeword import congruent, delta, format_word, moment, parse_word, truncated_moment
from .decoder import (DecodeTrace, TraceStep, decode, decode_multi, decode_one,
                      decode_two_binary, recover_moment)
from .errors import BudgetExceededError, HelbergError, InvalidParametersError, UndecodableError
from .oracle import brute_decode_deletions, brute_decode_indels, verify_code, VerificationReport
from .params import (CodeParams, make_params, verify_weight_sum_bound, weight, weight_sequence,
                     weight_sum_closed_form)

__version__ = "0.1.0"
