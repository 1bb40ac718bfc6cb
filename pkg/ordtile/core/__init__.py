from .interval import (interval_chromatic, enumerate_interval_colourings, iter_interval_colourings,
                       is_proper_colouring, check_pattern_size)
from .copies import enumerate_copies, has_copy, count_copies, is_embedding
