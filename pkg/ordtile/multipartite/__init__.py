from .ParamsBottle import ParamsBottle
from .bottle import (crit_chrom, chromatic_number, smallest_part, distinct_orderings, blow_up,
                     normalize_bottleshape, bottle_shape, is_bottle_shape)
from .verdicts import (BottleStatus, CertificateKind, NoCertificate, BottleVerdict,
                       check_simple_bottlegraph, check_bottlegraph_bounded, no_certificate)
from .constructions import IntervalTiler, upperbound_construction, flexible_frame, frame_sizes
from .comp3partite import comp3partite_bottle, bipartite_bottle
