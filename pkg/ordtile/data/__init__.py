from .dataload import parse_graph, format_graph, read_graph, write_graph, read_parts
from .generators import (long_edge11, skip_path7, barrier8, path5, K22, complete_multipartite, ordered_complete,
                         FIXTURES, gen_linear_construction, gen_linear_obstruction, gen_linearresult_host,
                         gen_pwlinear_host, gen_near_balanced)
