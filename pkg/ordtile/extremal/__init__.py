from .ParamsExtremal import ParamsExtremal
from .builders import (build_F1, build_F2, build_F3, build_fourpart, counting_obstruction_fourpart,
                       CountingObstruction, f1_classes, f1_singleton, f2_ell, fourpart_parts, fourpart_pattern,
                       balanced_parts)
from .adversarial import adversarial_labelling
from .report import ExtremalReport, report_F1, report_F2, report_F3, report_fourpart
from .degree_sweep import degree_sweep, f1_grid
