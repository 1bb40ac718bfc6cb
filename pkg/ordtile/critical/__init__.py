from .statistics import ColouringStatistics, colouring_statistics, g_value
from .bounds import ChiStarBounds, chi_star_bounds
from .ParamsChiStar import ParamsChiStar
from .exact import ChiStarResult, chi_star_exact, complete_parts
