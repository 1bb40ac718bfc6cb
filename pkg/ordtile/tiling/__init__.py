from .ParamsTiling import ParamsTiling
from .blocks import BlockDecomposition, compress, block_profiles
from .engine import TilingEngine, perfect_tiling, max_tiling, x_tiling, x_target
from .cover import h_cover, has_h_cover
from .verify import verify_tiling, verify_interval_tiling
