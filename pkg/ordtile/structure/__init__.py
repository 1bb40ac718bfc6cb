from .barrier import BarrierWitness, BarrierResult, find_local_barrier, barrier_refuted
from .flexibility import FlexResult, is_flexible, fixed_prefix_indices, verify_flex_witness, split_colouring
