from .profile import Piece, Gap, FProfile, tj_x0, f_profile
from .x_bottle import XBottleStatus, XBottleVerdict, check_x_bottlegraph
