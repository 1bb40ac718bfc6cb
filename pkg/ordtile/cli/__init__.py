from .commands import (CommandResult, cmd_analyze, cmd_tile, cmd_bottlegraph, cmd_extremal, cmd_fxh,
                       EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INCONCLUSIVE)
from .schemas import DOCUMENTS, validate_document, export_schemas
