"""
Pydantic models of every JSON document the command line writes.

The files under schemas/ at the repository root describe the same documents and
must list the same properties and required keys as these models.
`export_schemas` writes the full pydantic-generated schemas.
"""

import json
import os
from typing import Annotated, Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, StringConstraints

# "p/q" or "p"
Rational = Annotated[str, StringConstraints(pattern=r"^-?\d+(/\d+)?$")]


class _Document(BaseModel):
    model_config = ConfigDict(extra='forbid')


class ChiStarModel(_Document):
    kind: Literal['exact', 'interval']
    evidence: Dict[str, List[str]]
    value: Optional[Rational] = None
    rule: Optional[str] = None
    lower: Optional[Rational] = None
    lower_strict: Optional[bool] = None
    upper: Optional[Rational] = None
    bottlegraph: Optional[List[int]] = None


class BarrierModel(_Document):
    i: int
    j: int
    vacuous: bool


class StatisticsModel(_Document):
    r: int
    ell_minus: int
    ell_minus_star: int
    ell_plus: int
    alpha_plus: int
    alpha_minus: int
    alpha: int


class TJModel(_Document):
    T: int
    J: int
    x0: Rational


class AnalysisDocument(_Document):
    h: int
    edges: List[List[int]]
    chi_lt: int
    chi_star: ChiStarModel
    barrier: Optional[BarrierModel]
    flexible: bool
    fixed_prefix: List[int]
    perfect_case: Literal['CaseI', 'CaseII', 'CaseIII', 'BipartiteOutOfScope', 'UnresolvedChiStar']
    perfect_coeff: Optional[Rational]
    perfect_coeff_interval: Optional[List[Rational]]
    cover_coeff: Rational
    almost_perfect_coeff: Optional[Rational]
    colouring_statistics: StatisticsModel
    tj_x0: Optional[TJModel]
    notes: List[str]


class TilingAnswerModel(_Document):
    status: Literal['PerfectFound', 'NoPerfect', 'MaxCover', 'TargetUnreachable', 'Timeout']
    copies: List[List[int]]
    nodes: int
    count: Optional[int] = None


class TileDocument(_Document):
    mode: Literal['perfect', 'cover', 'max', 'x']
    answer: Optional[TilingAnswerModel] = None
    verified: Optional[bool] = None
    uncovered: Optional[List[int]] = None
    x: Optional[Rational] = None
    target: Optional[int] = None


class CertificateModel(_Document):
    kind: Literal['PartCount', 'CountingFirstPart', 'CountingLastPart', 'StrongLower']
    lhs: Rational
    rhs: Rational


class OrderingModel(_Document):
    sizes: List[int]
    copies: List[List[int]]
    t: Optional[int] = None


class BottlegraphDocument(_Document):
    mode: Literal['simple', 'bounded', 'x']
    parts: List[int]
    status: Literal['SimpleYes', 'NotSimple', 'BoundedYes', 'No', 'Unknown', 'Yes']
    orderings: List[OrderingModel]
    failing_ordering: Optional[List[int]]
    certificate: Optional[CertificateModel] = None
    x: Optional[Rational] = None
    target: Optional[int] = None


class ClaimedBoundModel(_Document):
    value: Rational
    expression: str


class ExtremalDocument(_Document):
    construction: Literal['F1', 'F2', 'F3', 'fourpart']
    parameters: Dict[str, Any]
    n: int
    min_degree: int
    claimed_bound: ClaimedBoundModel
    obstruction: Dict[str, Any]
    verified: Optional[bool]
    notes: List[str]


class PieceModel(_Document):
    x_from: Rational
    x_to: Rational
    from_closed: bool
    to_closed: bool
    f: str
    source: str


class GapModel(_Document):
    x_from: Rational
    x_to: Rational
    bounds_only: Literal[True]
    lower: Rational
    lower_strict: bool
    upper: Rational


class ProfileDocument(_Document):
    r: int
    pieces: List[PieceModel]
    gaps: List[GapModel]
    at_one: Optional[Rational]
    tj_x0: Optional[TJModel] = None


DOCUMENTS = {
    "analyze": AnalysisDocument,
    "tile": TileDocument,
    "bottlegraph": BottlegraphDocument,
    "extremal": ExtremalDocument,
    "fxh": ProfileDocument,
}


def validate_document(command, doc):
    """Validate `doc` against the model of `command`; raises pydantic.ValidationError."""
    return DOCUMENTS[command].model_validate(doc)


def export_schemas(directory):
    """Write one <command>.schema.json per command into `directory`."""
    os.makedirs(directory, exist_ok=True)
    for command, model in sorted(DOCUMENTS.items()):
        path = os.path.join(directory, f"{command}.schema.json")
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(model.model_json_schema(), f, sort_keys=True, indent=2)
            f.write('\n')
