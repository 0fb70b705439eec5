"""Finite combinatorial models of Segal spaces, right fibrations and the Grothendieck construction."""

from .category import FinCategory, FunctorMap, Presheaf, corpus_category, corpus_presheaves, representable
from .errors import PreconditionError, ResourceError, ValidationError, WorkbenchParseError
from .fibered import FiberedComplex
from .fibrations import quasicat_check, right_fibration_check, segal_check
from .grothendieck import counit, grothendieck, left_adjoint_L, right_adjoint_R, unit
from .kan import d_over_i, hocolim, kan_extend, lan_oracle, sections
from .kernels import backend_name, set_backend
from .ordinal import OrdinalMap
from .report import CheckReport
from .simplicial import BiSimplicialSet, SimplicialMap, SimplicialSet

__version__ = "0.1.0"

__all__ = [
    "BiSimplicialSet",
    "CheckReport",
    "FiberedComplex",
    "FinCategory",
    "FunctorMap",
    "OrdinalMap",
    "PreconditionError",
    "Presheaf",
    "ResourceError",
    "SimplicialMap",
    "SimplicialSet",
    "ValidationError",
    "WorkbenchParseError",
    "backend_name",
    "corpus_category",
    "corpus_presheaves",
    "counit",
    "d_over_i",
    "grothendieck",
    "hocolim",
    "kan_extend",
    "lan_oracle",
    "left_adjoint_L",
    "quasicat_check",
    "representable",
    "right_adjoint_R",
    "right_fibration_check",
    "sections",
    "segal_check",
    "set_backend",
    "unit",
]
