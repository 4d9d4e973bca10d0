"""
Plethyx Core Package

Tableaux, jeu de taquin, RSK, sign statistics, the power-sum oracle and
domino tableaux.
"""

__version__ = "0.1.0"

from .interfaces import (
    FormatError,
    InvalidCornerError,
    InvalidPartitionError,
    InvalidTableauError,
    MalformedBiwordError,
    OracleError,
    PlethyxError,
    RunnerConfigError,
    ShapeMismatchError,
    VerificationError,
    WorkRunner,
)
from .partitions import Composition, Partition, SkewShape, Tableau, TableauTuple
from .plethysm_sign import (
    SignedKostkaTable,
    decompose_e_square,
    decompose_h_square,
    decompose_skew_e_square,
    decompose_skew_h_square,
    sign_e,
    sign_h,
)
from .rsk import Biword, BurgeWord, RskPair, rsk, rsk_tilde
from .symfunc import SymFunc, generators, plethysm, schur_expand, split_square
