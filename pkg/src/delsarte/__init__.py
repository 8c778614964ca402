"""Formal group heights of Calabi-Yau threefolds of Delsarte type.

Typical use::

    >>> from delsarte import from_fermat, height
    >>> height(from_fermat((1, 1, 1, 1, 4)), 3).height
    2
"""

from .catalog import (
    HeightAtlas,
    WeightRecord,
    build_atlas,
    classify_finite_heights,
    enumerate_fermat_weights,
    enumerate_quasidiagonal_weights,
    fermat_records,
    load_atlas,
    mirror_obstruction_flag,
    save_atlas,
)
from .characters import (
    CharacterVector,
    CharSet,
    aH_bruteforce,
    enumerate_aset,
    find_alpha0,
    newton_low_slope_count,
    norm,
)
from .core import (
    DelsarteThreefold,
    WeightSystem,
    from_fermat,
    from_links,
    from_quasidiagonal,
    validate,
)
from .errors import (
    AtlasFormatError,
    CapacityError,
    ConstructionError,
    DelsarteError,
    DimensionError,
    DomainError,
    IntegrityError,
)
from .arith import multiplicative_order
from .height import (
    INFINITE,
    HeightResult,
    ReducedCharacter,
    ResidueSpectrum,
    height,
    height_class,
    reduce_alpha0,
    spectrum,
)
from .linalg import IntMatrix, adjugate, determinant, kernel_mod, smith_normal_form

__version__ = "0.1.0"
