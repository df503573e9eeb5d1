"""kmrd: exact-arithmetic bounded checks for Property RD on Kac-Moody
maximal parabolic subgroups."""

__version__ = "0.1.0"

from .gcm import (  # noqa: F401
    CartanSpec,
    FiniteType,
    GCMError,
    NoAdmissibleD,
    NotFiniteTypeLevi,
    NotGCM,
    NotMaximal,
    NotSymmetrizable,
    NullNorm,
    ParabolicSpec,
    Singular,
    bilinear_form,
    fundamental_weight,
    is_finite_type,
    load_gcm,
    make_parabolic,
    pair_with_coroot,
    validate_gcm,
    weyl_vector,
)
from .weyl import (  # noqa: F401
    CapExceeded,
    WeylElem,
    apply,
    enumerate_by_length,
    inversion_set,
    inversion_set_of_inverse,
    is_real_root,
    min_coset_reps,
    positive_real_roots_up_to_height,
    reflect_simple,
    word_to_element,
)
from .criteria import (  # noqa: F401
    FAILED,
    HOLDS,
    CheckReport,
    check_lemma44,
    check_prop51,
    check_property25,
    check_rd,
    report_to_dict,
)
