"""Bounded-length deciders for Property RD and the related combinatorial tests.

Every verdict is either FAILED_WITH_WITNESS (with independently re-checkable
witnesses) or HOLDS_UP_TO_BOUND: the scan proves failure, but only gives
evidence of success, since the underlying quantifier ranges over an
infinite group.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import weyl
from .gcm import (
    GCMError,
    NoAdmissibleD,
    NotMaximal,
    make_parabolic,
    matrix_hash,
    pair_with_coroot,
)

FAILED = "FAILED_WITH_WITNESS"
HOLDS = "HOLDS_UP_TO_BOUND"


@dataclass
class CheckReport:
    check: str
    gcm_name: str | None
    matrix: tuple
    theta: tuple | None
    max_length: int
    verdict: str
    witnesses: list
    d_sup: Fraction | None
    stats: dict
    wall_time_ms: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def failed(self):
        return self.verdict == FAILED


def _frac(x):
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def report_to_dict(report, tool_version="0.1.0"):
    """Canonical JSON form: fixed key order, no timestamps in the verdict body."""
    return {
        "schema_version": 1,
        "tool_version": tool_version,
        "check": report.check,
        "gcm": {
            "name": report.gcm_name,
            "matrix": [list(r) for r in report.matrix],
            "sha256": matrix_hash(report.matrix),
        },
        "theta": list(report.theta) if report.theta is not None else None,
        "max_length": report.max_length,
        "verdict": report.verdict,
        "witnesses": report.witnesses,
        "d_sup": _frac(report.d_sup) if report.d_sup is not None else None,
        "stats": report.stats,
        **({"extra": report.extra} if report.extra else {}),
        "meta": {"wall_time_ms": report.wall_time_ms},
    }


def _require_maximal(spec, theta):
    theta = tuple(sorted(theta))
    if len(theta) != spec.rank - 1:
        raise NotMaximal(
            f"theta {theta} is not maximal (need |theta| = rank - 1)"
        )
    return theta


def check_rd(spec, theta, max_length, all_witnesses=False):
    """Decide Property RD up to the length bound via the strict-negativity
    criterion: <rho_M, alpha^vee> < 0 for every nontrivial w in W^theta
    and alpha in Phi_{w^-1}."""
    start = time.monotonic()
    theta = _require_maximal(spec, theta)
    par = make_parabolic(spec, theta)
    layers = weyl.enumerate_by_length(spec, max_length)
    elements = sum(len(l) for l in layers)
    witnesses = []
    d_sup = None
    roots_checked = 0
    reps = 0
    done = False
    for layer in layers[1:]:
        if done:
            break
        for w in layer:
            if not weyl.in_min_coset_reps(spec, w, theta):
                continue
            reps += 1
            for alpha in weyl.inversion_set_of_inverse(spec, w):
                roots_checked += 1
                rho_pair = pair_with_coroot(spec, par.rho_M, alpha)
                omega_pair = pair_with_coroot(spec, par.omega_P, alpha)
                if omega_pair <= 0:
                    raise GCMError(
                        "internal invariant violated: <omega_P, alpha^vee> <= 0 "
                        "on W^theta inversion set"
                    )
                if rho_pair >= 0:
                    witnesses.append({
                        "word": list(w.word),
                        "root": [int(x) for x in alpha],
                        "rho_M_pairing": _frac(rho_pair),
                        "omega_P_pairing": _frac(omega_pair),
                    })
                    if not all_witnesses:
                        done = True
                        break
                else:
                    ratio = -rho_pair / omega_pair
                    if d_sup is None or ratio < d_sup:
                        d_sup = ratio
            if done:
                break
    verdict = FAILED if witnesses else HOLDS
    return CheckReport(
        check="rd",
        gcm_name=spec.name,
        matrix=spec.matrix,
        theta=theta,
        max_length=max_length,
        verdict=verdict,
        witnesses=witnesses,
        d_sup=d_sup if verdict == HOLDS else None,
        stats={
            "elements_enumerated": elements,
            "coset_reps": reps,
            "roots_checked": roots_checked,
        },
        wall_time_ms=int((time.monotonic() - start) * 1000),
    )


def check_prop51(spec, max_length, all_witnesses=False):
    """Sufficient condition: <alpha_i, alpha^vee> <= 0 for every w, every
    alpha in Phi_{w^-1} and every simple i with w^-1(alpha_i) > 0."""
    start = time.monotonic()
    layers = weyl.enumerate_by_length(spec, max_length)
    elements = sum(len(l) for l in layers)
    witnesses = []
    roots_checked = 0
    done = False
    for layer in layers[1:]:
        if done:
            break
        for w in layer:
            ascents = [
                i for i in range(1, spec.rank + 1)
                if weyl.is_positive_vec(
                    tuple(w.inverse[r][i - 1] for r in range(spec.rank))
                )
            ]
            if not ascents:
                continue
            for alpha in weyl.inversion_set_of_inverse(spec, w):
                roots_checked += 1
                for i in ascents:
                    p = pair_with_coroot(spec, spec.simple_root(i), alpha)
                    if p > 0:
                        witnesses.append({
                            "word": list(w.word),
                            "root": [int(x) for x in alpha],
                            "simple_index": i,
                            "pairing": _frac(p),
                        })
                        if not all_witnesses:
                            done = True
                            break
                if done:
                    break
            if done:
                break
    return CheckReport(
        check="prop51",
        gcm_name=spec.name,
        matrix=spec.matrix,
        theta=None,
        max_length=max_length,
        verdict=FAILED if witnesses else HOLDS,
        witnesses=witnesses,
        d_sup=None,
        stats={
            "elements_enumerated": elements,
            "roots_checked": roots_checked,
        },
        wall_time_ms=int((time.monotonic() - start) * 1000),
    )


def admissible_d(par):
    """Largest 1/k, k a positive integer, with all theta-coordinates of
    D omega_P + rho_M strictly positive."""
    spec = par.spec
    if par.omega_P[par.excluded_index - 1] >= 0:
        raise NoAdmissibleD(
            "alpha_P-coefficient of omega_P is not negative"
        )
    k = 1
    for i in par.theta:
        n_i = par.omega_P[i - 1]
        if n_i < 0:
            # need 1/k < rho_M_i / (-n_i)
            k = max(k, int(-n_i / par.rho_M[i - 1]) + 1)
    return Fraction(1, k)


def check_lemma44(spec, theta, max_length, D=None, all_witnesses=False):
    """With a small admissible D, w^-1(D omega_P + rho_M) should be a
    nonnegative (and generically strictly positive) combination of simple
    roots for every nontrivial w in W^theta."""
    start = time.monotonic()
    theta = _require_maximal(spec, theta)
    par = make_parabolic(spec, theta)
    if D is None:
        D = admissible_d(par)
    vec = tuple(
        D * n + m for n, m in zip(par.omega_P, par.rho_M)
    )
    layers = weyl.enumerate_by_length(spec, max_length)
    elements = sum(len(l) for l in layers)
    witnesses = []
    strict_everywhere = True
    first_non_strict = None
    reps = 0
    done = False
    for layer in layers[1:]:
        if done:
            break
        for w in layer:
            if not weyl.in_min_coset_reps(spec, w, theta):
                continue
            reps += 1
            image = [
                sum(w.inverse[r][c] * vec[c] for c in range(spec.rank))
                for r in range(spec.rank)
            ]
            if any(x < 0 for x in image) or all(x == 0 for x in image):
                witnesses.append({
                    "word": list(w.word),
                    "image": [_frac(x) for x in image],
                })
                if not all_witnesses:
                    done = True
                    break
            elif any(x == 0 for x in image) and strict_everywhere:
                strict_everywhere = False
                first_non_strict = {
                    "word": list(w.word),
                    "image": [_frac(x) for x in image],
                }
    return CheckReport(
        check="lemma44",
        gcm_name=spec.name,
        matrix=spec.matrix,
        theta=theta,
        max_length=max_length,
        verdict=FAILED if witnesses else HOLDS,
        witnesses=witnesses,
        d_sup=None,
        stats={
            "elements_enumerated": elements,
            "coset_reps": reps,
        },
        wall_time_ms=int((time.monotonic() - start) * 1000),
        extra={
            "D": _frac(D),
            "strict_everywhere": strict_everywhere,
            "first_non_strict": first_non_strict,
        },
    )


def check_property25(spec, max_length, all_witnesses=False):
    """Factorization property: every nontrivial w admits a right descent
    s_beta (w = v s_beta, l(v) < l(w)) with alpha - beta never a real root
    for alpha in Phi_v."""
    start = time.monotonic()
    layers = weyl.enumerate_by_length(spec, max_length)
    elements = sum(len(l) for l in layers)
    by_matrix = {w.matrix: w for layer in layers for w in layer}
    witnesses = []
    checked = 0
    done = False
    for layer in layers[1:]:
        if done:
            break
        for w in layer:
            checked += 1
            blocking = {}
            ok = False
            for i in range(1, spec.rank + 1):
                col = tuple(w.matrix[r][i - 1] for r in range(spec.rank))
                if not all(x <= 0 for x in col):
                    continue  # not a right descent
                v = by_matrix[weyl._mul_right_simple(spec, w.matrix, i)]
                beta = spec.simple_root(i)
                bad = [
                    alpha for alpha in weyl.inversion_set(spec, v)
                    if weyl.is_real_root(
                        spec, tuple(a - b for a, b in zip(alpha, beta))
                    )
                ]
                if not bad:
                    ok = True
                    break
                blocking[i] = [[int(x) for x in alpha] for alpha in bad]
            if not ok:
                witnesses.append({
                    "word": list(w.word),
                    "blocking": {str(i): roots for i, roots in blocking.items()},
                })
                if not all_witnesses:
                    done = True
                    break
    return CheckReport(
        check="property25",
        gcm_name=spec.name,
        matrix=spec.matrix,
        theta=None,
        max_length=max_length,
        verdict=FAILED if witnesses else HOLDS,
        witnesses=witnesses,
        d_sup=None,
        stats={
            "elements_enumerated": elements,
            "elements_checked": checked,
        },
        wall_time_ms=int((time.monotonic() - start) * 1000),
    )
