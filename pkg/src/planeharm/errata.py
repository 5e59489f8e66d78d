"""Catalog of identities that fail as printed, with corrections.

Every entry records a commonly quoted form of an identity that does not
survive independent verification, the reproducible evidence, and the form
that does hold.  The verification suite treats these as erratum checks:
such a check passes exactly when the documented discrepancy reproduces and
the corrected statement verifies.  Frozen values below were computed by the
oracles in this package and are asserted byte-for-byte by the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Erratum", "ERRATA", "get", "for_check"]


@dataclass(frozen=True)
class Erratum:
    """One documented discrepancy.

    ``check_id`` names the verification check that reproduces it.
    ``frozen`` pins specific reproducible values (point evaluations or
    canonical serializations) that must not drift between releases.
    """

    id: str
    check_id: str
    printed: str
    defect: str
    correction: str
    frozen: tuple[tuple[str, str], ...] = field(default=())


# Canonical serializations of the two closure residuals, exactly as the
# rewrite engine emits them (sorted by total degree, then lexicographically).
_BRACKET_RESIDUAL = """9 Y^0 Yinv^2 D^0 M^3 J^0
-12 Y^0 Yinv^1 D^1 M^2 J^0
-5/2 Y^0 Yinv^2 D^0 M^2 J^0
-1 Y^0 Yinv^0 D^2 M^1 J^0
-1 Y^0 Yinv^1 D^0 M^1 J^1
7 Y^0 Yinv^1 D^1 M^1 J^0
-3 Y^0 Yinv^2 D^0 M^1 J^0
-5/2 Y^0 Yinv^0 D^2 M^0 J^0
-1/2 Y^0 Yinv^1 D^0 M^1 J^0
3 Y^0 Yinv^1 D^1 M^0 J^0
-7/4 Y^0 Yinv^0 D^0 M^1 J^0
1/8 Y^0 Yinv^0 D^0 M^0 J^0"""

_CASIMIR_RESIDUAL = """3 Y^0 Yinv^2 D^0 M^4 J^0
-3 Y^0 Yinv^2 D^0 M^3 J^0
-3 Y^0 Yinv^0 D^2 M^2 J^0
-3 Y^0 Yinv^1 D^0 M^2 J^1
1 Y^0 Yinv^1 D^1 M^2 J^0
-1/4 Y^0 Yinv^2 D^0 M^2 J^0
1 Y^0 Yinv^0 D^2 M^1 J^0
-3/2 Y^0 Yinv^1 D^0 M^2 J^0
-1 Y^0 Yinv^1 D^1 M^1 J^0
3/2 Y^0 Yinv^2 D^0 M^1 J^0
3/4 Y^0 Yinv^0 D^0 M^2 J^0
2 Y^0 Yinv^0 D^1 M^0 J^1
13/4 Y^0 Yinv^0 D^2 M^0 J^0
-1 Y^0 Yinv^1 D^1 M^0 J^0
-1/4 Y^0 Yinv^0 D^0 M^1 J^0
1 Y^0 Yinv^0 D^1 M^0 J^0
3/16 Y^0 Yinv^0 D^0 M^0 J^0"""


ERRATA: tuple[Erratum, ...] = (
    Erratum(
        id="composed-lower-n-raise-alpha2",
        check_id="laguerre.composed-recurrences",
        printed=(
            "[d/dy + n/(alpha+1)] L_n^(alpha)(y) = "
            "-(alpha/(alpha+1)) L_{n-1}^(alpha+2)(y)"
        ),
        defect=(
            "Direct substitution of the series oracle refutes the relation: "
            "at (n, alpha, y) = (1, 0, 1) the left side is -1 while the "
            "right side is 0, and it fails on more than half of the "
            "(n, alpha) grid with n <= 12, |alpha| <= 6.  The division by "
            "alpha+1 also leaves alpha = -1 undefined."
        ),
        correction=(
            "(alpha+1) dL_n^(alpha)/dy + n L_n^(alpha) = -y L_{n-1}^(alpha+2), "
            "an exact polynomial identity for every integer alpha "
            "(composing the lower-n and raise-alpha steps and eliminating "
            "the mixed term restores a factor -y, not -alpha/(alpha+1))."
        ),
        frozen=(
            ("printed lhs at (n,alpha,y)=(1,0,1)", "-1.0"),
            ("printed rhs at (n,alpha,y)=(1,0,1)", "0.0"),
            ("printed residual at (n,alpha,y)=(1,0,1)", "1.0"),
            ("corrected residual at (n,alpha,y)=(1,0,1)", "0.0"),
        ),
    ),
    Erratum(
        id="composed-raise-n-lower-alpha2",
        check_id="laguerre.composed-recurrences",
        printed=(
            "[y(alpha-1) d/dy - y(n + 3 alpha/2) + alpha(alpha-1)] L_n^(alpha)(y) "
            "= (n + 3 alpha/2)(alpha+1) L_{n+1}^(alpha-2)(y)"
        ),
        defect=(
            "The coefficient pair (n + 3 alpha/2, alpha+1) does not survive "
            "composition of the raise-n and lower-alpha steps: at "
            "(n, alpha, y) = (1, 2, 1) the left side is -5 while the right "
            "side is -6."
        ),
        correction=(
            "[y(alpha-1) d/dy - y(n + alpha) + alpha(alpha-1)] L_n^(alpha) "
            "= (n+1)(n+alpha) L_{n+1}^(alpha-2), "
            "an exact polynomial identity."
        ),
        frozen=(
            ("printed lhs at (n,alpha,y)=(1,2,1)", "-5.0"),
            ("printed rhs at (n,alpha,y)=(1,2,1)", "-6.0"),
            ("printed residual at (n,alpha,y)=(1,2,1)", "1.0"),
            ("corrected residual at (n,alpha,y)=(1,2,1)", "0.0"),
        ),
    ),
    Erratum(
        id="radial-symmetry-sign",
        check_id="basis.symmetry-sign",
        printed=(
            "The normalized radial functions are symmetric under m -> -m: "
            "calL_j^m(y) = calL_j^(-m)(y)."
        ),
        defect=(
            "For half-integer m the two sides differ by a sign: at "
            "j = m = 1/2, y = 1 the function is -e^(-1/2) while its "
            "m-reflection is +e^(-1/2)."
        ),
        correction=(
            "calL_j^m(y) = (-1)^(2m) calL_j^(-m)(y): the reflection is even "
            "in the integer sector and odd in the half-integer sector, which "
            "is forced by the ladder-operator phase convention."
        ),
        frozen=(
            ("calL at (two_j,two_m)=(1,1), y=1", "-0.6065306597126334"),
            ("calL at (two_j,two_m)=(1,-1), y=1", "0.6065306597126334"),
        ),
    ),
    Erratum(
        id="closure-bracket-residual",
        check_id="algebra.closure-residuals",
        printed=(
            "[K+, K-] = 2 K3 + (M/y) E holds as an operator identity, so the "
            "normal-ordered difference should reduce to the empty expression."
        ),
        defect=(
            "Under the formal rewrite rules the difference [K+,K-] - 2M - "
            "(1/y)M E reduces to a nonzero 12-term canonical form (pinned "
            "below).  The rules know nothing about which eigenfunction the "
            "words act on, and the two sides only agree after each factor is "
            "read at its shifted (j, m) label."
        ),
        correction=(
            "On every basis function the bracket acts as multiplication by "
            "2m: composing the two first-order ladder actions label-wise "
            "gives [K+,K-] calL_j^m = 2m calL_j^m to relative 1e-8 for all "
            "j <= 8 (the E term contributes nothing on eigenfunctions, where "
            "E calL_j^m = 0)."
        ),
        frozen=(("canonical residual", _BRACKET_RESIDUAL),),
    ),
    Erratum(
        id="closure-casimir-residual",
        check_id="algebra.closure-residuals",
        printed=(
            "K3^2 + (1/2){K+, K-} = J(J+1) - (M^2/y) E as an operator "
            "identity, so the normal-ordered difference should be empty."
        ),
        defect=(
            "The formal difference M^2 + (1/2){K+,K-} - J^2 - J + (1/y)M^2 E "
            "reduces to a nonzero 17-term canonical form (pinned below), for "
            "the same reason as the bracket residual."
        ),
        correction=(
            "On every basis function the combination acts as multiplication "
            "by j(j+1): label-wise composition gives the Casimir value to "
            "relative 1e-8 for all j <= 8 (exactly 0.75 at j = 1/2)."
        ),
        frozen=(("canonical residual", _CASIMIR_RESIDUAL),),
    ),
)


def get(erratum_id: str) -> Erratum:
    """Look up one erratum by id."""
    for e in ERRATA:
        if e.id == erratum_id:
            return e
    raise KeyError(f"no erratum with id {erratum_id!r}")


def for_check(check_id: str) -> tuple[Erratum, ...]:
    """All errata reproduced by the given verification check."""
    return tuple(e for e in ERRATA if e.check_id == check_id)
