"""Formulas implemented in a form other than the reference statement.

Keys are the opaque identifiers used by strategy tags and verification
reports. ``status`` is ``corrected`` when the implemented form replaces a
reference form that disagrees with quadrature, and ``failed-as-printed``
when no candidate reading of the reference form holds.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Deviation:
    key: str
    status: str
    summary: str


DEVIATIONS: tuple[Deviation, ...] = (
    Deviation("Eq22", "corrected",
              "F2(a; b, b; c, c; z, -z) reduction: the 4F3 lower parameters are "
              "c/2, (c+1)/2, c; the reference lists (c+2)/2 in place of (c+1)/2."),
    Deviation("Eq26", "corrected",
              "F2(a; b, c-b; c, c; z, z) reduction: same lower-parameter fix as Eq22."),
    Deviation("SPECIAL-38", "corrected",
              "Prefactor uses (λ-z)^{b'}; the reference has the integration variable in "
              "place of z."),
    Deviation("SPECIAL-44", "corrected",
              "Two-sided ladder: the power of x in the integrand is c+j+l+s-1; the "
              "reference has the summation index k in place of l."),
    Deviation("SPECIAL-60", "corrected",
              "Equal-rate form with k1 != k2: the inner r-sum weight is (2k1/(k1-k2))^r; "
              "the reference repeats the outer weight (2k2/(k2-k1))."),
    Deviation("SPECIAL-70", "corrected",
              "The finite value Γ(c+j)/λ^{c+j}·(q-j)_n/(c+q)_n holds for every j; it "
              "vanishes exactly when 0 <= j-q < n. For j-q < 0 it is nonzero, whereas "
              "the reference states zero for all j-q < n."),
    Deviation("A1", "corrected",
              "Left side carries q-1 so that the second 1F1 keeps its denominator c+q."),
    Deviation("A5", "corrected",
              "The two terms with j+1 read j-1."),
    Deviation("A6", "corrected",
              "The last term enters with a plus sign."),
    Deviation("A7", "corrected",
              "First term carries q-1; last coefficient is w(b-c)/(c(c-1))."),
    Deviation("A8", "failed-as-printed",
              "Neither reading b'+1-c nor b'-c of the first coefficient holds; the "
              "coefficient b' does, and is the adopted reading."),
)

BY_KEY = {d.key: d for d in DEVIATIONS}


def lookup(label: str) -> Deviation | None:
    """Deviation for a report label such as 'A5[corrected]' or 'Eq22'."""
    return BY_KEY.get(label.split("[", 1)[0])
