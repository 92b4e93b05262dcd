"""Verification passes over an enumerated monoid table.

Each check returns a :class:`CheckReport`; nothing raises on a negative
result, so a runner can collect every report before deciding an exit code.
All verdicts are scoped to the enumerated range: "pass" means no violation
exists among elements of degree <= cutoff, which is evidence, not a proof
for the untruncated monoid.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .dirichlet import (
    KeyKind,
    Series,
    growth_series,
    key_add,
    key_sub,
    key_zero,
    render_key,
    series_invert,
    series_mul,
    series_one,
)
from .divisibility import DivPoset, mask_to_ids
from .towers import TowerForest, enumerate_towers, skew_growth, tower_sign

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class CheckReport:
    name: str
    status: str
    max_degree_verified: object = None
    counterexample: dict | None = None
    notes: str = ""
    key_kind: KeyKind | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        degree = self.max_degree_verified
        if degree is not None and self.key_kind is KeyKind.RATIONAL:
            degree = render_key(self.key_kind, degree)
        return {
            "name": self.name,
            "status": self.status,
            "max_degree_verified": degree,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }


def _render(table, key) -> str:
    return render_key(table.key_kind, key)


# ------------------------------------------------------------- cancellativity

def check_cancellative(table) -> CheckReport:
    """Collision probe for cancellativity on the enumerated range.

    Left cancellativity of products that land inside the table says the maps
    u -> a*u are injective degree-slice by degree-slice; the probe materializes
    each slice and looks for a collision, walking product degrees in increasing
    order so a failure is reported at the least witness.  Right products are
    probed the same way.
    """
    kind = table.key_kind
    zero = key_zero(kind)
    degrees = table.realized_degrees()
    for total in degrees:
        for factor_degree in degrees:
            if factor_degree == zero:
                continue
            other_degree = key_sub(kind, total, factor_degree)
            if other_degree is None or not table.elements_of_degree(other_degree):
                continue
            for side in ("left", "right"):
                witness = _collision(table, side, factor_degree, other_degree)
                if witness is not None:
                    factor, first, second = witness
                    return CheckReport(
                        name="cancellativity",
                        status=FAIL,
                        max_degree_verified=total,
                        counterexample={
                            "side": side,
                            "factor": table.label(factor),
                            "first": table.label(first),
                            "second": table.label(second),
                            "product_degree": _render(table, total),
                        },
                        notes=(
                            f"{side} multiplication by {table.label(factor)} "
                            f"identifies {table.label(first)} and {table.label(second)}"
                        ),
                        key_kind=kind,
                    )
    return CheckReport(
        name="cancellativity",
        status=PASS,
        max_degree_verified=table.cutoff,
        notes="no collision among products of degree <= cutoff",
        key_kind=kind,
    )


def _collision(table, side, factor_degree, other_degree):
    for factor in table.elements_of_degree(factor_degree):
        seen: dict = {}
        for other in table.elements_of_degree(other_degree):
            if side == "left":
                result = table.product(factor, other)
            else:
                result = table.product(other, factor)
            if result is None:
                continue
            if result in seen:
                return factor, seen[result], other
            seen[result] = other
    return None


# ------------------------------------------------------------------ inversion

def check_inversion(table, forest: TowerForest | None = None,
                    cancellativity: CheckReport | None = None) -> CheckReport:
    """Does the tower skew-growth series invert the growth series?

    Two equalities are required: P*N == 1 under truncated convolution, and
    N == invert(P) term by term.  The report notes the cancellativity probe's
    verdict, since the inversion identity is only meaningful evidence for
    cancellative input.
    """
    if cancellativity is None:
        cancellativity = check_cancellative(table)
    growth = growth_series(table)
    skew = skew_growth(table, forest=forest)
    product = series_mul(growth, skew)
    one = series_one(table.key_kind, table.cutoff)
    notes = f"cancellativity probe: {cancellativity.status}"
    if product != one:
        bad = _first_difference(product, one)
        return CheckReport(
            name="inversion",
            status=FAIL,
            max_degree_verified=bad,
            counterexample={
                "degree": _render(table, bad),
                "product_coefficient": product.coefficient(bad) - one.coefficient(bad),
            },
            notes=f"P*N deviates from 1 first at degree {_render(table, bad)}; {notes}",
            key_kind=table.key_kind,
        )
    inverse = series_invert(growth)
    if skew != inverse:
        bad = _first_difference(skew, inverse)
        return CheckReport(
            name="inversion",
            status=FAIL,
            max_degree_verified=bad,
            counterexample={
                "degree": _render(table, bad),
                "skew_coefficient": skew.coefficient(bad),
                "inverse_coefficient": inverse.coefficient(bad),
            },
            notes=(
                f"tower series differs from invert(P) first at degree "
                f"{_render(table, bad)}; {notes}"
            ),
            key_kind=table.key_kind,
        )
    return CheckReport(
        name="inversion",
        status=PASS,
        max_degree_verified=table.cutoff,
        notes=f"P*N == 1 and N == invert(P) up to cutoff; {notes}",
        key_kind=table.key_kind,
    )


def _first_difference(f: Series, g: Series):
    keys = sorted(set(f.terms) | set(g.terms))
    for key in keys:
        if f.terms.get(key, 0) != g.terms.get(key, 0):
            return key
    raise ValueError("series are equal")


# ------------------------------------------------------------------ recursion

def check_recursion(table, forest: TowerForest | None = None) -> CheckReport:
    """Element-count recursion: for every degree t > 0 reachable as a tower
    contribution plus an element degree,

        sum over terms (k, c) of N of  c * m(t - k)  ==  0

    with m the element count.  Evaluated directly from the table counts and
    the tower contributions, term by term, not via series convolution.
    """
    kind = table.key_kind
    zero = key_zero(kind)
    skew = skew_growth(table, forest=forest)
    counts = {d: len(table.elements_of_degree(d)) for d in table.realized_degrees()}
    targets = set()
    for n_key in skew.terms:
        for degree in counts:
            total = key_add(kind, n_key, degree)
            if total <= table.cutoff and total != zero:
                targets.add(total)
    for total in sorted(targets):
        acc = 0
        for n_key, coeff in skew.terms.items():
            rest = key_sub(kind, total, n_key)
            if rest is None:
                continue
            acc += coeff * counts.get(rest, 0)
        if acc:
            return CheckReport(
                name="recursion",
                status=FAIL,
                max_degree_verified=total,
                counterexample={"degree": _render(table, total), "residual": acc},
                notes=f"count recursion fails first at degree {_render(table, total)}",
                key_kind=kind,
            )
    return CheckReport(
        name="recursion",
        status=PASS,
        max_degree_verified=table.cutoff,
        notes=f"count recursion holds at all {len(targets)} reachable degrees",
        key_kind=kind,
    )


# -------------------------------------------------------------- lcm reduction

def check_lcm_reduction(table, poset: DivPoset | None = None,
                        ground=None, forest: TowerForest | None = None) -> CheckReport:
    """Inclusion-exclusion shortcut available when minimal common multiples
    of ground subsets are unique.

    When every nonempty subset J of the ground with a common multiple in range
    has exactly one minimal common multiple D_J, the skew-growth series
    collapses to  1 + sum_J (-1)^|J| t^deg(D_J).  The check compares that sum
    against the tower series; a ground subset with two or more minimal common
    multiples makes the shortcut inapplicable and is reported as such.
    """
    if poset is None:
        poset = table.poset()
    if ground is None:
        ground = forest.ground if forest is not None else table.atoms()
    kind = table.key_kind
    terms = {key_zero(kind): 1}
    for subset, mask in poset.iter_supported_subsets(ground, min_size=1):
        tops = poset.minimal_elements(mask_to_ids(mask))
        if len(tops) > 1:
            return CheckReport(
                name="lcm-reduction",
                status=NOT_APPLICABLE,
                counterexample={
                    "subset": [table.label(e) for e in subset],
                    "minimal_common_multiples": [table.label(e) for e in tops],
                },
                notes="a ground subset has several minimal common multiples",
                key_kind=kind,
            )
        degree = table.degree(tops[0])
        sign = -1 if len(subset) % 2 else 1
        terms[degree] = terms.get(degree, 0) + sign
    reduced = Series.build(kind, table.cutoff, terms)
    skew = skew_growth(table, poset=poset, ground=ground, forest=forest)
    if reduced != skew:
        bad = _first_difference(reduced, skew)
        return CheckReport(
            name="lcm-reduction",
            status=FAIL,
            max_degree_verified=bad,
            counterexample={
                "degree": _render(table, bad),
                "reduced_coefficient": reduced.coefficient(bad),
                "tower_coefficient": skew.coefficient(bad),
            },
            notes="inclusion-exclusion over unique lcms disagrees with towers",
            key_kind=kind,
        )
    return CheckReport(
        name="lcm-reduction",
        status=PASS,
        max_degree_verified=table.cutoff,
        notes="unique-lcm inclusion-exclusion reproduces the tower series",
        key_kind=kind,
    )


def run_all_checks(table, poset: DivPoset | None = None,
                   ground=None) -> list[CheckReport]:
    """The full battery in a stable order, sharing one poset and forest."""
    if poset is None:
        poset = table.poset()
    forest = enumerate_towers(table, poset=poset, ground=ground)
    cancel = check_cancellative(table)
    reports = [
        cancel,
        check_inversion(table, forest=forest, cancellativity=cancel),
        check_recursion(table, forest=forest),
        check_lcm_reduction(table, poset=poset, ground=ground, forest=forest),
    ]
    return reports
