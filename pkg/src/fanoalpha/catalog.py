"""Registry of worked example geometries with provenance-tagged invariants.

The catalog is a verified ledger, not a solver: every record is run
through the decision layer (monotonicity, the k/(n+1) lower bound, the
volume bound, the top-codimension alpha bound) and the built-in records
all validate.  Values that no module here can recompute, such as the
alpha invariant of a product of two lines, are stored as cited data with
an explicit provenance string.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from .exact_math import RationalLike, as_rational, format_rational
from .stability_criteria import (
    CriterionVerdict,
    Verdict,
    alpha_lower_bound_consistency,
    alpha_monotonicity_check,
    fujita_volume_test,
    top_alpha_volume_bound,
)


@dataclass(frozen=True)
class AlphaBound:
    """Interval of knowledge about one alpha invariant.

    ``exact`` means lower = upper is the true value; ``strict_lower``
    records that the lower bound is known to be strict; ``realized``
    records whether the infimum is attained by a complete intersection.
    """

    lower: Fraction
    upper: Fraction
    exact: bool = False
    realized: Optional[bool] = None
    strict_lower: bool = False

    def __init__(
        self,
        lower: RationalLike,
        upper: RationalLike,
        exact: bool = False,
        realized: Optional[bool] = None,
        strict_lower: bool = False,
    ) -> None:
        lower_val, upper_val = as_rational(lower), as_rational(upper)
        if not 0 < lower_val <= upper_val:
            raise ValueError(f"need 0 < lower <= upper, got [{lower_val}, {upper_val}]")
        if exact and lower_val != upper_val:
            raise ValueError("an exact bound must have lower = upper")
        if exact and strict_lower:
            raise ValueError("an exact bound cannot have a strict lower end")
        object.__setattr__(self, "lower", lower_val)
        object.__setattr__(self, "upper", upper_val)
        object.__setattr__(self, "exact", bool(exact))
        object.__setattr__(self, "realized", realized)
        object.__setattr__(self, "strict_lower", bool(strict_lower))

    def to_json(self) -> dict:
        return {
            "lower": format_rational(self.lower),
            "upper": format_rational(self.upper),
            "exact": self.exact,
            "realized": self.realized,
            "strict_lower": self.strict_lower,
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "AlphaBound":
        if not isinstance(obj, Mapping):
            raise ValueError("alpha bound must be a JSON object")
        missing = [f for f in ("lower", "upper") if f not in obj]
        if missing:
            raise ValueError(f"alpha bound missing field(s): {', '.join(missing)}")
        return cls(
            lower=as_rational(obj["lower"]),
            upper=as_rational(obj["upper"]),
            exact=bool(obj.get("exact", False)),
            realized=obj.get("realized"),
            strict_lower=bool(obj.get("strict_lower", False)),
        )


@dataclass(frozen=True)
class GeometryRecord:
    """A named Fano geometry with recorded invariants and provenance."""

    name: str
    n: int
    vol: Fraction
    smooth: bool
    k_semistable: Optional[bool] = None
    picard_rank_one: Optional[bool] = None
    alpha_bounds: Mapping[int, AlphaBound] = field(default_factory=dict)
    provenance: Mapping[str, str] = field(default_factory=dict)

    def __init__(
        self,
        name: str,
        n: int,
        vol: RationalLike,
        smooth: bool,
        k_semistable: Optional[bool] = None,
        picard_rank_one: Optional[bool] = None,
        alpha_bounds: Optional[Mapping[int, AlphaBound]] = None,
        provenance: Optional[Mapping[str, str]] = None,
    ) -> None:
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"dimension n must be a positive integer, got {n!r}")
        vol_val = as_rational(vol)
        if vol_val <= 0:
            raise ValueError(f"volume must be positive, got {vol_val}")
        bounds = dict(alpha_bounds or {})
        for k in bounds:
            if not isinstance(k, int) or not 1 <= k <= n:
                raise ValueError(f"alpha bound codimension {k!r} outside 1..{n}")
        object.__setattr__(self, "name", str(name))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vol", vol_val)
        object.__setattr__(self, "smooth", bool(smooth))
        object.__setattr__(self, "k_semistable", k_semistable)
        object.__setattr__(self, "picard_rank_one", picard_rank_one)
        object.__setattr__(self, "alpha_bounds", bounds)
        object.__setattr__(self, "provenance", dict(provenance or {}))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "vol": format_rational(self.vol),
            "smooth": self.smooth,
            "k_semistable": self.k_semistable,
            "picard_rank_one": self.picard_rank_one,
            "alpha_bounds": {
                str(k): self.alpha_bounds[k].to_json() for k in sorted(self.alpha_bounds)
            },
            "provenance": {k: self.provenance[k] for k in sorted(self.provenance)},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "GeometryRecord":
        if not isinstance(obj, Mapping):
            raise ValueError("geometry record must be a JSON object")
        missing = [f for f in ("name", "n", "vol", "smooth") if f not in obj]
        if missing:
            raise ValueError(f"geometry record missing field(s): {', '.join(missing)}")
        bounds = {}
        for key, raw in obj.get("alpha_bounds", {}).items():
            try:
                k = int(key)
            except ValueError:
                raise ValueError(f"alpha bound key {key!r} is not an integer") from None
            bounds[k] = AlphaBound.from_json(raw)
        return cls(
            name=obj["name"],
            n=obj["n"],
            vol=as_rational(obj["vol"]),
            smooth=bool(obj["smooth"]),
            k_semistable=obj.get("k_semistable"),
            picard_rank_one=obj.get("picard_rank_one"),
            alpha_bounds=bounds,
            provenance=obj.get("provenance", {}),
        )


def projective_space_record(n: int) -> GeometryRecord:
    """P^n: every alpha invariant equals k/(n+1), realized by linear subspaces."""
    bounds = {
        k: AlphaBound(Fraction(k, n + 1), Fraction(k, n + 1), exact=True, realized=True)
        for k in range(1, n + 1)
    }
    return GeometryRecord(
        name=f"P{n}",
        n=n,
        vol=Fraction((n + 1) ** n),
        smooth=True,
        k_semistable=True,
        picard_rank_one=True,
        alpha_bounds=bounds,
        provenance={
            "vol": "(-K)^n = ((n+1)H)^n on projective n-space",
            "alpha": "log canonical threshold k of a codimension-k linear subspace, "
            "rescaled by the anticanonical multiple n+1; equality case of the "
            "K-semistable lower bound k/(n+1)",
            "k_semistable": "projective space carries the Fubini-Study Kahler-Einstein metric",
        },
    )


def index_upper_bound_record(
    name: str,
    n: int,
    fano_index: int,
    vol: RationalLike,
    smooth: bool = True,
    picard_rank_one: Optional[bool] = None,
    provenance: Optional[Mapping[str, str]] = None,
) -> GeometryRecord:
    """Template for a K-semistable Fano of index l with -K = l*D, |D| base point free.

    Transversal intersections of k general members of |D| give the upper
    bound alpha_k <= k/l; K-semistability supplies the lower bound
    k/(n+1).  Covers smooth Fano hypersurfaces polarized by hyperplane
    sections, among others.
    """
    if not isinstance(fano_index, int) or not 1 <= fano_index <= n + 1:
        raise ValueError(f"Fano index must satisfy 1 <= l <= n+1, got {fano_index!r}")
    bounds = {
        k: AlphaBound(Fraction(k, n + 1), Fraction(k, fano_index)) for k in range(1, n + 1)
    }
    notes = {
        "alpha_upper": "complete intersections of k general base-point-free members of |D| "
        f"with -K = {fano_index}D have log canonical threshold k; upper bound k/{fano_index}",
        "alpha_lower": "K-semistable lower bound k/(n+1)",
    }
    notes.update(provenance or {})
    return GeometryRecord(
        name=name,
        n=n,
        vol=vol,
        smooth=smooth,
        k_semistable=True,
        picard_rank_one=picard_rank_one,
        alpha_bounds=bounds,
        provenance=notes,
    )


def builtin_records() -> list[GeometryRecord]:
    """The built-in example geometries; every record validates consistent."""
    records = [projective_space_record(n) for n in range(1, 9)]
    records.append(
        GeometryRecord(
            name="dP1",
            n=2,
            vol=Fraction(1),
            smooth=True,
            k_semistable=True,
            picard_rank_one=False,
            alpha_bounds={2: AlphaBound(2, 2, exact=True, realized=True)},
            provenance={
                "vol": "del Pezzo surface of degree 1: (-K)^2 = 1",
                "alpha_bounds[2]": "lower bound 2 from alpha_2 >= n/vol^(1/n) = 2; a general "
                "pencil in |-K| attains log canonical threshold 2, so alpha_2 = 2",
                "k_semistable": "Tian: degree-1 del Pezzo surfaces are Kahler-Einstein",
            },
        )
    )
    records.append(
        GeometryRecord(
            name="P1xP1",
            n=2,
            vol=Fraction(8),
            smooth=True,
            k_semistable=True,
            picard_rank_one=False,
            alpha_bounds={
                1: AlphaBound(Fraction(1, 2), Fraction(1, 2), exact=True),
                2: AlphaBound(Fraction(2, 3), Fraction(3, 4), strict_lower=True),
            },
            provenance={
                "vol": "-K of type (2,2): (-K)^2 = 8",
                "alpha_bounds[1]": "Cheltsov (2008): the alpha invariant of a smooth quadric "
                "surface is 1/2",
                "alpha_bounds[2]": "upper bound 3/4: the intersection of a symmetric pair of "
                "rulings with the diagonal, both of type one half of -K, has log canonical "
                "threshold 3/2, and rescaling gives 3/4; lower bound 2/3 is strict because "
                "the equality case of the k/(n+1) bound is exclusive to projective space; "
                "the exact value inside (2/3, 3/4] is open",
                "k_semistable": "toric and Kahler-Einstein (product of Fubini-Study factors)",
            },
        )
    )
    records.append(
        index_upper_bound_record(
            name="Q3",
            n=3,
            fano_index=3,
            vol=Fraction(54),
            picard_rank_one=True,
            provenance={
                "vol": "quadric threefold, -K = 3H with H^3 = 2: (-K)^3 = 54",
                "k_semistable": "smooth quadrics are homogeneous, hence Kahler-Einstein",
            },
        )
    )
    return records


def lookup(name: str, records: Optional[list[GeometryRecord]] = None) -> GeometryRecord:
    pool = builtin_records() if records is None else records
    for record in pool:
        if record.name == name:
            return record
    raise KeyError(f"no geometry record named {name!r}")


def validate_record(record: GeometryRecord) -> CriterionVerdict:
    """Run the decision-layer checks; return the first failure or a consistent verdict.

    Checks that need hypotheses the record does not assert are skipped,
    never assumed.
    """
    verdicts: list[CriterionVerdict] = []
    if record.alpha_bounds:
        verdicts.append(
            alpha_monotonicity_check(
                {k: (b.lower, b.upper) for k, b in record.alpha_bounds.items()}
            )
        )
    if record.k_semistable is True:
        if record.alpha_bounds:
            verdicts.append(alpha_lower_bound_consistency(record))
        verdicts.append(fujita_volume_test(record.n, record.vol, record.smooth))
    if record.smooth and record.n in record.alpha_bounds:
        top = record.alpha_bounds[record.n]
        verdicts.append(top_alpha_volume_bound(record.n, record.vol, top.upper))
    for verdict in verdicts:
        if verdict.is_failure:
            return verdict
    assumptions: list[str] = []
    trace = []
    for verdict in verdicts:
        assumptions.extend(verdict.assumptions)
        trace.extend(verdict.trace)
    return CriterionVerdict(
        Verdict.INCONCLUSIVE, "catalog_validation", tuple(assumptions), tuple(trace)
    )


def save_record(record: GeometryRecord, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(record.to_json(), handle, indent=2)
        handle.write("\n")


def load_record(path: str) -> GeometryRecord:
    with open(path, "r", encoding="utf-8") as handle:
        return GeometryRecord.from_json(json.load(handle))


def load_records(directory: str) -> list[GeometryRecord]:
    """Load every .json file in a directory, one record per file."""
    records = []
    for entry in sorted(os.listdir(directory)):
        if entry.endswith(".json"):
            records.append(load_record(os.path.join(directory, entry)))
    return records
