"""Exhaustive classification tables over bounded families.

Enumerates every normalized singular Brieskorn polynomial within bounds,
partitions the family with the pairwise decision procedure, and
cross-validates the partition two independent ways: the realized zeta
functions must induce exactly the same partition, and the number of
classes must match a purely combinatorial count (one class per choice of
exponent multiset and of sign counts at each sign-sensitive exponent).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Iterator, Sequence

from .brieskorn import BrieskornPoly, classify_pair, iter_normalized_singular
from .zeta import RealizedZeta, modified_zeta

# enumerations bigger than this are refused rather than attempted
MAX_TABLE_RECORDS = 200_000


@dataclass(frozen=True)
class TableRecord:
    """One enumerated polynomial with its class representative and invariants."""

    polynomial: str
    representative: str
    relevant: tuple[int, ...]
    sign_counts: tuple[tuple[int, int, int], ...]  # (k, plus, minus) per relevant k

    def to_json(self) -> dict:
        return {
            "polynomial": self.polynomial,
            "representative": self.representative,
            "relevant_exponents": list(self.relevant),
            "sign_counts": [
                {"k": k, "sigma_plus": p, "sigma_minus": m}
                for k, p, m in self.sign_counts
            ],
        }


def predicted_class_count(dimension: int, max_exp: int) -> int:
    """Number of equivalence classes in ``dimension`` variables, counted
    combinatorially: for each exponent multiset, one class per choice of
    (positives, negatives) split at each sign-sensitive exponent."""
    total = 0
    for ks in combinations_with_replacement(range(2, max_exp + 1), dimension):
        odd = {k for k in ks if k % 2}
        sensitive = {
            k for k in ks if k % 2 == 0 and not any(k % o == 0 for o in odd)
        }
        classes = 1
        for k in sensitive:
            classes *= ks.count(k) + 1
        total += classes
    return total


def _zeta_worker(args: tuple[BrieskornPoly, int]) -> RealizedZeta:
    poly, order = args
    return modified_zeta(poly, order)


def compute_zetas(
    polys: Sequence[BrieskornPoly], order: int, jobs: int = 1
) -> list[RealizedZeta]:
    """Modified zetas for a family, optionally across worker processes."""
    if jobs <= 1 or len(polys) < 256:
        return [modified_zeta(p, order) for p in polys]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk = max(1, len(polys) // (jobs * 8))
        return list(
            pool.map(_zeta_worker, ((p, order) for p in polys), chunksize=chunk)
        )


def partition_by_classifier(polys: Sequence[BrieskornPoly]) -> list[int]:
    """Class index per polynomial, built from pairwise classification against
    the first representative of each class seen so far."""
    representatives: list[BrieskornPoly] = []
    assignment = []
    for poly in polys:
        for class_id, rep in enumerate(representatives):
            if classify_pair(poly, rep).equivalent:
                assignment.append(class_id)
                break
        else:
            assignment.append(len(representatives))
            representatives.append(poly)
    return assignment


def partitions_agree(first: Sequence, second: Sequence) -> bool:
    """True iff two labelings of the same items induce the same partition."""
    forward: dict = {}
    backward: dict = {}
    for a, b in zip(first, second):
        if forward.setdefault(a, b) != b:
            return False
        if backward.setdefault(b, a) != a:
            return False
    return True


def iter_table(
    max_d: int,
    max_exp: int,
    order: int | None = None,
    jobs: int = 1,
    progress: Callable[[str], None] | None = None,
) -> Iterator[TableRecord]:
    """Stream classification records for d = 1..max_d.

    For each dimension the classifier partition is checked against the
    zeta partition and against the combinatorial class count before any
    record of that dimension is emitted.
    """
    if max_d < 1 or max_exp < 2:
        raise ValueError("need max_d >= 1 and max_exp >= 2")
    total_predicted = sum(
        predicted_class_count(d, max_exp) for d in range(1, max_d + 1)
    )
    if total_predicted > MAX_TABLE_RECORDS:
        raise ValueError(
            f"bounds too large: {total_predicted} classes exceeds "
            f"{MAX_TABLE_RECORDS}; shrink --max-d/--max-exp"
        )
    n = order if order is not None else 2 * max_exp
    if n < 1:
        raise ValueError("order must be >= 1")
    for d in range(1, max_d + 1):
        polys = list(iter_normalized_singular(d, max_exp))
        classes = partition_by_classifier(polys)
        zetas = compute_zetas(polys, n, jobs)
        if not partitions_agree(classes, zetas):
            raise AssertionError(
                f"zeta partition disagrees with the classifier at d={d}"
            )
        class_count = len(set(classes))
        predicted = predicted_class_count(d, max_exp)
        if class_count != predicted:
            raise AssertionError(
                f"classifier found {class_count} classes at d={d}, "
                f"combinatorial count predicts {predicted}"
            )
        if progress is not None:
            progress(f"d={d}: {len(polys)} polynomials, {class_count} classes")
        representative: dict[int, str] = {}
        for poly, class_id in zip(polys, classes):
            text = poly.to_text()
            rep = representative.setdefault(class_id, text)
            sensitive = poly.relevant_exponents()
            yield TableRecord(
                polynomial=text,
                representative=rep,
                relevant=sensitive,
                sign_counts=tuple(
                    (k, *poly.sign_counts(k)) for k in sensitive
                ),
            )
