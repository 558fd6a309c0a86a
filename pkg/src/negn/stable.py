"""Stable sequences D(lam, tau) of SU(N) representations and their Dynkin labels.

The label vector at rank N is ``(l_1, ..., l_k, 0, ..., 0, t_k, ..., t_1)``.
``lam`` contributes by column heights: ``l_i`` is the number of columns of
``lam`` of height ``i``.  ``tau`` contributes by row lengths: ``t_j``, sitting
at position ``N - j``, is the number of rows of ``tau`` of length ``j``.  With
this convention ``tau = (3, 1)`` gives ``t_1 = t_3 = 1``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .partitions import EMPTY, YoungDiagram, transpose

__all__ = [
    "DynkinLabels",
    "StableRep",
    "RankError",
    "young_to_labels_cols",
    "young_to_labels_rows",
    "labels_to_young",
    "n_min",
    "realize",
    "realized_young",
    "swap",
    "transpose_both",
    "z2_partner",
]


class RankError(ValueError):
    """Raised when a stable sequence is realized below its minimal rank."""

    def __init__(self, rep: "StableRep", n: int):
        self.rep = rep
        self.n = n
        self.n_min = n_min(rep)
        super().__init__(f"rank N={n} is below n_min={self.n_min} for {rep}")


@dataclass(frozen=True)
class DynkinLabels:
    labels: tuple[int, ...]
    rank_n: int

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        if self.rank_n < 2:
            raise ValueError(f"rank N must be >= 2, got {self.rank_n}")
        if len(labels) != self.rank_n - 1:
            raise ValueError(f"SU({self.rank_n}) needs {self.rank_n - 1} labels, got {len(labels)}")
        if any(x < 0 for x in labels):
            raise ValueError(f"Dynkin labels must be nonnegative: {labels}")


@dataclass(frozen=True, order=True)
class StableRep:
    lam: YoungDiagram = EMPTY
    tau: YoungDiagram = EMPTY

    def __post_init__(self):
        for name in ("lam", "tau"):
            value = getattr(self, name)
            if not isinstance(value, YoungDiagram):
                object.__setattr__(self, name, YoungDiagram(tuple(value)))

    @classmethod
    def parse(cls, text: str) -> "StableRep":
        """Parse ``"lambda=4,2,1 tau=3,1"``; a missing key means the empty diagram."""
        found = dict(re.findall(r"(lambda|tau)=(\S*)", text))
        leftover = re.sub(r"(lambda|tau)=\S*", "", text).strip()
        if leftover:
            raise ValueError(f"cannot parse stable representation: {text!r}")
        return cls(YoungDiagram.parse(found.get("lambda", "")), YoungDiagram.parse(found.get("tau", "")))

    @classmethod
    def from_json(cls, obj: Mapping[str, Sequence[int]]) -> "StableRep":
        return cls(YoungDiagram(tuple(obj.get("lambda", ()))), YoungDiagram(tuple(obj.get("tau", ()))))

    def to_json_obj(self) -> dict[str, list[int]]:
        return {"lambda": list(self.lam.rows), "tau": list(self.tau.rows)}

    @property
    def area(self) -> int:
        return self.lam.area + self.tau.area

    def __str__(self) -> str:
        return f"D(({self.lam}),({self.tau}))"


def _histogram(values) -> tuple[int, ...]:
    counts = Counter(values)
    if not counts:
        return ()
    return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))


def young_to_labels_cols(y: YoungDiagram) -> tuple[int, ...]:
    """Label i = number of columns of height i."""
    return _histogram(transpose(y).rows)


def young_to_labels_rows(y: YoungDiagram) -> tuple[int, ...]:
    """Label j = number of rows of length j."""
    return _histogram(y.rows)


def labels_to_young(labels: Sequence[int]) -> YoungDiagram:
    heights = sorted((i for i, m in enumerate(labels, start=1) for _ in range(m)), reverse=True)
    return transpose(YoungDiagram(tuple(heights)))


def n_min(rep: StableRep) -> int:
    return max(2, rep.lam.num_rows + rep.tau.num_cols + 1)


def realize(rep: StableRep, n: int) -> DynkinLabels:
    if n < n_min(rep):
        raise RankError(rep, n)
    labels = [0] * (n - 1)
    for i, m in enumerate(young_to_labels_cols(rep.lam), start=1):
        labels[i - 1] = m
    for j, m in enumerate(young_to_labels_rows(rep.tau), start=1):
        labels[n - j - 1] = m
    return DynkinLabels(tuple(labels), n)


def realized_young(rep: StableRep, n: int) -> YoungDiagram:
    return labels_to_young(realize(rep, n).labels)


def swap(rep: StableRep) -> StableRep:
    return StableRep(rep.tau, rep.lam)


def transpose_both(rep: StableRep) -> StableRep:
    return StableRep(transpose(rep.lam), transpose(rep.tau))


def z2_partner(rep: StableRep) -> StableRep:
    return StableRep(transpose(rep.tau), transpose(rep.lam))
