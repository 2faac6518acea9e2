# longitudinal/aggregator.py
# ShuffleLDP v1.0.0 - Server: albero delle somme, coperture diadiche, stime
# ============================================================================
# L'albero è un array piatto di 2d − 1 nodi: il livello h (H(h) = d/2^{h−1}
# nodi) parte dall'offset 2d − 2H(h). Il nodo [h, j] copre le foglie
# ((j − 1)·2^{h−1}, j·2^{h−1}].
#
# f̃_t = c_ε · k · L · Σ_{[h,i] ∈ C(t)} T[h, i]
# dove C(t) è la copertura diadica di [1, t] (un nodo per bit a 1 di t) e
# L è il fattore di livello (vedi LEVEL_SCALINGS).
# ============================================================================

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from config import LEVEL_SCALINGS, DEFAULT_LEVEL_SCALING
from core.errors import InvalidParameterError, MalformedReportError
from core.privacy import scale_factor
from core.randomness import RandomnessStream
from .models import Report, log2_int

logger = logging.getLogger(__name__)

Node = Tuple[int, int]


# ============================================================================
# ALBERO DELLE SOMME
# ============================================================================

@dataclass
class SumTree:
    """
    Somme intere dei report per nodo [h, j], più il numero di report per nodo.

    Attributes:
        d: Orizzonte (potenza di 2)
        values: Array int64 di 2d − 1 somme
        counts: Array int64 di 2d − 1 conteggi
    """
    d: int
    values: np.ndarray = None
    counts: np.ndarray = None

    def __post_init__(self):
        self.levels = log2_int(self.d) + 1
        size = 2 * self.d - 1
        if self.values is None:
            self.values = np.zeros(size, dtype=np.int64)
        if self.counts is None:
            self.counts = np.zeros(size, dtype=np.int64)
        if self.values.shape != (size,) or self.counts.shape != (size,):
            raise InvalidParameterError(f"un albero con d={self.d} ha {size} nodi")

    def width(self, h: int) -> int:
        """H(h) = d / 2^{h−1}: nodi al livello h."""
        return self.d >> (h - 1)

    def offset(self, h: int, j: int) -> int:
        if not (1 <= h <= self.levels) or not (1 <= j <= self.width(h)):
            raise InvalidParameterError(f"nodo [{h}, {j}] non valido per d={self.d}")
        return 2 * self.d - 2 * self.width(h) + j - 1

    def get(self, h: int, j: int) -> int:
        return int(self.values[self.offset(h, j)])

    def count(self, h: int, j: int) -> int:
        return int(self.counts[self.offset(h, j)])

    def level(self, h: int) -> np.ndarray:
        """Vista sui valori del livello h (j = 1 … H(h))."""
        start = self.offset(h, 1)
        return self.values[start: start + self.width(h)]

    def nonzero_nodes(self) -> List[Tuple[Node, int]]:
        nodes = []
        for h in range(1, self.levels + 1):
            for j, value in enumerate(self.level(h).tolist(), start=1):
                if value:
                    nodes.append(((h, j), value))
        return nodes

    def __eq__(self, other) -> bool:
        if not isinstance(other, SumTree):
            return NotImplemented
        return (
            self.d == other.d
            and np.array_equal(self.values, other.values)
            and np.array_equal(self.counts, other.counts)
        )


def _offsets(h: np.ndarray, t: np.ndarray, d: int) -> np.ndarray:
    widths = d >> (h - 1)
    return 2 * d - 2 * widths + (t >> (h - 1)) - 1


def accumulate_arrays(h, t, u, d: int) -> SumTree:
    """
    Versione vettoriale di accumulate su array paralleli (h, t, u).

    Raises:
        MalformedReportError: primo report non valido trovato
    """
    tree = SumTree(d)
    h = np.asarray(h, dtype=np.int64)
    t = np.asarray(t, dtype=np.int64)
    u = np.asarray(u, dtype=np.int64)
    if not (h.shape == t.shape == u.shape) or h.ndim != 1:
        raise MalformedReportError("array h, t, u di forma diversa")
    if h.size == 0:
        return tree
    bad = (h < 1) | (h > tree.levels) | (t < 1) | (t > d) | ((u != 1) & (u != -1))
    safe_h = np.clip(h, 1, tree.levels)
    bad |= (t & ((1 << (safe_h - 1)) - 1)) != 0
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        Report(h=int(h[i]), t=int(t[i]), u=int(u[i])).validate(d)
    offsets = _offsets(h, t, d)
    size = 2 * d - 1
    tree.values += np.bincount(offsets, weights=u, minlength=size).astype(np.int64)
    tree.counts += np.bincount(offsets, minlength=size).astype(np.int64)
    return tree


def accumulate(reports: Iterable[Report], d: int) -> SumTree:
    """
    T[h, t/2^{h−1}] += u per ogni report; indipendente dall'ordine.

    Raises:
        MalformedReportError: 2^{h−1} non divide t, o campi fuori range
    """
    tree = SumTree(d)
    for report in reports:
        report.validate(d)
        index = tree.offset(*report.node)
        tree.values[index] += report.u
        tree.counts[index] += 1
    return tree


def merge_trees(first: SumTree, second: SumTree) -> SumTree:
    """Somma nodo per nodo di due accumulazioni parziali."""
    if first.d != second.d:
        raise InvalidParameterError(f"alberi con d diversi: {first.d} vs {second.d}")
    return SumTree(first.d, first.values + second.values, first.counts + second.counts)


# ============================================================================
# COPERTURE DIADICHE
# ============================================================================

@dataclass(frozen=True)
class DyadicCover:
    """Nodi [h, i] le cui foglie partizionano [1, t]."""
    t: int
    d: int
    nodes: FrozenSet[Node] = field(default_factory=frozenset)

    def ordered(self) -> List[Node]:
        """Nodi da sinistra a destra (livelli decrescenti)."""
        return sorted(self.nodes, key=lambda node: (node[1] - 1) << (node[0] - 1))

    def leaf_ranges(self) -> List[Tuple[int, int]]:
        """Intervalli di foglie [inizio, fine] coperti da ciascun nodo."""
        ranges = []
        for h, i in self.ordered():
            size = 1 << (h - 1)
            ranges.append(((i - 1) * size + 1, i * size))
        return ranges

    def __len__(self) -> int:
        return len(self.nodes)


def _check_t(t: int, d: int) -> None:
    log2_int(d)
    if not (1 <= t <= d):
        raise InvalidParameterError(f"t deve essere in [1, {d}], ottenuto {t}")


def dyadic_cover(t: int, d: int) -> DyadicCover:
    """
    Copertura diadica canonica di [1, t]: un nodo per ogni bit a 1 di t.

    Il bit di valore 2^{h−1} dà il nodo [h, 2·⌊t / 2^h⌋ + 1].
    """
    _check_t(t, d)
    nodes = set()
    for h in range(log2_int(d) + 1, 0, -1):
        if t & (1 << (h - 1)):
            nodes.add((h, ((t >> h) << 1) + 1))
    return DyadicCover(t=t, d=d, nodes=frozenset(nodes))


def merge_loop_cover(t: int, d: int, rng: Optional[RandomnessStream] = None) -> DyadicCover:
    """
    Ciclo di fusione letterale: parte dalle foglie [1,1] … [1,t] e sostituisce
    ogni coppia di fratelli [h, i−1], [h, i] (i pari) con il padre [h+1, i/2]
    finché possibile. Con rng le coppie sono scelte in ordine casuale.

    Usato come oracolo nei test.
    """
    _check_t(t, d)
    cover = {(1, i) for i in range(1, t + 1)}
    # coppie fondibili, identificate dal fratello destro (h, i) con i pari
    candidates = [(1, i) for i in range(2, t + 1, 2)]
    while candidates:
        if rng is None:
            h, i = candidates.pop()
        else:
            pick = rng.next_below(len(candidates))
            candidates[pick], candidates[-1] = candidates[-1], candidates[pick]
            h, i = candidates.pop()
        cover.discard((h, i - 1))
        cover.discard((h, i))
        parent = (h + 1, i // 2)
        cover.add(parent)
        ph, pi = parent
        if pi % 2 == 0 and (ph, pi - 1) in cover:
            candidates.append(parent)
        elif pi % 2 == 1 and (ph, pi + 1) in cover:
            candidates.append((ph, pi + 1))
    return DyadicCover(t=t, d=d, nodes=frozenset(cover))


# ============================================================================
# STIME
# ============================================================================

def level_factor(d: int, level_scaling: str = DEFAULT_LEVEL_SCALING) -> float:
    """
    Peso inverso della probabilità di campionare un livello.

    "sampled": log2(d) + 1 (numero di livelli); "literal": max(log2(d), 1).
    """
    if level_scaling not in LEVEL_SCALINGS:
        raise InvalidParameterError(f"level_scaling sconosciuto: {level_scaling!r}")
    log_d = log2_int(d)
    return float(log_d + 1) if level_scaling == "sampled" else float(max(log_d, 1))


@dataclass
class MarginalEstimates:
    """Stime f̃_t per t = 1 … d; true_f solo in simulazione."""
    f_tilde: np.ndarray
    true_f: Optional[np.ndarray] = None

    @property
    def d(self) -> int:
        return int(self.f_tilde.size)

    def abs_errors(self) -> np.ndarray:
        if self.true_f is None:
            raise InvalidParameterError("errori disponibili solo con il valore vero (simulazione)")
        return np.abs(self.f_tilde - self.true_f)

    def max_abs_error(self) -> float:
        return float(self.abs_errors().max())


def prefix_sums(tree: SumTree) -> np.ndarray:
    """Σ_{[h,i] ∈ C(t)} T[h, i] per ogni t, in O(d log d)."""
    d = tree.d
    t = np.arange(1, d + 1, dtype=np.int64)
    sums = np.zeros(d, dtype=np.int64)
    for h in range(1, tree.levels + 1):
        size = 1 << (h - 1)
        mask = (t & size) != 0
        j = ((t[mask] >> h) << 1) + 1
        offsets = 2 * d - 2 * tree.width(h) + j - 1
        sums[mask] += tree.values[offsets]
    return sums


def estimate_marginals(
    tree: SumTree,
    epsilon: float,
    k: int,
    d: int,
    level_scaling: str = DEFAULT_LEVEL_SCALING,
    true_f: Optional[np.ndarray] = None,
) -> MarginalEstimates:
    """
    Stime de-biased f̃_t = c_ε · k · L · Σ_{C(t)} T.

    Args:
        tree: Albero costruito per questo d
        epsilon: Budget dei client
        k: Budget di cambi dei client
        d: Orizzonte
        level_scaling: Fattore di livello, vedi level_factor
        true_f: Valori veri (solo simulazione)

    Raises:
        InvalidParameterError: d o true_f incoerenti con l'albero
    """
    if tree.d != d:
        raise InvalidParameterError(f"albero costruito per d={tree.d}, richiesto d={d}")
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise InvalidParameterError(f"k deve essere un intero >= 1, ottenuto {k}")
    if true_f is not None and np.asarray(true_f).shape != (d,):
        raise InvalidParameterError(f"true_f deve avere lunghezza {d}")
    scale = scale_factor(epsilon) * k * level_factor(d, level_scaling)
    f_tilde = scale * prefix_sums(tree).astype(np.float64)
    return MarginalEstimates(
        f_tilde=f_tilde,
        true_f=None if true_f is None else np.asarray(true_f, dtype=np.int64),
    )
