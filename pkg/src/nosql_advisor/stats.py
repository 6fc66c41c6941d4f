"""Pairwise association analysis of binary feature columns.

Spearman's rank correlation is computed as the Pearson correlation of midrank
transforms, which for binary columns coincides with the phi coefficient of the
2x2 contingency table (used as an independent oracle in the tests).  The
chi-square independence test uses the plain Pearson statistic without a
continuity correction and the closed-form one-degree-of-freedom tail
``p = erfc(sqrt(stat / 2))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .dataset import FeatureMatrix

SPEARMAN_RHO = "spearman_rho"
CHI_SQUARE_P = "chi_square_p"
CHI_SQUARE_STAT = "chi_square_stat"
KINDS = (SPEARMAN_RHO, CHI_SQUARE_P, CHI_SQUARE_STAT)

MODERATE_RHO_THRESHOLD = 0.4
SIGNIFICANCE_LEVEL = 0.05


class ConstantColumnError(ValueError):
    """Correlation is undefined when a column has no variation."""


class DegenerateTableError(ValueError):
    """Chi-square test is undefined when a row or column margin is zero."""


@dataclass(frozen=True)
class Contingency2x2:
    """Observed counts; rows index x in {0,1}, columns index y in {0,1}."""

    a: int  # x=0, y=0
    b: int  # x=0, y=1
    c: int  # x=1, y=0
    d: int  # x=1, y=1

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.d

    @property
    def margins(self) -> tuple[int, int, int, int]:
        return (self.a + self.b, self.c + self.d, self.a + self.c, self.b + self.d)


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    dof: int
    p_value: float


@dataclass(frozen=True)
class AssociationMatrix:
    kind: str
    values: np.ndarray  # (k, k) float, symmetric
    feature_names: tuple[str, ...]
    undefined_pairs: frozenset[tuple[int, int]] = frozenset()


def midranks(x: Sequence[int]) -> np.ndarray:
    """Average ranks (1-based) with ties sharing their midrank."""
    arr = np.asarray(x, dtype=float)
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(len(arr), dtype=float)
    i = 0
    while i < len(arr):
        j = i
        while j + 1 < len(arr) and arr[order[j + 1]] == arr[order[i]]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2 + 1
        i = j + 1
    return ranks


def spearman_rho(x: Sequence[int], y: Sequence[int]) -> float:
    """Pearson correlation of the midrank transforms of two columns."""
    x = np.asarray(x)
    y = np.asarray(y)
    if len(x) != len(y):
        raise ValueError(f"column lengths differ: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise ValueError("need at least two observations")
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise ConstantColumnError("correlation undefined for a constant column")
    rx = midranks(x)
    ry = midranks(y)
    rx -= rx.mean()
    ry -= ry.mean()
    return float(rx @ ry / math.sqrt((rx @ rx) * (ry @ ry)))


def contingency(x: Sequence[int], y: Sequence[int]) -> Contingency2x2:
    x = np.asarray(x)
    y = np.asarray(y)
    if len(x) != len(y):
        raise ValueError(f"column lengths differ: {len(x)} vs {len(y)}")
    return Contingency2x2(
        a=int(np.sum((x == 0) & (y == 0))),
        b=int(np.sum((x == 0) & (y == 1))),
        c=int(np.sum((x == 1) & (y == 0))),
        d=int(np.sum((x == 1) & (y == 1))),
    )


def phi(t: Contingency2x2) -> float:
    """Phi coefficient; equals Spearman's rho on binary columns."""
    r0, r1, c0, c1 = t.margins
    denom = math.sqrt(r0 * r1 * c0 * c1)
    if denom == 0:
        raise DegenerateTableError("phi undefined with a zero margin")
    return (t.a * t.d - t.b * t.c) / denom


def chi_square_test(t: Contingency2x2) -> ChiSquareResult:
    """Pearson chi-square test of independence on a 2x2 table (1 dof)."""
    if t.n < 1:
        raise DegenerateTableError("empty table")
    r0, r1, c0, c1 = t.margins
    if 0 in (r0, r1, c0, c1):
        raise DegenerateTableError("test undefined with a zero row/column margin")
    stat = t.n * (t.a * t.d - t.b * t.c) ** 2 / (r0 * r1 * c0 * c1)
    return ChiSquareResult(statistic=stat, dof=1, p_value=math.erfc(math.sqrt(stat / 2)))


def pairwise_matrix(matrix: FeatureMatrix, kind: str) -> AssociationMatrix:
    """Symmetric 9x9 association grid over the feature columns.

    Pairs where the statistic is undefined (constant column or degenerate
    table) are flagged in ``undefined_pairs`` and filled with NaN rather than
    silently imputed.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown association kind {kind!r}")
    cols = matrix.feature_rows()
    k = cols.shape[1] if len(matrix) else len(matrix.feature_names)
    values = np.full((k, k), np.nan)
    undefined: set[tuple[int, int]] = set()
    for i in range(k):
        x = cols[:, i]
        constant = len(matrix) == 0 or np.all(x == x[0])
        if kind == SPEARMAN_RHO:
            values[i, i] = np.nan if constant else 1.0
            if constant:
                undefined.add((i, i))
        else:
            values[i, i] = np.nan
            undefined.add((i, i))
        for j in range(i + 1, k):
            y = cols[:, j]
            try:
                if kind == SPEARMAN_RHO:
                    v = spearman_rho(x, y)
                else:
                    res = chi_square_test(contingency(x, y))
                    v = res.p_value if kind == CHI_SQUARE_P else res.statistic
            except (ConstantColumnError, DegenerateTableError):
                undefined.add((i, j))
                undefined.add((j, i))
                continue
            values[i, j] = values[j, i] = v
    return AssociationMatrix(
        kind=kind,
        values=values,
        feature_names=matrix.feature_names,
        undefined_pairs=frozenset(undefined),
    )


def moderate_pairs(a: AssociationMatrix, threshold: float = MODERATE_RHO_THRESHOLD) -> list[tuple[str, str, float]]:
    """Off-diagonal pairs with ``|rho| >= threshold``, listed once each."""
    if a.kind != SPEARMAN_RHO:
        raise ValueError("moderate_pairs expects a spearman_rho matrix")
    out = []
    k = len(a.feature_names)
    for i in range(k):
        for j in range(i + 1, k):
            v = a.values[i, j]
            if not math.isnan(v) and abs(v) >= threshold:
                out.append((a.feature_names[i], a.feature_names[j], float(v)))
    return out


def significant_pairs(a: AssociationMatrix, alpha: float = SIGNIFICANCE_LEVEL) -> list[tuple[str, str, float]]:
    """Off-diagonal pairs whose chi-square p-value is below ``alpha``."""
    if a.kind != CHI_SQUARE_P:
        raise ValueError("significant_pairs expects a chi_square_p matrix")
    out = []
    k = len(a.feature_names)
    for i in range(k):
        for j in range(i + 1, k):
            v = a.values[i, j]
            if not math.isnan(v) and v < alpha:
                out.append((a.feature_names[i], a.feature_names[j], float(v)))
    return out


def _format_cell(v: float) -> str:
    if math.isnan(v):
        return "undefined"
    return f"{v:.6g}"


def export_heatmap(a: AssociationMatrix, path: Path | str, svg_path: Path | str | None = None) -> None:
    """Write the machine-readable grid (and optionally a static SVG heatmap).

    Output bytes are deterministic for a given matrix: cells are formatted to
    6 significant digits and the color ramp is fixed.
    """
    names = a.feature_names
    lines = ["," + ",".join(names)]
    for i, name in enumerate(names):
        cells = [_format_cell(float(a.values[i, j])) for j in range(len(names))]
        lines.append(name + "," + ",".join(cells))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    if svg_path is not None:
        Path(svg_path).write_text(_render_svg(a), encoding="utf-8")


def _ramp_color(v: float, kind: str) -> str:
    """Fixed color ramp: rho maps [-1,1] blue-white-red, others map [0,1] white-blue."""
    if math.isnan(v):
        return "#cccccc"
    if kind == SPEARMAN_RHO:
        t = max(-1.0, min(1.0, v))
        if t >= 0:
            r, g, b = 255, round(255 * (1 - t)), round(255 * (1 - t))
        else:
            r, g, b = round(255 * (1 + t)), round(255 * (1 + t)), 255
    else:
        hi = 1.0 if kind == CHI_SQUARE_P else 80.0
        t = max(0.0, min(1.0, v / hi))
        r = round(255 * (1 - t))
        g = round(255 * (1 - 0.7 * t))
        b = 255
    return f"#{r:02x}{g:02x}{b:02x}"


def _render_svg(a: AssociationMatrix, cell: int = 48, margin: int = 150) -> str:
    names = a.feature_names
    k = len(names)
    width = margin + k * cell + 10
    height = margin + k * cell + 10
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for i, name in enumerate(names):
        y = margin + i * cell + cell // 2 + 4
        parts.append(f'<text x="{margin - 6}" y="{y}" font-size="11" text-anchor="end">{name}</text>')
        x = margin + i * cell + cell // 2
        parts.append(
            f'<text x="{x}" y="{margin - 6}" font-size="11" text-anchor="start" '
            f'transform="rotate(-45 {x} {margin - 6})">{name}</text>'
        )
    for i in range(k):
        for j in range(k):
            v = float(a.values[i, j])
            x = margin + j * cell
            y = margin + i * cell
            parts.append(
                f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                f'fill="{_ramp_color(v, a.kind)}" stroke="#888"/>'
            )
            label = "" if math.isnan(v) else f"{v:.2f}"
            if label:
                parts.append(
                    f'<text x="{x + cell // 2}" y="{y + cell // 2 + 4}" font-size="10" '
                    f'text-anchor="middle">{label}</text>'
                )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
