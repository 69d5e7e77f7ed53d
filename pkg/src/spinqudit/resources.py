"""Hilbert-space cost of a spin-encoded logical qudit versus a qubit mapping.

The qubit baseline stores ``ceil(log2 d)`` logical qubits, each a rotated
surface code with ``2 * distance**2 - 1`` physical qubits by default.
"""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Iterable
from dataclasses import dataclass


def surface_code_qubits(distance: int) -> int:
    """Rotated surface code: distance^2 data plus distance^2 - 1 ancilla qubits."""
    return 2 * distance**2 - 1


def qudit_dim(d: int, t: int) -> int:
    """Dimension ``2S+1`` of the single spin carrying the X/Y/Z code."""
    if d < 2 or t < 1:
        raise ValueError("need d >= 2 and t >= 1")
    return 2 * t * (2 * t + 1) * (2 * d - 1)


def logical_qubits(d: int) -> int:
    return math.ceil(math.log2(d))


def qubit_mapping_dim(d: int, code_distance: int, physical_per_logical: int | None = None) -> int:
    if d < 2 or code_distance < 3 or code_distance % 2 == 0:
        raise ValueError("need d >= 2 and an odd code distance >= 3")
    n = physical_per_logical or surface_code_qubits(code_distance)
    return 2 ** (n * logical_qubits(d))


@dataclass(frozen=True)
class ResourceRow:
    d: int
    distance: int
    qudit_dim: int
    logical_qubits: int
    physical_qubits: int
    qubit_mapping_dim: int
    beyond_constructions: bool

    @property
    def log2_qubit_dim(self) -> int:
        return self.physical_qubits

    def as_csv_row(self) -> list:
        return [
            self.d, self.distance, self.qudit_dim, self.logical_qubits,
            self.physical_qubits, self.log2_qubit_dim, int(self.beyond_constructions),
        ]


CSV_HEADER = [
    "d", "distance", "qudit_dim", "logical_qubits", "physical_qubits", "log2_qubit_dim",
    "beyond_constructions",
]


def emit_comparison(
    d_range: Iterable[int],
    distance_range: Iterable[int],
    physical_per_logical: int | None = None,
) -> list[ResourceRow]:
    """One row per ``(d, distance)``; distances of 7 and up are flagged as extrapolated."""
    d_values, distances = list(d_range), list(distance_range)
    if not d_values or not distances:
        raise ValueError("ranges must be nonempty")
    rows = []
    for d in d_values:
        for dist in distances:
            t = (dist - 1) // 2
            n_logical = logical_qubits(d)
            per = physical_per_logical or surface_code_qubits(dist)
            rows.append(ResourceRow(
                d=d,
                distance=dist,
                qudit_dim=qudit_dim(d, t),
                logical_qubits=n_logical,
                physical_qubits=per * n_logical,
                qubit_mapping_dim=qubit_mapping_dim(d, dist, physical_per_logical),
                beyond_constructions=t > 2,
            ))
    return rows


def rows_to_csv(rows: Iterable[ResourceRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_csv_row())
    return buf.getvalue()
