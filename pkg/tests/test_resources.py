import math

import pytest

from spinqudit.codes import build_xyz_code
from spinqudit.resources import (
    CSV_HEADER,
    emit_comparison,
    logical_qubits,
    qubit_mapping_dim,
    qudit_dim,
    rows_to_csv,
    surface_code_qubits,
)


def test_known_dimensions():
    assert qudit_dim(3, 1) == 30
    assert qudit_dim(3, 2) == 100
    assert qudit_dim(2, 1) == 18


@pytest.mark.parametrize("t", [1, 2])
@pytest.mark.parametrize("d", range(2, 7))
def test_dimension_matches_builder(d, t):
    assert qudit_dim(d, t) == build_xyz_code(d, t).spin.dimension


def test_qubit_mapping_dimensions():
    # 2 logical qubits of 17 physical each, then 1 logical qubit
    assert surface_code_qubits(3) == 17
    assert qubit_mapping_dim(3, 3) == 2**34
    assert qubit_mapping_dim(2, 3) == 2**17
    assert qubit_mapping_dim(2, 3, physical_per_logical=9) == 2**9
    assert [logical_qubits(d) for d in (2, 3, 4, 5, 8, 9)] == [1, 2, 2, 3, 3, 4]


def test_domain_errors():
    with pytest.raises(ValueError):
        qudit_dim(1, 1)
    with pytest.raises(ValueError):
        qubit_mapping_dim(3, 4)
    with pytest.raises(ValueError):
        emit_comparison([], [3])


def test_ratio_grows_with_distance():
    for d in range(2, 9):
        sep = [
            math.log2(qubit_mapping_dim(d, dist)) - math.log2(qudit_dim(d, (dist - 1) // 2))
            for dist in (3, 5, 7)
        ]
        assert sep == sorted(sep) and len(set(sep)) == 3


def test_separation_nondecreasing_at_powers_of_two():
    seps = [
        math.log2(qubit_mapping_dim(d, 3)) - math.log2(qudit_dim(d, 1)) for d in (2, 4, 8, 16, 32)
    ]
    assert all(b > a for a, b in zip(seps, seps[1:]))


def test_csv_rows_and_flags():
    rows = emit_comparison(range(2, 4), [3, 7])
    text = rows_to_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == "2,3,18,1,17,17,0"
    assert rows[1].beyond_constructions and not rows[0].beyond_constructions
    assert len(lines) == 5
