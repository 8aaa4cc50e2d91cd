import math

import pytest

from pmspec.exact import derangement_count
from pmspec.partitions import Partition, enumerate_partitions
from pmspec.sym_spectrum import (
    sym_spectrum_table,
    xi,
    xi_by_first_part,
    xi_by_last_part,
    xi_by_last_part_printed_variant,
)

P = Partition


def test_desk_values():
    assert xi_by_first_part(P((1, 1))) == -1
    assert xi_by_first_part(P((2, 1))) == -1
    assert xi_by_first_part(P((3, 1))) == -3
    assert xi_by_last_part(P((1, 1))) == -1
    assert xi_by_last_part(P((2, 2))) == 3
    assert xi_by_last_part(P((2, 1))) == -1
    assert xi(P((2, 1))).xi == -1
    assert xi_by_first_part(P()) == 1
    for n in range(1, 12):
        assert xi_by_first_part(P((n,))) == derangement_count(n)


def test_recurrences_agree():
    for n in range(1, 17):
        for mu in enumerate_partitions(n):
            assert xi_by_first_part(mu) == xi_by_last_part(mu), mu


def test_printed_variant_disagrees():
    assert xi_by_last_part_printed_variant(P((1, 1))) == -2
    assert xi_by_first_part(P((1, 1))) == -1
    with pytest.raises(ValueError):
        xi_by_last_part_printed_variant(P((3,)))


def test_table_small():
    t = sym_spectrum_table(2)
    assert t.rows == {P((2,)): (1, 1), P((1, 1)): (-1, 1)}
    t = sym_spectrum_table(3)
    assert t.rows == {P((3,)): (2, 1), P((2, 1)): (-1, 4), P((1, 1, 1)): (2, 1)}


def test_table_trace_identities():
    for n in range(1, 8):
        t = sym_spectrum_table(n)
        assert t.multiplicity_total() == math.factorial(n)
        assert sum(v * m for v, m in t.rows.values()) == 0
        assert sum(v * v * m for v, m in t.rows.values()) == math.factorial(
            n
        ) * derangement_count(n)


def test_n4_trace_desk_check():
    t = sym_spectrum_table(4)
    vals = {k.to_text(): v for k, v in t.rows.items()}
    assert vals == {
        "4": (9, 1),
        "3+1": (-3, 9),
        "2+2": (3, 4),
        "2+1+1": (1, 9),
        "1+1+1+1": (-3, 1),
    }
