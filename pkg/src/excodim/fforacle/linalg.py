"""Rank computation over the table fields.

Three paths: bitset elimination over GF(2), vectorized modular elimination
over odd prime fields, and table-lookup elimination for extensions.  Inputs
are matrices of field codes.
"""

from __future__ import annotations

import numpy as np

from .fields import Field


def _rank_gf2_bitrows(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            msb = row.bit_length() - 1
            if msb in pivots:
                row ^= pivots[msb]
            else:
                pivots[msb] = row
                rank += 1
                break
    return rank


def rows_to_bitrows(matrix: np.ndarray) -> list[int]:
    out = []
    for row in matrix:
        val = 0
        for j in np.flatnonzero(row):
            val |= 1 << int(j)
        out.append(val)
    return out


def _rank_prime(matrix: np.ndarray, p: int) -> int:
    m = matrix.astype(np.int64) % p
    nrows, ncols = m.shape
    rank = 0
    for col in range(ncols):
        if rank >= nrows:
            break
        sub = m[rank:, col]
        nz = np.flatnonzero(sub)
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        inv = pow(int(m[rank, col]), p - 2, p)
        m[rank] = (m[rank] * inv) % p
        rest = np.flatnonzero(m[:, col])
        rest = rest[rest != rank]
        if rest.size:
            m[rest] = (m[rest] - np.outer(m[rest, col], m[rank])) % p
        rank += 1
    return rank


def _rank_tables(matrix: np.ndarray, field: Field) -> int:
    m = matrix.astype(np.uint16).copy()
    nrows, ncols = m.shape
    rank = 0
    for col in range(ncols):
        if rank >= nrows:
            break
        sub = m[rank:, col]
        nz = np.flatnonzero(sub)
        if nz.size == 0:
            continue
        pivot = rank + int(nz[0])
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        m[rank] = field.MUL[m[rank], int(field.INV[m[rank, col]])]
        rest = np.flatnonzero(m[:, col])
        rest = rest[rest != rank]
        for i in rest:
            factor = field.NEG[m[i, col]]
            m[i] = field.ADD[m[i], field.MUL[m[rank], int(factor)]]
        rank += 1
    return rank


def matrix_rank(field: Field, matrix: np.ndarray) -> int:
    """Rank of a matrix of field codes."""
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    if field.p == 2 and field.e == 1:
        return _rank_gf2_bitrows(rows_to_bitrows(matrix))
    if field.e == 1:
        return _rank_prime(matrix, field.p)
    return _rank_tables(matrix, field)
