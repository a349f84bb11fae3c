"""Linear algebra over GF(2) with vectors packed into Python ints."""


def parity(x: int) -> int:
    return x.bit_count() & 1


def _reduce(pivots, vec, tag):
    while vec:
        top = vec.bit_length() - 1
        if top not in pivots:
            return vec, tag, top
        pvec, ptag = pivots[top]
        vec ^= pvec
        tag ^= ptag
    return 0, tag, None


def rank(vectors) -> int:
    pivots = {}
    for v in vectors:
        v, _, top = _reduce(pivots, v, 0)
        if v:
            pivots[top] = (v, 0)
    return len(pivots)


def nullspace(columns):
    """Basis of {c : XOR of columns[j] with bit j of c set == 0}.

    Each returned basis vector is an int whose bit j selects columns[j].
    """
    pivots = {}
    kernel = []
    for j, col in enumerate(columns):
        v, tag, top = _reduce(pivots, col, 1 << j)
        if v:
            pivots[top] = (v, tag)
        else:
            kernel.append(tag)
    return kernel


def solve(columns, target):
    """Return some c with XOR_j c_j*columns[j] == target, or None."""
    pivots = {}
    for j, col in enumerate(columns):
        v, tag, top = _reduce(pivots, col, 1 << j)
        if v:
            pivots[top] = (v, tag)
    rest, tag, _ = _reduce(pivots, target, 0)
    return None if rest else tag


def span(basis):
    """All 2^len(basis) XOR-combinations of the given vectors."""
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return out
