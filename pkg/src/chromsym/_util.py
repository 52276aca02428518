"""Small shared helpers."""


def iter_bits(mask: int):
    """Yield the positions of set bits in a nonnegative int, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
