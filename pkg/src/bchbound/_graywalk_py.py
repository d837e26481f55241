"""Pure-Python twin of the compiled Gray-walk kernel (any n, big ints)."""


def gray_min_weight(rows, limit, stop_at):
    """Same contract as the compiled kernel; see _graywalk.pyx."""
    acc = 0
    best = 1 << 30
    best_word = 0
    cnt = 0
    while cnt < limit:
        cnt += 1
        acc ^= rows[(cnt & -cnt).bit_length() - 1]
        w = acc.bit_count()
        if w < best:
            best = w
            best_word = acc
            if stop_at and w <= stop_at:
                break
    return best, best_word, cnt
