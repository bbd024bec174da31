"""Magic rectangles and magic rectangle sets.

An MR(a, b) holds {1..ab} (plus an optional uniform offset) with constant
row sums rho = b(ab+1)/2 and column sums sigma = a(ab+1)/2.  An
MRS(a, b; c) is c disjoint a x b rectangles partitioning {1..abc}, all
with the same row and column sums.

Construction strategy (existence is classical; the method here is an
internal detail hard-gated by the verifiers):

* two rows at a time via "complement strips": each column of a strip is a
  pair (x, N+1-x), which fixes the column contribution; the rows are
  balanced by choosing which element of each pair goes on top (a signed
  subset-sum search over the unconsumed low values);
* odd a: one 3-row base built from a Kotzig array (three permutations of
  {0..b-1} with constant column sums) composed with a searched band
  pattern, placed on the centered value run, plus complement strips;
* odd squares use the Siamese magic-square rule directly;
* a generalized digit/band backtracking covers the few small odd shapes
  the strip decomposition cannot reach.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Optional

from .errors import InfeasibleParameters

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MagicRectangle:
    a: int
    b: int
    offset: int
    entries: Rows

    def to_json_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "offset": self.offset,
                "entries": [list(r) for r in self.entries]}

    @staticmethod
    def from_json_dict(data: dict) -> "MagicRectangle":
        return MagicRectangle(int(data["a"]), int(data["b"]), int(data["offset"]),
                              tuple(tuple(int(x) for x in r) for r in data["entries"]))


@dataclass(frozen=True)
class MagicRectangleSet:
    a: int
    b: int
    c: int
    rectangles: tuple[Rows, ...]

    def to_json_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c,
                "rectangles": [[list(r) for r in rect] for rect in self.rectangles]}

    @staticmethod
    def from_json_dict(data: dict) -> "MagicRectangleSet":
        return MagicRectangleSet(
            int(data["a"]), int(data["b"]), int(data["c"]),
            tuple(tuple(tuple(int(x) for x in r) for r in rect)
                  for rect in data["rectangles"]))


def mr_row_sum(a: int, b: int, offset: int = 0) -> int:
    return b * (a * b + 1) // 2 + b * offset


def mr_col_sum(a: int, b: int, offset: int = 0) -> int:
    return a * (a * b + 1) // 2 + a * offset


def mrs_row_sum(a: int, b: int, c: int) -> int:
    return b * (a * b * c + 1) // 2


def mrs_col_sum(a: int, b: int, c: int) -> int:
    return a * (a * b * c + 1) // 2


def mr_exists(a: int, b: int) -> bool:
    """Harmuth's criterion: a,b > 1, ab > 4, and a, b of equal parity."""
    return a > 1 and b > 1 and a * b > 4 and (a - b) % 2 == 0


def mrs_exists(a: int, b: int, c: int) -> bool:
    """Froncek's criterion (sides swapped internally so a <= b)."""
    if a < 1 or b < 1 or c < 1:
        return False
    a, b = min(a, b), max(a, b)
    if a <= 1:
        return False
    if a % 2 == 1 and b % 2 == 1 and c % 2 == 1:
        return True
    return a % 2 == 0 and b % 2 == 0 and (a, b) != (2, 2)


# ---------------------------------------------------------------------------
# verification


def verify_mr_detail(rect: MagicRectangle) -> tuple[bool, Optional[str]]:
    a, b, off = rect.a, rect.b, rect.offset
    if len(rect.entries) != a or any(len(r) != b for r in rect.entries):
        return False, "shape mismatch"
    flat = [x for row in rect.entries for x in row]
    if sorted(flat) != list(range(off + 1, off + a * b + 1)):
        return False, "entries are not {offset+1..offset+ab}"
    rho, sigma = mr_row_sum(a, b, off), mr_col_sum(a, b, off)
    for i, row in enumerate(rect.entries):
        if sum(row) != rho:
            return False, f"row {i} sums to {sum(row)}, expected {rho}"
    for j in range(b):
        s = sum(rect.entries[i][j] for i in range(a))
        if s != sigma:
            return False, f"column {j} sums to {s}, expected {sigma}"
    return True, None


def verify_mr(rect: MagicRectangle) -> bool:
    return verify_mr_detail(rect)[0]


def verify_mrs_detail(ms: MagicRectangleSet) -> tuple[bool, Optional[str]]:
    a, b, c = ms.a, ms.b, ms.c
    if len(ms.rectangles) != c:
        return False, "wrong rectangle count"
    flat = []
    for rect in ms.rectangles:
        if len(rect) != a or any(len(r) != b for r in rect):
            return False, "shape mismatch"
        flat.extend(x for row in rect for x in row)
    if sorted(flat) != list(range(1, a * b * c + 1)):
        return False, "union of entries is not {1..abc}"
    rho, sigma = mrs_row_sum(a, b, c), mrs_col_sum(a, b, c)
    for k, rect in enumerate(ms.rectangles):
        for i, row in enumerate(rect):
            if sum(row) != rho:
                return False, f"rect {k} row {i} sums to {sum(row)}, expected {rho}"
        for j in range(b):
            s = sum(rect[i][j] for i in range(a))
            if s != sigma:
                return False, f"rect {k} column {j} sums to {s}, expected {sigma}"
    return True, None


def verify_mrs(ms: MagicRectangleSet) -> bool:
    return verify_mrs_detail(ms)[0]


# ---------------------------------------------------------------------------
# Kotzig array and the 3-row base


def _kotzig3(n: int) -> tuple[list[int], list[int], list[int]]:
    """Three permutations of {0..n-1} with every column summing 3(n-1)/2."""
    assert n % 2 == 1
    m = (n - 1) // 2
    alpha = list(range(n))
    beta = [0] * n
    gamma = [0] * n
    for s in range(m + 1):
        beta[2 * s] = m - s
        gamma[2 * s] = 2 * m - s
    for s in range(m):
        beta[2 * s + 1] = 2 * m - s
        gamma[2 * s + 1] = m - s - 1
    return alpha, beta, gamma


_COLUMN_BAND_PATTERNS = tuple(permutations((0, 1, 2))) + ((1, 1, 1),)


@lru_cache(maxsize=None)
def _mr3_rows_banded(b: int) -> Rows:
    """MR(3, b) over {1..3b} for odd b >= 3, by direct band search.

    Entry = digit + b*band + 1.  Digits are the Kotzig rows; bands are
    searched column by column so that each digit value receives three
    distinct bands (making the value map bijective) while the band rows
    stay balanced.  Practical for small b; wider rectangles go through
    the triple-block assembly instead.
    """
    assert b % 2 == 1 and b >= 3
    digits = _kotzig3(b)
    # the three cells carrying digit value x, as (row, column)
    cells = {x: [] for x in range(b)}
    for r in range(3):
        for j in range(b):
            cells[digits[r][j]].append((r, j))
    # digits touching column j: their already-assigned cells must stay
    # pairwise distinct (columns are filled left to right)
    touched = [sorted({digits[r][j] for r in range(3)}) for j in range(b)]

    bands = [[-1] * b for _ in range(3)]
    row_sum = [0, 0, 0]

    def feasible(j: int) -> bool:
        rem = b - 1 - j
        if any(row_sum[r] > b or row_sum[r] + 2 * rem < b for r in range(3)):
            return False
        for x in touched[j]:
            seen = set()
            for r, c in cells[x]:
                if c > j:
                    continue
                v = bands[r][c]
                if v in seen:
                    return False
                seen.add(v)
        return True

    def dfs(j: int) -> bool:
        if j == b:
            return all(row_sum[r] == b for r in range(3))
        for pat in _COLUMN_BAND_PATTERNS:
            for r in range(3):
                bands[r][j] = pat[r]
                row_sum[r] += pat[r]
            if feasible(j) and dfs(j + 1):
                return True
            for r in range(3):
                row_sum[r] -= pat[r]
                bands[r][j] = -1
        return False

    if not dfs(0):
        raise InfeasibleParameters(f"no band pattern found for MR(3, {b})")
    return tuple(tuple(digits[r][j] + b * bands[r][j] + 1 for j in range(b))
                 for r in range(3))


_WIDTH_MENU = {
    15: [[15], [5, 5, 5]],
    17: [[17], [7, 5, 5]],
    19: [[19], [9, 5, 5], [7, 7, 5]],
    21: [[21], [9, 7, 5], [7, 7, 7]],
    23: [[9, 7, 7], [13, 5, 5], [23]],
    25: [[11, 7, 7], [9, 9, 7], [25]],
    27: [[9, 9, 9], [13, 9, 5], [27]],
    29: [[9, 9, 11], [11, 11, 7], [13, 9, 7]],
    31: [[9, 9, 13], [9, 11, 11], [13, 11, 7]],
    33: [[11, 11, 11], [9, 11, 13], [13, 13, 7]],
}


def _kotzig(h: int, n: int) -> list[list[int]]:
    """h permutations of {0..n-1} with constant column sums h(n-1)/2
    (h, n odd): the magic triple plus reflected shift pairs."""
    rows = [list(r) for r in _kotzig3(n)]
    for p in range((h - 3) // 2):
        shift = p + 1
        row = [(j + shift) % n for j in range(n)]
        rows.append(row)
        rows.append([n - 1 - x for x in row])
    return rows


def _sigma_tuples(h: int, n: int) -> list[tuple[int, ...]]:
    """{1..hn} as n column h-tuples, each summing h(hn+1)/2 (h, n odd)."""
    K = _kotzig(h, n)
    return [tuple(K[r][j] + r * n + 1 for r in range(h)) for j in range(n)]


def _arrange_columns(cols: list[tuple[int, ...]], target: int, h: int,
                     node_cap: int = 400_000) -> Optional[Rows]:
    """Arrange each column tuple vertically so all h rows sum to target.

    Cell-wise DFS; every partial row is pruned by exact single-row
    reachability over the remaining columns.
    """
    b = len(cols)
    reach = [0] * (b + 1)
    reach[b] = 1
    for j in range(b - 1, -1, -1):
        r = reach[j + 1]
        acc = 0
        for v in cols[j]:
            acc |= r << v
        reach[j] = acc
    if not (reach[0] >> target) & 1:
        return None
    rows = [[0] * b for _ in range(h)]
    sums = [0] * h
    nodes = 0

    def dfs(j: int, r: int, used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            return False
        if r == h:
            return dfs(j + 1, 0, 0) if j + 1 < b else all(s == target for s in sums)
        nxt = reach[j + 1]
        for t in range(h):
            if used & (1 << t):
                continue
            v = cols[j][t]
            need = target - sums[r] - v
            if need < 0 or not (nxt >> need) & 1:
                continue
            rows[r][j] = v
            sums[r] += v
            if dfs(j, r + 1, used | (1 << t)):
                return True
            sums[r] -= v
        return False

    if b == 0:
        return tuple(() for _ in range(h))
    if not dfs(0, 0, 0):
        return None
    return tuple(tuple(row) for row in rows)


def _odd_block_widths(b: int) -> list[list[int]]:
    """Candidate partitions of an odd width b >= 3 into odd blocks.

    Blocks of width 9-13 leave the row-balancing search the most slack;
    width-3 blocks are nearly rigid and appear only where forced.
    """
    if b in (3, 5, 7):
        return [[b]]
    if b == 9:
        return [[9], [3, 3, 3]]
    if b == 11:
        return [[11], [5, 3, 3]]
    if b == 13:
        return [[13], [7, 3, 3], [5, 5, 3]]
    if b in _WIDTH_MENU:
        return _WIDTH_MENU[b]
    # wider shapes: mostly 11s with a 9/13/7 fixup
    for tail in ([], [9], [13], [9, 9], [7], [9, 13], [13, 13], [7, 9]):
        rest = b - sum(tail)
        if rest >= 0 and rest % 11 == 0:
            return [[11] * (rest // 11) + tail]
    return [[b]]


def _sigma_triples(n: int) -> list[tuple[int, int, int]]:
    """{1..3n} as n triples, each summing 3(3n+1)/2 (n odd)."""
    alpha, beta, gamma = _kotzig3(n)
    return [(alpha[j] + 1, beta[j] + n + 1, gamma[j] + 2 * n + 1) for j in range(n)]


def _deal_blocks(items: list, widths: list[int], strategy: int) -> Optional[list[list]]:
    """Split ``items`` into consecutive-role blocks of the given widths."""
    total = sum(widths)
    if total != len(items):
        return None
    if strategy == 0:  # round-robin deal
        blocks = [[] for _ in widths]
        order = sorted(range(len(widths)), key=lambda i: -widths[i])
        pos = 0
        for j, it in enumerate(items):
            # fill cyclically, skipping full blocks
            for _ in range(len(widths)):
                i = order[pos % len(order)]
                pos += 1
                if len(blocks[i]) < widths[i]:
                    blocks[i].append(it)
                    break
        return blocks
    if strategy == 1:  # consecutive runs
        blocks, at = [], 0
        for w in widths:
            blocks.append(items[at:at + w])
            at += w
        return blocks
    if strategy == 2:  # symmetric: pair item j with item n-1-j
        idx = []
        lo, hi = 0, len(items) - 1
        while lo <= hi:
            idx.append(lo)
            if hi != lo:
                idx.append(hi)
            lo += 1
            hi -= 1
        blocks, at = [], 0
        for w in widths:
            blocks.append([items[i] for i in sorted(idx[at:at + w])])
            at += w
        return blocks
    return None


def _spread_order(items: list) -> list:
    out = []
    lo, hi = 0, len(items) - 1
    while lo <= hi:
        out.append(items[lo])
        if hi != lo:
            out.append(items[hi])
        lo += 1
        hi -= 1
    return out


def _blocks_from_order(order: list, widths: list[int], arrange) -> Optional[list[Rows]]:
    """Split ``order`` into blocks of the given widths and arrange each;
    failed blocks are repaired by swapping columns with other blocks
    (donor blocks must re-arrange after the swap)."""
    blocks: list[list] = []
    at = 0
    for w in widths:
        blocks.append(list(order[at:at + w]))
        at += w
    rows: list[Optional[Rows]] = [arrange(blk) for blk in blocks]
    for t in range(len(blocks)):
        if rows[t] is not None:
            continue
        fixed = False
        for e in range(len(blocks)):
            if e == t:
                continue
            for i in range(widths[t]):
                for j in range(widths[e]):
                    blocks[t][i], blocks[e][j] = blocks[e][j], blocks[t][i]
                    got_t = arrange(blocks[t])
                    if got_t is not None:
                        got_e = arrange(blocks[e])
                        if got_e is not None:
                            rows[t], rows[e] = got_t, got_e
                            fixed = True
                            break
                    blocks[t][i], blocks[e][j] = blocks[e][j], blocks[t][i]
                if fixed:
                    break
            if fixed:
                break
        if not fixed:
            return None
    return [r for r in rows if r is not None]


def _blocks_backtrack(items: list, widths: list[int], arrange,
                      call_cap: int = 150_000) -> Optional[list[Rows]]:
    """Partition ``items`` into arrangeable blocks by anchored DFS.

    Each block must contain the first still-unused column; partner sets are
    enumerated depth-first with an arrangement test per candidate, and the
    search backtracks across blocks, which rescues the strand-prone endgame.
    """
    from itertools import combinations

    spread = _spread_order(items)
    calls = 0
    out: list[Rows] = []

    def dfs(unused: list, depth: int) -> bool:
        nonlocal calls
        if depth == len(widths):
            return True
        w = widths[depth]
        anchor, rest = unused[0], unused[1:]
        for partners in combinations(range(len(rest)), w - 1):
            calls += 1
            if calls > call_cap:
                return False
            block = [anchor] + [rest[i] for i in partners]
            rows = arrange(block)
            if rows is None:
                continue
            taken = set(partners)
            out.append(rows)
            if dfs([rest[i] for i in range(len(rest)) if i not in taken], depth + 1):
                return True
            out.pop()
        return False

    if dfs(spread, 0):
        return out
    return None


def _blocks_with_repair(items: list, widths: list[int], arrange,
                        shuffles: int = 25) -> Optional[list[Rows]]:
    """Try several deterministic column orders (spread first, then seeded
    shuffles) until the block builder succeeds; fall back to the anchored
    backtracking partitioner."""
    import random

    got = _blocks_from_order(_spread_order(items), widths, arrange)
    if got is not None:
        return got
    rng = random.Random(0x5EED ^ (len(items) << 8) ^ len(widths))
    shuffled = list(items)
    for _ in range(shuffles):
        rng.shuffle(shuffled)
        got = _blocks_from_order(shuffled, widths, arrange)
        if got is not None:
            return got
    return _blocks_backtrack(items, widths, arrange)


def _rows_from_triples(n: int, widths: list[int], row_unit: int) -> Optional[list[Rows]]:
    """Arrange the sigma-triples of {1..3n} into blocks of given widths.

    Each width-w block is a 3 x w array whose rows all sum to w*row_unit
    (row_unit = (3n+1)/2, the common column sum divided by 3).  Returns
    the arranged blocks in order, or None.
    """
    triples = _sigma_triples(n)

    def arrange(block: list) -> Optional[Rows]:
        return _arrange_triples(block, len(block) * row_unit, node_cap=120_000)

    got = _blocks_with_repair(triples, widths, arrange)
    if got is not None:
        return got
    for strategy in (0, 1, 2):
        blocks = _deal_blocks(triples, widths, strategy)
        if blocks is None:
            continue
        arranged = []
        for block in blocks:
            rows = arrange(block)
            if rows is None:
                break
            arranged.append(rows)
        if len(arranged) == len(widths):
            return arranged
    return None


def _hconcat(blocks: list[Rows]) -> Rows:
    rows = len(blocks[0])
    return tuple(tuple(x for blk in blocks for x in blk[r]) for r in range(rows))


@lru_cache(maxsize=None)
def _mr3_rows(b: int) -> Rows:
    """MR(3, b) over {1..3b} for odd b >= 3."""
    assert b % 2 == 1 and b >= 3
    if b <= 13:
        return _mr3_rows_banded(b)
    for widths in _odd_block_widths(b):
        arranged = _rows_from_triples(b, widths, (3 * b + 1) // 2)
        if arranged is not None:
            return _hconcat(arranged)
    return _mr3_rows_banded(b)


def _siamese_square(n: int) -> Rows:
    """Odd-order magic square over {1..n^2} by the Siamese rule."""
    assert n % 2 == 1
    grid = [[0] * n for _ in range(n)]
    i, j = 0, n // 2
    for k in range(1, n * n + 1):
        grid[i][j] = k
        ni, nj = (i - 1) % n, (j + 1) % n
        if grid[ni][nj]:
            ni, nj = (i + 1) % n, j
        i, j = ni, nj
    return tuple(tuple(r) for r in grid)


# ---------------------------------------------------------------------------
# complement strips


def _signed_subset(avail: list[int], n_plus: int, n_minus: int, target: int,
                   node_cap: int = 300_000) -> Optional[tuple[list[int], list[int]]]:
    """Disjoint P (size n_plus) and M (size n_minus) from avail with
    sum(P) - sum(M) == target, or None.

    Backtracking over the values in descending order with prefix/suffix
    bound pruning; deterministic.
    """
    vals = sorted(avail, reverse=True)
    n = len(vals)
    if n_plus + n_minus > n:
        return None
    if n_plus + n_minus == n and (sum(vals) - target) % 2 != 0:
        return None  # whole-set split: parity of sum(P)-sum(M) is forced
    asc = vals[::-1]
    pre_desc = [0]
    for v in vals:
        pre_desc.append(pre_desc[-1] + v)
    pre_asc = [0]
    for v in asc:
        pre_asc.append(pre_asc[-1] + v)

    nodes = 0

    # vals[i:] holds the n-i smallest values, so the m smallest remaining
    # are asc[:m]; no overlap with vals[i:i+p] once p+m <= n-i.
    def bound_hi(i: int, p: int, m: int) -> int:
        return (pre_desc[i + p] - pre_desc[i]) - pre_asc[m]

    def bound_lo(i: int, p: int, m: int) -> int:
        return pre_asc[p] - (pre_desc[i + m] - pre_desc[i])

    P: list[int] = []
    M: list[int] = []

    def dfs(i: int, p: int, m: int, diff: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            return False
        if p == 0 and m == 0:
            return diff == target
        if i >= n or n - i < p + m:
            return False
        if not (bound_lo(i, p, m) + diff <= target <= bound_hi(i, p, m) + diff):
            return False
        v = vals[i]

        def take_p() -> bool:
            if not p:
                return False
            P.append(v)
            if dfs(i + 1, p - 1, m, diff + v):
                return True
            P.pop()
            return False

        def take_m() -> bool:
            if not m:
                return False
            M.append(v)
            if dfs(i + 1, p, m - 1, diff - v):
                return True
            M.pop()
            return False

        def skip() -> bool:
            return dfs(i + 1, p, m, diff)

        # steer toward the target so the first descent lands near it
        order = (take_p, take_m, skip) if diff < target else (take_m, take_p, skip)
        return any(step() for step in order)

    if dfs(0, n_plus, n_minus, 0):
        return P[:], M[:]
    return None


def _signed_subset_solutions(avail: list[int], n_plus: int, n_minus: int,
                             target: int, limit: int,
                             node_cap: int = 150_000) -> list[tuple[list[int], list[int]]]:
    """Up to ``limit`` distinct (P, M) solutions of the signed subset-sum."""
    vals = sorted(avail, reverse=True)
    n = len(vals)
    if n_plus + n_minus > n:
        return []
    if n_plus + n_minus == n and (sum(vals) - target) % 2 != 0:
        return []
    asc = vals[::-1]
    pre_desc = [0]
    for v in vals:
        pre_desc.append(pre_desc[-1] + v)
    pre_asc = [0]
    for v in asc:
        pre_asc.append(pre_asc[-1] + v)
    sols: list[tuple[list[int], list[int]]] = []
    nodes = 0
    P: list[int] = []
    M: list[int] = []

    def dfs(i: int, p: int, m: int, diff: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            return True  # stop
        if p == 0 and m == 0:
            if diff == target:
                sols.append((P[:], M[:]))
                return len(sols) >= limit
            return False
        if i >= n or n - i < p + m:
            return False
        hi = (pre_desc[i + p] - pre_desc[i]) - pre_asc[m]
        lo = pre_asc[p] - (pre_desc[i + m] - pre_desc[i])
        if not (lo + diff <= target <= hi + diff):
            return False
        v = vals[i]

        def take_p() -> bool:
            if not p:
                return False
            P.append(v)
            stop = dfs(i + 1, p - 1, m, diff + v)
            P.pop()
            return stop

        def take_m() -> bool:
            if not m:
                return False
            M.append(v)
            stop = dfs(i + 1, p, m - 1, diff - v)
            M.pop()
            return stop

        def skip() -> bool:
            return dfs(i + 1, p, m, diff)

        order = (take_p, take_m, skip) if diff < target else (take_m, take_p, skip)
        return any(step() for step in order)

    dfs(0, n_plus, n_minus, 0)
    return sols


def _strip_stack_backtrack(g: int, b: int, total: int, rho: int,
                           avail: list[int],
                           budget: list[int]) -> Optional[list[tuple[int, ...]]]:
    """g strips over the given lows, chosen with backtracking so no strip
    strands the remainder."""
    if g == 0:
        return []
    per_level = 24 if g > 1 else 1
    for k in _strip_k_orders(b):
        if budget[0] <= 0:
            return None
        sols = _signed_subset_solutions(avail, b - k, k, rho - k * (total + 1),
                                        limit=per_level)
        for R, F in sols:
            budget[0] -= 1
            if budget[0] <= 0:
                return None
            consumed = set(R) | set(F)
            rest = [x for x in avail if x not in consumed]
            sub = _strip_stack_backtrack(g - 1, b, total, rho, rest, budget)
            if sub is not None:
                top = sorted(R) + [total + 1 - x for x in sorted(F)]
                bottom = [total + 1 - x for x in sorted(R)] + sorted(F)
                return [tuple(top), tuple(bottom)] + sub
    return None


def _strip_k_orders(b: int) -> list[int]:
    mid = b // 2
    order = []
    for d in range(b + 1):
        for k in (mid + d, mid - d):
            if 0 <= k <= b and k not in order:
                order.append(k)
    return order


def _build_strip(pool: list[int], b: int, total: int, rho: int) -> Optional[tuple[list[int], list[int]]]:
    """Two balanced rows over b complement pairs (x, total+1-x), lows drawn
    from ``pool`` (which is fully consumed)."""
    if len(pool) != b:
        return None
    for k in _strip_k_orders(b):
        # tops: lows in R unflipped, highs of F flipped up
        # sum(R) - sum(F) must equal rho - k*(total+1)
        res = _signed_subset(pool, b - k, k, rho - k * (total + 1))
        if res is None:
            continue
        R, F = res
        top = sorted(R) + [total + 1 - x for x in sorted(F)]
        bottom = [total + 1 - x for x in sorted(R)] + sorted(F)
        return top, bottom
    return None


def _spread_pools(first: int, last: int, n_pools: int,
                  parities: Optional[list[Optional[int]]] = None) -> Optional[list[list[int]]]:
    """Deal [first, last] into equal pools, each spanning the whole range,
    optionally repairing chosen pools' sums to required parities."""
    n = last - first + 1
    order = []
    lo, hi = first, last
    while lo <= hi:
        order.append(lo)
        if hi != lo:
            order.append(hi)
        lo += 1
        hi -= 1
    pools: list[list[int]] = [[] for _ in range(n_pools)]
    for i, v in enumerate(order):
        rnd, off = divmod(i, n_pools)
        pools[(off + rnd) % n_pools].append(v)
    if parities is not None:
        for k in range(n_pools):
            want = parities[k]
            if want is None or sum(pools[k]) % 2 == want:
                continue
            fixed = False
            for k2 in range(n_pools):
                if k2 == k or (parities[k2] is not None and k2 < k):
                    continue
                for x in pools[k]:
                    for y in pools[k2]:
                        if (x - y) % 2 == 1:
                            pools[k].remove(x)
                            pools[k2].remove(y)
                            pools[k].append(y)
                            pools[k2].append(x)
                            fixed = True
                            break
                    if fixed:
                        break
                if fixed:
                    break
            if not fixed or sum(pools[k]) % 2 != want:
                return None
    for p in pools:
        p.sort()
    return pools


def _quad_block(lows: list[int], total: int, rho: int,
                node_cap: int = 500_000) -> Optional[list[tuple[int, ...]]]:
    """Four balanced rows over len(lows)/2 columns, each column holding two
    complement pairs {x, y, total+1-x, total+1-y}.

    Unlike a 2-row strip, the mixed quads carry both parities into every
    row, so no parity law blocks the row balance.
    """
    lows = sorted(lows)
    b = len(lows) // 2
    quads = []
    for j in range(b):
        x, y = lows[j], lows[2 * b - 1 - j]
        quads.append((x, y, total + 1 - x, total + 1 - y))
    reach = [0] * (b + 1)
    reach[b] = 1
    for j in range(b - 1, -1, -1):
        r = reach[j + 1]
        reach[j] = ((r << quads[j][0]) | (r << quads[j][1])
                    | (r << quads[j][2]) | (r << quads[j][3]))
    if not (reach[0] >> rho) & 1:
        return None
    rows = [[0] * b for _ in range(4)]
    sums = [0] * 4
    perms24 = tuple(permutations(range(4)))
    nodes = 0

    def dfs(j: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            return False
        if j == b:
            return all(s == rho for s in sums)
        nxt = reach[j + 1]
        for perm in perms24:
            ok = True
            for r in range(4):
                need = rho - sums[r] - quads[j][perm[r]]
                if need < 0 or not (nxt >> need) & 1:
                    ok = False
                    break
            if not ok:
                continue
            for r in range(4):
                rows[r][j] = quads[j][perm[r]]
                sums[r] += quads[j][perm[r]]
            if dfs(j + 1):
                return True
            for r in range(4):
                sums[r] -= quads[j][perm[r]]
        return False

    if not dfs(0):
        return None
    return [tuple(r) for r in rows]


def _index_mirror_pools(avail: list[int], n_pools: int) -> list[list[int]]:
    """Deal a sorted value list into pools over (i, n-1-i) pairs with a
    rotating offset, so each pool mixes small/large values and residues."""
    n = len(avail)
    pairs = [(avail[t], avail[n - 1 - t]) for t in range(n // 2)]
    pools: list[list[int]] = [[] for _ in range(n_pools)]
    for j, (x, y) in enumerate(pairs):
        rnd, off = divmod(j, n_pools)
        pools[(off + rnd) % n_pools].extend((x, y))
    for p in pools:
        p.sort()
    return pools


def _band_stack(n_units: int, b: int, total: int, rho: int,
                low_first: int, low_last: int,
                units_per_group: int = 1) -> Optional[list[tuple[int, ...]]]:
    """Rows of stacked complement bands whose lows cover [low_first, low_last].

    Each group of ``units_per_group`` two-row units forms one logical stack
    (one rectangle of an MRS).  Units are pairwise merged into 4-row quad
    blocks, which dodge the parity law binding a 2-row strip's pool sum;
    at most one strip per group remains.  Strips pick their own low pools
    by search, then the forgiving quad blocks share out the rest.
    """
    if n_units == 0:
        return []
    groups = n_units // units_per_group
    quads_per_group = units_per_group // 2
    has_strip = units_per_group % 2 == 1
    strip_parity = rho % 2 if (total + 1) % 2 == 0 else None

    if units_per_group == 1:
        # stacks of bare 2-row strips: swap-repaired pools, then backtracking
        def strip_arrange(pool: list) -> Optional[Rows]:
            got = _build_strip(pool, b, total, rho)
            return None if got is None else (tuple(got[0]), tuple(got[1]))

        lows = list(range(low_first, low_last + 1))
        blocks = _blocks_with_repair(lows, [b] * groups, strip_arrange,
                                     shuffles=10)
        if blocks is not None:
            return [row for block in blocks for row in block]
        return _strip_stack_backtrack(groups, b, total, rho, lows,
                                      budget=[4000 + 3000 * groups])

    def finish(strip_rows, quad_blocks):
        rows: list[tuple[int, ...]] = []
        for g in range(groups):
            for q in range(quads_per_group):
                rows.extend(quad_blocks[g * quads_per_group + q])
            if has_strip:
                rows.extend(strip_rows[g])
        return rows

    def strip_from_pool(pool):
        got = _build_strip(pool, b, total, rho)
        if got is None:
            return None
        return [tuple(got[0]), tuple(got[1])]

    # attempt 1: spread pools for every unit, strips parity-repaired
    parities: list[Optional[int]] = []
    for _ in range(groups):
        parities.extend([None] * (2 * quads_per_group))
        if has_strip:
            parities.append(strip_parity)
    pools = _spread_pools(low_first, low_last, n_units, parities)
    if pools is not None:
        strip_rows, quad_blocks, ok = [], [], True
        at = 0
        for _ in range(groups):
            for _ in range(quads_per_group):
                block = _quad_block(pools[at] + pools[at + 1], total, rho,
                                    node_cap=150_000)
                at += 2
                if block is None:
                    ok = False
                    break
                quad_blocks.append(block)
            if ok and has_strip:
                got = strip_from_pool(pools[at])
                at += 1
                if got is None:
                    ok = False
                else:
                    strip_rows.append(got)
            if not ok:
                break
        if ok:
            return finish(strip_rows, quad_blocks)

    # attempt 2: strips pick their own pools with backtracking; the quad
    # partition of the leftovers is the leaf test
    n_quads = groups * quads_per_group

    def quads_from(avail: list[int]) -> Optional[list]:
        if n_quads == 0:
            return []
        def arrange(pool: list) -> Optional[Rows]:
            return _quad_block(pool, total, rho, node_cap=200_000)
        dealt = _index_mirror_pools(sorted(avail), n_quads)
        blocks = []
        for pool in dealt:
            block = arrange(pool)
            if block is None:
                blocks = None
                break
            blocks.append(block)
        if blocks is not None:
            return blocks
        return _blocks_with_repair(sorted(avail), [2 * b] * n_quads, arrange,
                                   shuffles=8)

    n_strips = groups if has_strip else 0
    budget = [2000 + 1500 * n_strips]

    def rec(g: int, avail: list[int]) -> Optional[tuple[list, list]]:
        if g == 0:
            quads = quads_from(avail)
            return ([], quads) if quads is not None else None
        for k in _strip_k_orders(b):
            if budget[0] <= 0:
                return None
            sols = _signed_subset_solutions(avail, b - k, k,
                                            rho - k * (total + 1),
                                            limit=16 if g > 1 or n_quads else 1)
            for R, F in sols:
                budget[0] -= 1
                if budget[0] <= 0:
                    return None
                consumed = set(R) | set(F)
                rest = [x for x in avail if x not in consumed]
                sub = rec(g - 1, rest)
                if sub is not None:
                    top = sorted(R) + [total + 1 - x for x in sorted(F)]
                    bottom = [total + 1 - x for x in sorted(R)] + sorted(F)
                    return ([[tuple(top), tuple(bottom)]] + sub[0], sub[1])
        return None

    got = rec(n_strips, list(range(low_first, low_last + 1)))
    if got is None:
        return None
    return finish(got[0], got[1])


# ---------------------------------------------------------------------------
# generalized digit/band fallback for odd shapes


def _general_odd_rows(a: int, b: int, node_cap: int = 2_000_000) -> Optional[Rows]:
    """Backtracking digit/band construction for odd a, b (small shapes).

    Digits: a Kotzig array K(a, b); bands: per column a permutation of
    {0..a-1} with balanced rows and distinct bands per digit value.
    """
    assert a % 2 == 1 and b % 2 == 1
    alpha, beta, gamma = _kotzig3(b)
    digit_rows = [alpha, beta, gamma]
    for p in range((a - 3) // 2):
        shift = p + 1
        row = [(j + shift) % b for j in range(b)]
        digit_rows.append(row)
        digit_rows.append([b - 1 - x for x in row])
    cells = {x: [] for x in range(b)}
    for r in range(a):
        for j in range(b):
            cells[digit_rows[r][j]].append((r, j))

    row_target = b * (a - 1) // 2
    bands = [[-1] * b for _ in range(a)]
    row_sum = [0] * a
    col_used = [set() for _ in range(b)]
    nodes = 0

    def digit_ok(x: int) -> bool:
        seen = set()
        for rr, cc in cells[x]:
            v = bands[rr][cc]
            if v == -1:
                continue
            if v in seen:
                return False
            seen.add(v)
        return True

    def dfs(pos: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            return False
        if pos == a * b:
            return True
        j, r = divmod(pos, a)
        cols_left_for_row = b - j - (1 if r > 0 else 0)
        x = digit_rows[r][j]
        for v in range(a):
            if v in col_used[j]:
                continue
            s = row_sum[r] + v
            if s > row_target or s + (a - 1) * cols_left_for_row < row_target:
                continue
            bands[r][j] = v
            row_sum[r] = s
            col_used[j].add(v)
            if digit_ok(x) and dfs(pos + 1):
                return True
            col_used[j].remove(v)
            row_sum[r] -= v
            bands[r][j] = -1
        return False

    if not dfs(0):
        return None
    return tuple(tuple(digit_rows[r][j] + b * bands[r][j] + 1 for j in range(b))
                 for r in range(a))


# ---------------------------------------------------------------------------
# value-level brute force (tiny shapes; also the test oracle for existence)


def find_mr_by_backtracking(a: int, b: int, offset: int = 0,
                            node_cap: int = 4_000_000) -> Optional[Rows]:
    """Exhaustive search for an MR(a, b); None when none exists (or the
    node cap is hit -- callers keep shapes tiny)."""
    n = a * b
    if (b * (n + 1)) % 2 or (a * (n + 1)) % 2:
        return None
    rho, sigma = b * (n + 1) // 2, a * (n + 1) // 2
    grid = [[0] * b for _ in range(a)]
    used = [False] * (n + 1)
    row_sum = [0] * a
    col_sum = [0] * b
    nodes = 0

    def dfs(pos: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            return False
        if pos == n:
            return True
        i, j = divmod(pos, b)
        for v in range(1, n + 1):
            if used[v]:
                continue
            rs, cs = row_sum[i] + v, col_sum[j] + v
            if rs > rho or cs > sigma:
                continue
            if j == b - 1 and rs != rho:
                continue
            if i == a - 1 and cs != sigma:
                continue
            used[v] = True
            grid[i][j] = v
            row_sum[i], col_sum[j] = rs, cs
            if dfs(pos + 1):
                return True
            used[v] = False
            row_sum[i], col_sum[j] = rs - v, cs - v
        return False

    if not dfs(0):
        return None
    return tuple(tuple(x + offset for x in row) for row in grid)


def find_mrs_by_backtracking(a: int, b: int, c: int,
                             node_cap: int = 6_000_000) -> Optional[list[Rows]]:
    """Exhaustive search for an MRS(a, b; c); None when none exists within
    the cap (callers keep a*b*c tiny)."""
    n = a * b * c
    if (b * (n + 1)) % 2 or (a * (n + 1)) % 2:
        return None
    rho, sigma = b * (n + 1) // 2, a * (n + 1) // 2
    cells = [(k, i, j) for k in range(c) for i in range(a) for j in range(b)]
    grids = [[[0] * b for _ in range(a)] for _ in range(c)]
    used = [False] * (n + 1)
    row_sum = [[0] * a for _ in range(c)]
    col_sum = [[0] * b for _ in range(c)]
    nodes = 0

    def dfs(pos: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            return False
        if pos == len(cells):
            return True
        k, i, j = cells[pos]
        for v in range(1, n + 1):
            if used[v]:
                continue
            rs, cs = row_sum[k][i] + v, col_sum[k][j] + v
            if rs > rho or cs > sigma:
                continue
            if j == b - 1 and rs != rho:
                continue
            if i == a - 1 and cs != sigma:
                continue
            used[v] = True
            grids[k][i][j] = v
            row_sum[k][i], col_sum[k][j] = rs, cs
            if dfs(pos + 1):
                return True
            used[v] = False
            row_sum[k][i], col_sum[k][j] = rs - v, cs - v
        return False

    if not dfs(0):
        return None
    return [tuple(tuple(r) for r in grid) for grid in grids]


# ---------------------------------------------------------------------------
# assembly


@lru_cache(maxsize=None)
def _mr_rows(a: int, b: int) -> Rows:
    """Rows of an MR(a, b) over {1..ab}; assumes mr_exists(a, b)."""
    if a > b:
        rows = _mr_rows(b, a)
        return tuple(tuple(rows[i][j] for i in range(b)) for j in range(a))
    if a == b and a % 2 == 1:
        return _siamese_square(a)
    if a == 3:
        return _mr3_rows(b)
    total = a * b
    rho = mr_row_sum(a, b)
    if a % 2 == 0:
        n_units, center = a // 2, None
    else:
        n_units = (a - 3) // 2
        delta = b * (a - 3) // 2
        center = tuple(tuple(x + delta for x in row) for row in _mr3_rows(b))
    bands = _band_stack(n_units, b, total, rho, 1, n_units * b,
                        units_per_group=n_units)
    if bands is not None:
        rows = list(bands)
        if center is not None:
            rows.extend(center)
        return tuple(rows)
    general = _general_odd_rows(a, b) if a % 2 == 1 else None
    if general is not None:
        return general
    brute = find_mr_by_backtracking(a, b) if a * b <= 30 else None
    if brute is not None:
        return brute
    raise InfeasibleParameters(f"failed to assemble MR({a}, {b})")


def construct_mr(a: int, b: int, offset: int = 0) -> MagicRectangle:
    """Deterministic MR(a, b) shifted by ``offset``; verify-gated."""
    if offset < 0:
        raise InfeasibleParameters("offset must be non-negative")
    if not mr_exists(a, b):
        raise InfeasibleParameters(
            f"MR({a}, {b}) does not exist (need a,b > 1, ab > 4, equal parity)")
    rows = _mr_rows(a, b)
    rect = MagicRectangle(a, b, offset,
                          tuple(tuple(x + offset for x in row) for row in rows))
    ok, msg = verify_mr_detail(rect)
    if not ok:
        raise InfeasibleParameters(f"internal error: MR({a}, {b}) failed gate: {msg}")
    return rect


def _arrange_triples(triples: list[tuple[int, int, int]], target: int,
                     node_cap: int = 2_000_000) -> Optional[Rows]:
    """Stack each triple vertically (any of the 6 orders per column) so all
    three rows sum to ``target``.

    Pruned by exact single-row reachability: ``reach[j]`` holds (as a
    bitmask) every sum a single row can still collect from columns j..end.
    """
    b = len(triples)
    reach = [0] * (b + 1)
    reach[b] = 1
    for j in range(b - 1, -1, -1):
        r = reach[j + 1]
        reach[j] = (r << triples[j][0]) | (r << triples[j][1]) | (r << triples[j][2])
    if not (reach[0] >> target) & 1:
        return None
    rows = [[0] * b for _ in range(3)]
    sums = [0, 0, 0]
    perms6 = tuple(permutations(range(3)))
    nodes = 0

    def dfs(j: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            return False
        if j == b:
            return sums[0] == target and sums[1] == target and sums[2] == target
        nxt = reach[j + 1]
        for perm in perms6:
            ok = True
            for r in range(3):
                need = target - sums[r] - triples[j][perm[r]]
                if need < 0 or not (nxt >> need) & 1:
                    ok = False
                    break
            if not ok:
                continue
            for r in range(3):
                rows[r][j] = triples[j][perm[r]]
                sums[r] += triples[j][perm[r]]
            if dfs(j + 1):
                return True
            for r in range(3):
                sums[r] -= triples[j][perm[r]]
        return False

    if not dfs(0):
        return None
    return tuple(tuple(r) for r in rows)


@lru_cache(maxsize=None)
def _mrs3_rects(b: int, c: int) -> tuple[Rows, ...]:
    """MRS(3, b; c) for odd b, c: equal-sum triples from a Kotzig array over
    bc columns, dealt into small blocks and rebalanced block by block."""
    if c == 1:
        return (_mr_rows(3, b),)
    n = b * c
    for widths in _odd_block_widths(b):
        arranged = _rows_from_triples(n, widths * c, (3 * n + 1) // 2)
        if arranged is not None:
            per_rect = len(widths)
            return tuple(_hconcat(arranged[k * per_rect:(k + 1) * per_rect])
                         for k in range(c))
    raise InfeasibleParameters(f"failed to assemble MRS(3, {b}; {c})")


def _mrs_tuple_rects(a: int, b: int, c: int) -> Optional[tuple[Rows, ...]]:
    """Rectangles of an odd MRS(a, b; c) assembled directly from Kotzig
    column a-tuples (used where the strip decomposition has no solution)."""
    n = b * c
    tuples = _sigma_tuples(a, n)
    target = mrs_row_sum(a, b, c)

    def arrange(block: list) -> Optional[Rows]:
        return _arrange_columns(block, target, a, node_cap=300_000)

    got = _blocks_with_repair(tuples, [b] * c, arrange, shuffles=10)
    if got is None:
        return None
    return tuple(got)


@lru_cache(maxsize=None)
def _mrs_rects(a: int, b: int, c: int) -> tuple[Rows, ...]:
    """Rectangles of an MRS(a, b; c) with a <= b; assumes existence."""
    if c == 1:
        return (_mr_rows(a, b),)
    total = a * b * c
    rho = mrs_row_sum(a, b, c)
    if a % 2 == 0:
        n_units, centers = a // 2, None
    else:
        if a == 3:
            return _mrs3_rects(b, c)
        n_units = (a - 3) // 2
        delta = b * c * (a - 3) // 2
        centers = tuple(
            tuple(tuple(x + delta for x in row) for row in rect)
            for rect in _mrs3_rects(b, c))
    bands = _band_stack(n_units * c, b, total, rho, 1, n_units * c * b,
                        units_per_group=max(n_units, 1))
    if bands is not None:
        rects = []
        for k in range(c):
            rows = list(bands[2 * n_units * k:2 * n_units * (k + 1)])
            if centers is not None:
                rows.extend(centers[k])
            rects.append(tuple(rows))
        return tuple(rects)
    if a % 2 == 1:
        rects = _mrs_tuple_rects(a, b, c)
        if rects is not None:
            return rects
    raise InfeasibleParameters(
        f"failed to assemble strips for MRS({a}, {b}; {c})")


def construct_mrs(a: int, b: int, c: int) -> MagicRectangleSet:
    """Deterministic MRS(a, b; c); transposes internally when a > b."""
    if not mrs_exists(a, b, c):
        raise InfeasibleParameters(f"MRS({a}, {b}; {c}) does not exist")
    transposed = a > b
    lo, hi = min(a, b), max(a, b)
    rects = _mrs_rects(lo, hi, c)
    if transposed:
        rects = tuple(
            tuple(tuple(rect[i][j] for i in range(lo)) for j in range(hi))
            for rect in rects)
    ms = MagicRectangleSet(a, b, c, rects)
    ok, msg = verify_mrs_detail(ms)
    if not ok:
        raise InfeasibleParameters(
            f"internal error: MRS({a}, {b}; {c}) failed gate: {msg}")
    return ms
