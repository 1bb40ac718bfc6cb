# Distinct permutations of a multiset by prefix shifts on a linked list: every
# step moves one node to the front, and no permutation is produced twice.


class _Node:
    __slots__ = ('value', 'nxt')

    def __init__(self, value, nxt):
        self.value = value
        self.nxt = nxt


def _walk(node):
    out = []
    while node is not None:
        out.append(node.value)
        node = node.nxt
    return tuple(out)


def multiset_permutations(items):
    """
    Yield every distinct ordering of `items` exactly once, as tuples.

    The first tuple is the non-increasing one; the order after that follows the
    prefix shifts, not the lexicographic order.
    """
    values = sorted(items)
    if len(values) < 2:
        yield tuple(values)
        return
    head = None
    for value in values:
        head = _Node(value, head)
    i = head
    for _ in range(len(values) - 2):
        i = i.nxt
    j = i.nxt
    yield _walk(head)
    while j.nxt is not None or j.value < head.value:
        s = j if j.nxt is not None and i.value >= j.nxt.value else i
        t = s.nxt
        s.nxt = t.nxt
        t.nxt = head
        if t.value < head.value:
            i = t
        j = i.nxt
        head = t
        yield _walk(head)
