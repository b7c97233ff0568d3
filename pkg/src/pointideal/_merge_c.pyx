# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel for locating into and merging sorted tuple lists.

Behavioural twin of ``_merge_py``: same contract, same counter semantics.
Tuple entries stay Python objects because order-vector entries are
arbitrary-precision integers; the win comes from typed loop indices and
avoiding interpreter dispatch in the inner walk.
"""

BACKEND = "cython"


def compare_from(u, v, Py_ssize_t k, Py_ssize_t n):
    """Compare u and v entrywise from 1-based index k.

    Returns (delta, sign, cost): first differing index (n+1 if the tuples
    agree from k on), the comparison outcome of u vs v, and the number of
    entry comparisons used.
    """
    cdef Py_ssize_t j, cost = 0
    for j in range(k - 1, n):
        cost += 1
        x = u[j]
        y = v[j]
        if x != y:
            return (j + 1, (-1 if x < y else 1), cost)
    return (n + 1, 0, cost)


def locate(list items, list deltas, b, Py_ssize_t n, Py_ssize_t start=0,
           Py_ssize_t hint=1, bint before_equal=True):
    """Find the insertion position of b in items[start:].

    Same contract as the pure-Python twin: returns
    (pos, delta_left, delta_right, elem, dcmps).
    """
    cdef Py_ssize_t t = len(items)
    cdef Py_ssize_t i, dab, dnext, d, d2, elem, dcmps
    cdef int sign, sign2
    if start >= t:
        return (start, None, None, 0, 0)
    d, sign, elem = compare_from(items[start], b, hint, n)
    dcmps = 0
    if sign > 0 or (sign == 0 and before_equal):
        return (start, None, d, elem, dcmps)
    dab = d
    i = start
    while True:
        if i == t - 1:
            return (t, dab, None, elem, dcmps)
        dnext = deltas[i]
        dcmps += 1
        if dnext == n + 1:
            i += 1
            continue
        if dab > dnext:
            return (i + 1, dab, dnext, elem, dcmps)
        if dab < dnext:
            i += 1
            continue
        d2, sign2, cost = compare_from(b, items[i + 1], dab, n)
        elem += cost
        if sign2 < 0:
            return (i + 1, dab, d2, elem, dcmps)
        if sign2 == 0:
            if before_equal:
                return (i + 1, dab, n + 1, elem, dcmps)
            dab = n + 1
        else:
            dab = d2
        i += 1


def merge(list items_a, list deltas_a, list items_b, list deltas_b, Py_ssize_t n):
    """Merge two sorted tuple lists, maintaining the delta sequence.

    Same contract and tie rule as the pure-Python twin: returns
    (items, deltas, sources, elem, dcmps).
    """
    cdef Py_ssize_t i, j, jj, pos, t, s, start, hint, elem, dcmps
    cdef int hsrc, psrc
    cdef bint before_equal
    if not items_a:
        return (list(items_b), list(deltas_b),
                [(1, j) for j in range(len(items_b))], 0, 0)
    if not items_b:
        return (list(items_a), list(deltas_a),
                [(0, i) for i in range(len(items_a))], 0, 0)

    cdef list host, hostd, probes, probed
    if len(items_b) <= len(items_a):
        host, hostd, hsrc = items_a, deltas_a, 0
        probes, probed, psrc = items_b, deltas_b, 1
        before_equal = True
    else:
        host, hostd, hsrc = items_b, deltas_b, 1
        probes, probed, psrc = items_a, deltas_a, 0
        before_equal = False

    cdef list out_items = []
    cdef list out_deltas = []
    cdef list sources = []

    elem = 0
    dcmps = 0
    t = len(host)
    s = len(probes)
    start = 0
    hint = 1
    link_host = None
    link_probe = None
    for j in range(s):
        b = probes[j]
        pos, dl, dr, e, dc = locate(host, hostd, b, n, start, hint, before_equal)
        elem += e
        dcmps += dc
        if pos > start:
            if out_items:
                out_deltas.append(link_host)
            out_items.append(host[start])
            sources.append((hsrc, start))
            for i in range(start + 1, pos):
                out_deltas.append(hostd[i - 1])
                out_items.append(host[i])
                sources.append((hsrc, i))
            out_deltas.append(dl)
            out_items.append(b)
            sources.append((psrc, j))
        else:
            if out_items:
                out_deltas.append(link_probe)
            out_items.append(b)
            sources.append((psrc, j))
        if pos >= t:
            for jj in range(j + 1, s):
                out_deltas.append(probed[jj - 1])
                out_items.append(probes[jj])
                sources.append((psrc, jj))
            return (out_items, out_deltas, sources, elem, dcmps)
        start = pos
        link_host = dr
        if j + 1 < s:
            dnext = probed[j]
            hint = dr if dr < dnext else dnext
            link_probe = dnext
    if out_items:
        out_deltas.append(link_host)
    out_items.append(host[start])
    sources.append((hsrc, start))
    for i in range(start + 1, t):
        out_deltas.append(hostd[i - 1])
        out_items.append(host[i])
        sources.append((hsrc, i))
    return (out_items, out_deltas, sources, elem, dcmps)
