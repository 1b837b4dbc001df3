# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled selection scan; see _scan_py for the contract."""

from libc.stdlib cimport free, malloc

IS_COMPILED = True


cdef int _find(int *parent, int x) noexcept nogil:
    cdef int root = x, tmp
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        tmp = parent[x]
        parent[x] = root
        x = tmp
    return root


cdef int _label_components(int n, int *pa, int *pb, int *label) noexcept nogil:
    cdef int nlabels = 0, start, x, y, top
    cdef int *stack = <int *> malloc(n * sizeof(int))
    for x in range(n):
        label[x] = -1
    for start in range(n):
        if label[start] != -1:
            continue
        label[start] = nlabels
        stack[0] = start
        top = 1
        while top:
            top -= 1
            x = stack[top]
            y = pa[x]
            if label[y] == -1:
                label[y] = nlabels
                stack[top] = y
                top += 1
            y = pb[x]
            if label[y] == -1:
                label[y] = nlabels
                stack[top] = y
                top += 1
        nlabels += 1
    free(stack)
    return nlabels


def survey_selections(int n, int m, rho_r, rho_g, rho_b, edge_of_flag):
    """Scan all 2^m selections; return (hamiltonian_masks, linkable_masks)."""
    cdef int *rr = <int *> malloc(n * sizeof(int))
    cdef int *rg = <int *> malloc(n * sizeof(int))
    cdef int *rb = <int *> malloc(n * sizeof(int))
    cdef int *bit = <int *> malloc(n * sizeof(int))
    cdef int *comp_r = <int *> malloc(n * sizeof(int))
    cdef int *comp_g = <int *> malloc(n * sizeof(int))
    cdef int *parent = <int *> malloc(n * sizeof(int))
    cdef int i, x, a, b, length, left, ncomp_r, ncomp_g
    cdef unsigned long long mask, nmasks = 1ULL << m
    cdef bint is_ham, ok

    try:
        for i in range(n):
            rr[i] = rho_r[i]
            rg[i] = rho_g[i]
            rb[i] = rho_b[i]
            bit[i] = edge_of_flag[i] - 1
        ncomp_r = _label_components(n, rr, rb, comp_r)
        ncomp_g = _label_components(n, rg, rb, comp_g)

        ham_masks = []
        link_masks = []
        for mask in range(nmasks):
            x = 0
            length = 0
            while True:
                x = rg[x] if (mask >> bit[x]) & 1 else rr[x]
                x = rb[x]
                length += 2
                if x == 0:
                    break
            is_ham = length == n

            ok = True
            if ncomp_r > 1:
                for i in range(ncomp_r):
                    parent[i] = i
                left = ncomp_r - 1
                for x in range(n):
                    if (mask >> bit[x]) & 1:
                        a = _find(parent, comp_r[x])
                        b = _find(parent, comp_r[rg[x]])
                        if a != b:
                            parent[a] = b
                            left -= 1
                ok = left == 0
            if ok and ncomp_g > 1:
                for i in range(ncomp_g):
                    parent[i] = i
                left = ncomp_g - 1
                for x in range(n):
                    if not (mask >> bit[x]) & 1:
                        a = _find(parent, comp_g[x])
                        b = _find(parent, comp_g[rr[x]])
                        if a != b:
                            parent[a] = b
                            left -= 1
                ok = left == 0

            if is_ham:
                ham_masks.append(mask)
            if ok:
                link_masks.append(mask)
        return ham_masks, link_masks
    finally:
        free(rr)
        free(rg)
        free(rb)
        free(bit)
        free(comp_r)
        free(comp_g)
        free(parent)
