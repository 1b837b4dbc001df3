"""Pure-Python selection scan; mirror of the compiled module _scan.

For every m-bit selection mask (bit i set = green pair kept on edge i+1)
classify the fully black 2-regular subgraph K it induces:

  * Hamiltonian: K is a single cycle through all flags;
  * doubly linkable: K + all red edges and K + all green edges are both
    connected.

Returns the two mask lists.  The compiled twin in _scan.pyx implements the
same contract; keep the two in sync.
"""

IS_COMPILED = False


def _components(n, partner_lists):
    """Component labels of the flag graph with the given partner arrays."""
    label = [-1] * n
    nlabels = 0
    for start in range(n):
        if label[start] != -1:
            continue
        label[start] = nlabels
        stack = [start]
        while stack:
            x = stack.pop()
            for partner in partner_lists:
                y = partner[x]
                if label[y] == -1:
                    label[y] = nlabels
                    stack.append(y)
        nlabels += 1
    return label, nlabels


def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def survey_selections(n, m, rho_r, rho_g, rho_b, edge_of_flag):
    """Scan all 2^m selections; return (hamiltonian_masks, linkable_masks)."""
    comp_r, ncomp_r = _components(n, (rho_r, rho_b))
    comp_g, ncomp_g = _components(n, (rho_g, rho_b))

    ham_masks = []
    link_masks = []
    for mask in range(1 << m):
        # Hamiltonicity: trace the cycle through flag 0, alternating the
        # chosen red/green edge with the black edge.
        x = 0
        length = 0
        while True:
            x = rho_g[x] if (mask >> (edge_of_flag[x] - 1)) & 1 else rho_r[x]
            x = rho_b[x]
            length += 2
            if x == 0:
                break
        if length == n:
            ham_masks.append(mask)

        # K + red connected: green-chosen edges must join up the red/black
        # components (red-chosen and black edges are already inside them).
        ok = True
        if ncomp_r > 1:
            parent = list(range(ncomp_r))
            left = ncomp_r - 1
            for x in range(n):
                if (mask >> (edge_of_flag[x] - 1)) & 1:
                    a = _find(parent, comp_r[x])
                    b = _find(parent, comp_r[rho_g[x]])
                    if a != b:
                        parent[a] = b
                        left -= 1
            ok = left == 0
        if ok and ncomp_g > 1:
            parent = list(range(ncomp_g))
            left = ncomp_g - 1
            for x in range(n):
                if not (mask >> (edge_of_flag[x] - 1)) & 1:
                    a = _find(parent, comp_g[x])
                    b = _find(parent, comp_g[rho_r[x]])
                    if a != b:
                        parent[a] = b
                        left -= 1
            ok = left == 0
        if ok:
            link_masks.append(mask)
    return ham_masks, link_masks
