"""
Compiled inner loops for label propagation and local node moves.

Every kernel works on raw adjacency arrays of a single node range and
releases the GIL, so several threads can sweep disjoint ranges of one
shared label array at the same time. Scratch arrays (``tally`` /
``affinity`` indexed by label, ``touched`` sized by the maximum degree) are
owned by one worker and are left zeroed on return.
"""
import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def dominant_label_kernel(offsets, targets, weights, labels, v, prefer_smallest, tally, touched):
    """Label of maximal incident weight around ``v``.

    The current label wins every tie it takes part in. Other ties go to the
    smallest label when ``prefer_smallest`` is set, else to the first seen.
    """
    count = 0
    for e in range(offsets[v], offsets[v + 1]):
        label = labels[targets[e]]
        if tally[label] == 0.0:
            touched[count] = label
            count += 1
        tally[label] += weights[e]

    current = labels[v]
    best = current
    best_weight = tally[current]
    for j in range(count):
        label = touched[j]
        weight = tally[label]
        if weight > best_weight:
            best = label
            best_weight = weight
        elif weight == best_weight and prefer_smallest and best != current and label < best:
            best = label

    for j in range(count):
        tally[touched[j]] = 0.0
    return best


@njit(cache=True, nogil=True)
def plp_sweep(offsets, targets, weights, labels, active, next_active, order,
              start, stop, prefer_smallest, tally, touched):
    """One label propagation pass over ``order[start:stop]``.

    Active nodes with at least one neighbor adopt their dominant label. An
    updated node and its neighbors are flagged in ``next_active``.

    Returns:
        (updated, evaluated) node counts
    """
    updated = 0
    evaluated = 0
    for i in range(start, stop):
        v = order[i]
        if not active[v]:
            continue
        if offsets[v] == offsets[v + 1]:
            continue
        evaluated += 1
        best = dominant_label_kernel(
            offsets, targets, weights, labels, v, prefer_smallest, tally, touched
        )
        if best != labels[v]:
            labels[v] = best
            updated += 1
            next_active[v] = True
            for e in range(offsets[v], offsets[v + 1]):
                next_active[targets[e]] = True
    return updated, evaluated


@njit(cache=True, nogil=True)
def count_unstable(offsets, targets, weights, labels, tally, touched):
    """Number of non-isolated nodes whose dominant label differs from their own."""
    unstable = 0
    for v in range(len(offsets) - 1):
        if offsets[v] == offsets[v + 1]:
            continue
        best = dominant_label_kernel(offsets, targets, weights, labels, v, True, tally, touched)
        if best != labels[v]:
            unstable += 1
    return unstable


@njit(cache=True, nogil=True)
def move_sweep(offsets, targets, weights, node_volumes, zeta, community_volumes,
               total_weight, gamma, order, start, stop, prefer_smallest,
               affinity, touched):
    """One local-move pass over ``order[start:stop]``.

    Each node moves to the distinct neighboring community with the largest
    positive modularity gain. Community volumes are updated in place; with
    several workers those updates may race and the caller resynchronizes
    them after the pass.

    Returns:
        Number of moved nodes
    """
    moved = 0
    # gains scaled by 2 * total_weight^2 stay exact for integer weights
    twice_total = 2.0 * total_weight
    for i in range(start, stop):
        u = order[i]
        if offsets[u] == offsets[u + 1]:
            continue
        current = zeta[u]

        count = 0
        for e in range(offsets[u], offsets[u + 1]):
            v = targets[e]
            if v == u:
                continue
            c = zeta[v]
            if affinity[c] == 0.0:
                touched[count] = c
                count += 1
            affinity[c] += weights[e]

        vol_u = node_volumes[u]
        own_affinity = affinity[current]
        own_volume = community_volumes[current] - vol_u
        best = current
        best_gain = 0.0
        for j in range(count):
            c = touched[j]
            if c == current:
                continue
            gain = (affinity[c] - own_affinity) * twice_total \
                + gamma * (own_volume - community_volumes[c]) * vol_u
            if gain > best_gain:
                best = c
                best_gain = gain
            elif gain == best_gain and prefer_smallest and best != current and c < best:
                best = c

        for j in range(count):
            affinity[touched[j]] = 0.0

        if best != current:
            zeta[u] = best
            community_volumes[current] -= vol_u
            community_volumes[best] += vol_u
            moved += 1
    return moved


def make_scratch(label_bound: int, max_degree: int):
    """Zeroed per-worker scratch: (weights by label, touched-label list)."""
    return (
        np.zeros(max(label_bound, 1), dtype=np.float64),
        np.zeros(max(max_degree, 1), dtype=np.int64),
    )
