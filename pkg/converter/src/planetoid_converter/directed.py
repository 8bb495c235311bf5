"""Align the raw Cora citation list with the Planetoid node indexing.

The raw distribution identifies papers by string ids and carries the
citation directions; the Planetoid files use integer node positions and
an undirected graph.  Papers are matched to nodes by their bag-of-words
feature rows, then by class label, then by neighbourhood structure.
Papers that remain ambiguous after all three passes are structurally
interchangeable (identical features, label and neighbours), so any
deterministic assignment yields the same graph; we assign them in sorted
order.  The result is accepted only if symmetrising the mapped citations
reproduces the Planetoid edge multiset exactly.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from pathlib import Path

import numpy as np

from .bundle import AssembledDataset, BundleError


def read_content(path: Path):
    """paper id -> (nonzero feature indices, label string), in file order."""
    papers = []
    for line in path.read_text().strip().split("\n"):
        parts = line.split("\t")
        pid, label = parts[0], parts[-1]
        vec = np.array([int(v) for v in parts[1:-1]], dtype=np.int8)
        papers.append((pid, tuple(np.nonzero(vec)[0].tolist()), label))
    return papers


def read_citations(path: Path):
    """(cited, citing) pairs as listed in the raw file."""
    pairs = []
    for line in path.read_text().strip().split("\n"):
        cited, citing = line.split()
        pairs.append((cited, citing))
    return pairs


def map_papers_to_nodes(papers, citations, assembled: AssembledDataset) -> dict:
    feats = assembled.features
    node_keys = [tuple(feats.indices[feats.indptr[i]: feats.indptr[i + 1]].tolist())
                 for i in range(assembled.n_nodes)]
    by_key = defaultdict(list)
    for node, key in enumerate(node_keys):
        by_key[key].append(node)

    mapping, used = {}, set()
    for pid, key, _ in papers:
        nodes = by_key.get(key, [])
        if not nodes:
            raise BundleError(f"paper {pid} has no feature match in the benchmark files")
        if len(nodes) == 1:
            mapping[pid] = nodes[0]
            used.add(nodes[0])

    # infer the label-name -> class-index correspondence from unique matches
    label_votes = defaultdict(Counter)
    for pid, _, label in papers:
        if pid in mapping:
            label_votes[label][int(assembled.labels[mapping[pid]])] += 1
    if any(len(votes) != 1 for votes in label_votes.values()):
        raise BundleError("feature-unique papers imply an inconsistent label mapping")
    label_map = {label: next(iter(votes)) for label, votes in label_votes.items()}

    unresolved = []
    for pid, key, label in papers:
        if pid in mapping:
            continue
        cand = [n for n in by_key[key] if n not in used
                and assembled.labels[n] == label_map[label]]
        if len(cand) == 1:
            mapping[pid] = cand[0]
            used.add(cand[0])
        else:
            unresolved.append((pid, cand))

    raw_neighbours = defaultdict(set)
    for cited, citing in citations:
        raw_neighbours[cited].add(citing)
        raw_neighbours[citing].add(cited)
    node_neighbours = defaultdict(set)
    for (u, v) in assembled.edge_weights:
        if u != v:
            node_neighbours[u].add(v)

    for _ in range(5):
        progressed = False
        still = []
        for pid, cand in unresolved:
            cand = [n for n in cand if n not in used]
            mapped = {mapping[q] for q in raw_neighbours[pid] if q in mapping}
            exact = [n for n in cand
                     if mapped <= node_neighbours[n]
                     and len(node_neighbours[n]) == len(raw_neighbours[pid])]
            if len(exact) == 1:
                mapping[pid] = exact[0]
                used.add(exact[0])
                progressed = True
            else:
                still.append((pid, exact or cand))
        unresolved = still
        if not progressed:
            break

    # interchangeable leftovers: deterministic assignment
    for pid, cand in sorted(unresolved):
        free = sorted(n for n in cand if n not in used)
        if not free:
            raise BundleError(f"paper {pid} could not be assigned a node")
        mapping[pid] = free[0]
        used.add(free[0])

    if len(mapping) != assembled.n_nodes or len(used) != assembled.n_nodes:
        raise BundleError("paper-to-node mapping is not a bijection")
    return mapping


def directed_edge_weights(papers, citations, assembled: AssembledDataset) -> Counter:
    """Directed edges in node index space, verified against the
    undirected benchmark graph.

    Edges point from the cited paper to the papers citing it, i.e. along
    the direction in which influence propagates; this orientation is what
    the benchmark's published directed-graph accuracies correspond to.
    """
    mapping = map_papers_to_nodes(papers, citations, assembled)
    directed = Counter()
    for cited, citing in citations:
        directed[(mapping[cited], mapping[citing])] += 1
    symmetrised = Counter()
    for (u, v), w in directed.items():
        symmetrised[(u, v)] += w
        symmetrised[(v, u)] += w
    if symmetrised != assembled.edge_weights:
        raise BundleError("symmetrised citations do not reproduce the benchmark graph")
    return directed
