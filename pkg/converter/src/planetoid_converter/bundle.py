"""Reading and assembling the upstream Planetoid file bundles.

A bundle consists of pickled feature blocks (``x`` labelled training
rows, ``allx`` all non-test rows, ``tx`` test rows), matching one-hot
label blocks (``y``, ``ally``, ``ty``), a pickled adjacency dictionary
(``graph``), and a plain-text permutation file (``test.index``) giving
the graph positions of the test rows in ``tx`` order.

Assembly follows the standard convention: node ids 0..len(allx)-1 carry
the allx rows, test rows are scattered to their listed positions, and
gaps inside the test range (isolated nodes, present in citeseer) become
zero-feature unlabeled rows.  The adjacency dictionary is read as a
multiset: repeated neighbour entries become integer edge weights and
self-loops are kept, so the weighted edge count reproduces the citation
count the benchmark statistics report.
"""

from __future__ import annotations

import pickle
import warnings
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.sparse as sp

PARTS = ("x", "y", "tx", "ty", "allx", "ally", "graph")
VAL_SIZE = 500


class BundleError(Exception):
    """The upstream files are missing or internally inconsistent."""


@dataclass(frozen=True)
class PlanetoidBundle:
    name: str
    x: sp.csr_matrix
    y: np.ndarray
    tx: sp.csr_matrix
    ty: np.ndarray
    allx: sp.csr_matrix
    ally: np.ndarray
    graph: dict
    test_index: np.ndarray


def load_bundle(src, name: str) -> PlanetoidBundle:
    src = Path(src)
    blobs = {}
    for part in PARTS:
        path = src / f"ind.{name}.{part}"
        if not path.exists():
            raise BundleError(f"missing upstream file {path}")
        with open(path, "rb") as fh:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", DeprecationWarning)
                blobs[part] = pickle.load(fh, encoding="latin1")
    index_path = src / f"ind.{name}.test.index"
    if not index_path.exists():
        raise BundleError(f"missing upstream file {index_path}")
    test_index = np.array([int(line) for line in index_path.read_text().split()],
                          dtype=np.int64)

    bundle = PlanetoidBundle(name=name,
                             x=sp.csr_matrix(blobs["x"]), y=np.asarray(blobs["y"]),
                             tx=sp.csr_matrix(blobs["tx"]), ty=np.asarray(blobs["ty"]),
                             allx=sp.csr_matrix(blobs["allx"]), ally=np.asarray(blobs["ally"]),
                             graph=dict(blobs["graph"]), test_index=test_index)
    _check_bundle(bundle)
    return bundle


def _check_bundle(b: PlanetoidBundle) -> None:
    f = b.allx.shape[1]
    if b.x.shape[1] != f or b.tx.shape[1] != f:
        raise BundleError("feature dimensionality differs between blocks")
    c = b.ally.shape[1]
    if b.y.shape[1] != c or b.ty.shape[1] != c:
        raise BundleError("label dimensionality differs between blocks")
    if b.tx.shape[0] != b.test_index.size:
        raise BundleError(f"test block has {b.tx.shape[0]} rows but the index file "
                          f"lists {b.test_index.size}")
    n = len(b.graph)
    if b.test_index.min() < 0 or b.test_index.max() >= n:
        raise BundleError("test index permutation out of range")
    if len(set(b.test_index.tolist())) != b.test_index.size:
        raise BundleError("test index contains duplicates")
    if b.test_index.min() < b.allx.shape[0]:
        raise BundleError("test index overlaps the allx block")


@dataclass(frozen=True)
class AssembledDataset:
    name: str
    n_nodes: int
    n_classes: int
    features: sp.csr_matrix
    labels: np.ndarray        # 0-based; isolated gap nodes get class 0
    tags: list                # train/val/test/unlabeled per node
    edge_weights: Counter     # (src, dst) -> multiplicity, both orientations


def assemble(bundle: PlanetoidBundle) -> AssembledDataset:
    n = len(bundle.graph)
    n_train = bundle.y.shape[0]
    c = bundle.ally.shape[1]
    f = bundle.allx.shape[1]

    features = sp.lil_matrix((n, f))
    features[: bundle.allx.shape[0]] = bundle.allx
    labels = np.zeros(n, dtype=np.int64)
    labels[: bundle.ally.shape[0]] = bundle.ally.argmax(axis=1)
    covered = np.zeros(n, dtype=bool)
    covered[: bundle.allx.shape[0]] = True
    for row, node in enumerate(bundle.test_index):
        features[node] = bundle.tx[row]
        labels[node] = bundle.ty[row].argmax()
        covered[node] = True
    # anything not covered is an isolated placeholder: zero features, class 0

    if n_train + VAL_SIZE > bundle.allx.shape[0]:
        raise BundleError("canonical validation range overlaps the test block")
    tags = ["unlabeled"] * n
    for i in range(n_train):
        tags[i] = "train"
    for i in range(n_train, n_train + VAL_SIZE):
        tags[i] = "val"
    for node in bundle.test_index:
        tags[node] = "test"

    weights = Counter()
    for u, neighbours in bundle.graph.items():
        for v in neighbours:
            weights[(int(u), int(v))] += 1
    for (u, v), w in weights.items():
        if weights.get((v, u), 0) != w:
            raise BundleError(f"adjacency multiset is not symmetric at ({u}, {v})")

    return AssembledDataset(name=bundle.name, n_nodes=n, n_classes=c,
                            features=features.tocsr(), labels=labels, tags=tags,
                            edge_weights=weights)
