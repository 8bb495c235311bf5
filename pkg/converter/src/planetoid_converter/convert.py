"""Dataset conversion with hard count expectations and atomic output."""

from __future__ import annotations

import shutil
import tempfile
from pathlib import Path

from .bundle import BundleError, assemble, load_bundle
from .directed import directed_edge_weights, read_citations, read_content
from .neutral import write_neutral_dataset

# (nodes, weighted edges, classes, features) as reported for these benchmarks
EXPECTED_COUNTS = {
    "cora": (2708, 5429, 7, 1433),
    "citeseer": (3327, 4732, 6, 3703),
    "pubmed": (19717, 44338, 3, 500),
    "cora-directed": (2708, 5429, 7, 1433),
}

TRAIN_FRACTIONS = {"cora": 5.2, "citeseer": 3.6, "pubmed": 0.3, "cora-directed": 5.2}
TRAIN_FRACTION_TOL = 0.2


class ConvertError(Exception):
    """Conversion aborted; no output was written."""


def convert(src, dst, dataset: str, expected: tuple | None = None) -> dict:
    """Convert one dataset; returns the manifest counts.

    Validates everything in memory first and writes the output directory
    atomically (build in a temp dir, then swap), so a failing run leaves
    no partial output behind.
    """
    src, dst = Path(src), Path(dst)
    if expected is None:
        if dataset not in EXPECTED_COUNTS:
            raise ConvertError(f"unknown dataset {dataset!r}; expected one of "
                               f"{sorted(EXPECTED_COUNTS)}")
        expected = EXPECTED_COUNTS[dataset]

    base = "cora" if dataset == "cora-directed" else dataset
    try:
        assembled = assemble(load_bundle(src, base))
        if dataset == "cora-directed":
            papers = read_content(src / "cora.content")
            citations = read_citations(src / "cora.cites")
            edge_weights = directed_edge_weights(papers, citations, assembled)
            directed = True
        else:
            edge_weights = assembled.edge_weights
            directed = False
    except (BundleError, OSError) as exc:
        raise ConvertError(str(exc)) from exc

    total_weight = float(sum(edge_weights.values()))
    n_edges = total_weight if directed else total_weight / 2.0
    counts = (assembled.n_nodes, n_edges, assembled.n_classes,
              assembled.features.shape[1])
    if counts != (expected[0], float(expected[1]), expected[2], expected[3]):
        raise ConvertError(f"{dataset}: counts {counts} do not match the expected "
                           f"{expected}; refusing to write output")

    train_count = sum(1 for t in assembled.tags if t == "train")
    train_classes = {int(assembled.labels[i]) for i, t in enumerate(assembled.tags)
                     if t == "train"}
    if train_classes != set(range(assembled.n_classes)):
        raise ConvertError(f"{dataset}: training split misses classes "
                           f"{set(range(assembled.n_classes)) - train_classes}")
    fraction = 100.0 * train_count / assembled.n_nodes
    target = TRAIN_FRACTIONS.get(dataset)
    if target is not None and abs(fraction - target) > TRAIN_FRACTION_TOL:
        raise ConvertError(f"{dataset}: train fraction {fraction:.2f}% is outside "
                           f"{target}% +/- {TRAIN_FRACTION_TOL}")

    target_dir = dst / dataset
    dst.mkdir(parents=True, exist_ok=True)
    tmp = Path(tempfile.mkdtemp(prefix=f".{dataset}-", dir=dst))
    try:
        manifest = write_neutral_dataset(
            tmp, name=dataset, n_nodes=assembled.n_nodes,
            n_classes=assembled.n_classes, n_features=assembled.features.shape[1],
            directed=directed, edge_weights=edge_weights,
            features_csr=assembled.features, labels=assembled.labels,
            tags=assembled.tags)
        if target_dir.exists():
            shutil.rmtree(target_dir)
        tmp.rename(target_dir)
    except BaseException:
        shutil.rmtree(tmp, ignore_errors=True)
        raise
    return manifest
