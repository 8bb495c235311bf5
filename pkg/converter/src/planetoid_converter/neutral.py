"""Canonical writer for the neutral on-disk dataset format.

Implements the format contract directly (sorted rows, "%.17g" floats,
LF endings, sha256 digests, manifest written last) so the emitted
directories are byte-identical across runs and pass the consuming
library's validation.
"""

from __future__ import annotations

import hashlib
from pathlib import Path

DATA_FILES = ("graph.tsv", "features.tsv", "labels.tsv", "split.tsv")


def _fmt(value: float) -> str:
    return "%.17g" % value


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_neutral_dataset(directory, name, n_nodes, n_classes, n_features, directed,
                          edge_weights, features_csr, labels, tags) -> dict:
    """Write all five files; returns the manifest counts for inspection."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    edges = sorted(edge_weights.items())
    lines = [f"{u}\t{v}\t{_fmt(float(w))}" for (u, v), w in edges]
    (directory / "graph.tsv").write_text("".join(l + "\n" for l in lines), encoding="utf-8")

    coo = features_csr.tocoo()
    order = sorted(range(coo.nnz), key=lambda i: (coo.row[i], coo.col[i]))
    flines = [f"{coo.row[i]}\t{coo.col[i]}\t{_fmt(float(coo.data[i]))}"
              for i in order if coo.data[i] != 0]
    (directory / "features.tsv").write_text("".join(l + "\n" for l in flines), encoding="utf-8")

    (directory / "labels.tsv").write_text(
        "".join(f"{i}\t{int(labels[i])}\n" for i in range(n_nodes)), encoding="utf-8")
    (directory / "split.tsv").write_text(
        "".join(f"{i}\t{tags[i]}\n" for i in range(n_nodes)), encoding="utf-8")

    total_weight = float(sum(w for _, w in edges))
    n_edges = total_weight if directed else total_weight / 2.0
    n_edges_str = str(int(n_edges)) if n_edges.is_integer() else _fmt(n_edges)

    manifest_lines = [
        f"name={name}",
        f"n_nodes={n_nodes}",
        f"n_edges={n_edges_str}",
        f"n_classes={n_classes}",
        f"n_features={n_features}",
        f"directed={'true' if directed else 'false'}",
    ]
    manifest_lines += [f"digest_{f.split('.')[0]}={_sha256(directory / f)}" for f in DATA_FILES]
    (directory / "manifest").write_text(
        "".join(l + "\n" for l in manifest_lines), encoding="utf-8")
    return {"n_nodes": n_nodes, "n_edges": n_edges, "n_classes": n_classes,
            "n_features": n_features}
