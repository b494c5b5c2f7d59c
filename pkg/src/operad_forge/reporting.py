"""File-artifact side of the toolkit: DOT drawings, CSV tables, PNG charts.

Tree geometry goes out as Graphviz DOT with the edge-style convention used
throughout: spatial ("wiggly") edges are dashed, planar edges solid.  The
``report`` command-line verb lands here too -- it writes one delimited CSV
summary per stratum with bar charts rendered next to it.  matplotlib is
imported inside the chart writer so the rest of the package stays
import-light.
"""

from __future__ import annotations

import csv
import os

from . import homology, trees
from .trees import Tree

__all__ = ["tree_to_dot", "stratum_rows", "write_report"]


def tree_to_dot(t: Tree, name: str = "tree") -> str:
    """Graphviz source for one tree (spatial edges dashed, planar solid).

    Vertices come out in preorder with stable ids, so the output is
    byte-identical across runs.
    """
    lines = [f'digraph "{name}" {{', '  rankdir="BT";',
             '  node [fontsize=11];']
    counter = [0]

    def new_id():
        counter[0] += 1
        return f"v{counter[0]}"

    def emit(node: Tree) -> str:
        vid = new_id()
        if node[0] == 's':
            lines.append(f'  {vid} [label="s{node[1]}", shape=plaintext];')
            return vid
        if node[0] == 'p':
            lines.append(f'  {vid} [label="o", shape=plaintext];')
            return vid
        if node[0] == 'l':
            lines.append(f'  {vid} [label="l", shape=circle];')
            for c in node[1]:
                cid = emit(c)
                lines.append(f'  {cid} -> {vid} [style=dashed];')
            return vid
        lines.append(f'  {vid} [label="n", shape=box];')
        for c in node[1]:
            cid = emit(c)
            lines.append(f'  {cid} -> {vid} [style=dashed];')
        for c in node[2]:
            cid = emit(c)
            lines.append(f'  {cid} -> {vid} [style=solid];')
        return vid

    root = emit(t)
    if not trees.is_spatial(t):
        # the outgoing planar root edge, drawn to an invisible anchor
        lines.append('  out [label="", shape=none];')
        lines.append(f'  {root} -> out [style=solid];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def stratum_rows(p: int, q: int) -> list[dict]:
    """Flat metric/index/value rows summarising one mixed stratum."""
    rows = []
    for k, v in enumerate(homology.f_vector(p, q)):
        rows.append({"metric": "fvector", "index": k, "value": v})
    for m, b in enumerate(homology.betti(p, q)):
        rows.append({"metric": "betti", "index": m, "value": b})
    rows.append({"metric": "euler", "index": 0,
                 "value": homology.euler_characteristic(p, q)})
    return rows


def _bar_chart(path: str, values, title: str, xlabel: str):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    ax.bar(range(len(values)), values, color="#4878a8")
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_xticks(range(len(values)))
    ax.set_ylabel("count")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def write_report(p: int, q: int, outdir: str = ".") -> list[str]:
    """CSV summary plus two PNG bar charts for the (p, q) stratum.

    Returns the paths written, CSV first.
    """
    os.makedirs(outdir, exist_ok=True)
    rows = stratum_rows(p, q)
    stem = f"stratum_p{p}_q{q}"
    csv_path = os.path.join(outdir, f"{stem}.csv")
    with open(csv_path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["metric", "index", "value"])
        w.writeheader()
        w.writerows(rows)

    fvec = [r["value"] for r in rows if r["metric"] == "fvector"]
    bett = [r["value"] for r in rows if r["metric"] == "betti"]
    f_path = os.path.join(outdir, f"{stem}_fvector.png")
    b_path = os.path.join(outdir, f"{stem}_betti.png")
    _bar_chart(f_path, fvec, f"f-vector, (p,q)=({p},{q})", "codimension")
    _bar_chart(b_path, bett, f"Betti numbers, (p,q)=({p},{q})", "degree")
    return [csv_path, f_path, b_path]
