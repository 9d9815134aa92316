"""Regenerates tests/corpus: small graphs in the erlab text format.

Usage: python3 tools/make_corpus.py [out_dir]
"""
import pathlib
import random
import sys

import networkx as nx


def named_graphs():
    yield "petersen", nx.petersen_graph()
    yield "c5", nx.cycle_graph(5)
    yield "c7", nx.cycle_graph(7)
    yield "k4", nx.complete_graph(4)
    yield "k6", nx.complete_graph(6)
    yield "k33", nx.complete_bipartite_graph(3, 3)
    yield "k222", nx.complete_multipartite_graph(2, 2, 2)
    yield "k3333", nx.complete_multipartite_graph(3, 3, 3, 3)
    yield "wheel8", nx.wheel_graph(8)
    yield "cube", nx.hypercube_graph(3)
    yield "clebsch", nx.convert_node_labels_to_integers(nx.complement(nx.hypercube_graph(4)))
    yield "paley13", nx.paley_graph(13).to_undirected()
    yield "paley17", nx.paley_graph(17).to_undirected()
    yield "icosahedron", nx.icosahedral_graph()
    yield "grid4x4", nx.grid_2d_graph(4, 4)
    yield "empty9", nx.empty_graph(9)
    yield "path11", nx.path_graph(11)


def random_graphs(rng):
    for i in range(24):
        n = rng.randint(6, 24)
        p = rng.choice([0.2, 0.35, 0.5, 0.65, 0.8])
        yield f"gnp{i:02d}_n{n}", nx.gnp_random_graph(n, p, seed=rng.randrange(1 << 30))


def write(path, g):
    g = nx.Graph(g)
    g.remove_edges_from(nx.selfloop_edges(g))
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
    lines = [f"graph {g.number_of_nodes()} {len(edges)}"]
    lines += [f"{u} {v}" for u, v in edges]
    path.write_text("\n".join(lines) + "\n")


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/corpus")
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20240501)
    for name, g in list(named_graphs()) + list(random_graphs(rng)):
        write(out / f"{name}.txt", g)


if __name__ == "__main__":
    main()
